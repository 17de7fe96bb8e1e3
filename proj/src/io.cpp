#include "pathhom/io.hpp"

#include "pathhom/error.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace pathhom {

namespace {

using ojson = nlohmann::ordered_json;

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::string names_of(const Digraph& g, const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + g.name(vs[i]);
  return s;
}

std::string step_text(const RewriteStep& s, const Digraph& g) {
  std::string t = move_rule_name(s.rule);
  if (s.inverse) t += " (inverse)";
  return t + " at " + std::to_string(s.position) + ": " + names_of(g, s.replaced) + " -> " + names_of(g, s.replacement);
}

ojson step_json(const RewriteStep& s, const Digraph& g) {
  ojson j;
  j["rule"] = move_rule_name(s.rule);
  j["inverse"] = s.inverse;
  j["position"] = s.position;
  j["replaced"] = names_of(g, s.replaced);
  j["replacement"] = names_of(g, s.replacement);
  return j;
}

long long to_ll(const Integer& z) { return z.convert_to<long long>(); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Document parse_document(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<Edge> edges;
  std::optional<char> edge_kind;
  auto fail = [&](int column, const std::string& what) -> void {
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(lineno) + ":" + std::to_string(column) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0].text;
    if (kw == "v") {
      if (tokens.size() != 2) fail(tokens[0].column, "expected 'v NAME'");
      if (!index.emplace(tokens[1].text, static_cast<int>(names.size())).second)
        fail(tokens[1].column, "duplicate vertex " + tokens[1].text);
      names.push_back(tokens[1].text);
    } else if (kw == "e" || kw == "u") {
      if (tokens.size() != 3) fail(tokens[0].column, "expected '" + kw + " A B'");
      if (edge_kind && *edge_kind != kw[0]) fail(tokens[0].column, "cannot mix directed and undirected edges");
      edge_kind = kw[0];
      int ends[2];
      for (int k = 0; k < 2; ++k) {
        auto it = index.find(tokens[k + 1].text);
        if (it == index.end()) fail(tokens[k + 1].column, "unknown vertex " + tokens[k + 1].text);
        ends[k] = it->second;
      }
      if (ends[0] == ends[1]) fail(tokens[2].column, "self-loop at " + tokens[1].text);
      edges.emplace_back(ends[0], ends[1]);
    } else {
      fail(tokens[0].column, "unknown directive " + kw);
    }
  }
  Document d;
  if (edge_kind == 'u') {
    d.mode = DocumentMode::Graph;
    d.graph = UGraph::from_indices(names, edges);
    d.digraph = to_double_digraph(*d.graph);
  } else {
    d.digraph = Digraph::from_indices(names, edges);
  }
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document read_document(const std::string& path) { return parse_document(read_file(path), path); }

std::string dump_digraph(const Digraph& g) {
  std::string s;
  for (const auto& n : g.names()) s += "v " + n + "\n";
  for (auto [a, b] : g.edges()) s += "e " + g.name(a) + " " + g.name(b) + "\n";
  return s;
}

std::string dump_graph(const UGraph& g) {
  std::string s;
  for (const auto& n : g.names()) s += "v " + n + "\n";
  for (auto [a, b] : g.edges()) s += "u " + g.name(a) + " " + g.name(b) + "\n";
  return s;
}

std::string dump_document(const Document& d) {
  return d.mode == DocumentMode::Graph ? dump_graph(*d.graph) : dump_digraph(d.digraph);
}

std::string homology_text(const HomologyResult& r, const Digraph& g) {
  std::string s;
  for (int p = 0; p <= r.max_dim; ++p) {
    if (p) s += ", ";
    s += "H" + std::to_string(p) + ": " + std::to_string(r.betti[static_cast<std::size_t>(p)]);
    if (r.ring == Ring::Z && static_cast<std::size_t>(p) < r.torsion.size())
      for (const auto& t : r.torsion[static_cast<std::size_t>(p)]) s += " + Z/" + t.str();
  }
  s += "\n";
  for (std::size_t p = 0; p < r.generators.size(); ++p)
    for (std::size_t k = 0; k < r.generators[p].size(); ++k)
      s += "H" + std::to_string(p) + "[" + std::to_string(k) + "] = " + to_string(r.generators[p][k], g) + "\n";
  return s;
}

std::string homology_json(const HomologyResult& r, const Digraph& g) {
  ojson j;
  j["ring"] = ring_name(r.ring);
  j["max_dim"] = r.max_dim;
  j["betti"] = r.betti;
  if (r.ring == Ring::Z) {
    auto& tor = j["torsion"] = ojson::array();
    for (const auto& ts : r.torsion) {
      ojson row = ojson::array();
      for (const auto& t : ts) row.push_back(to_ll(t));
      tor.push_back(row);
    }
  }
  if (!r.generators.empty()) {
    auto& gens = j["generators"] = ojson::array();
    for (const auto& gs : r.generators) {
      ojson row = ojson::array();
      for (const auto& c : gs) row.push_back(to_string(c, g));
      gens.push_back(row);
    }
  }
  return j.dump(2) + "\n";
}

std::string reduction_text(const ReductionTrace& t) {
  std::string s = std::string("contractible: ") + (t.reduced_to_point() ? "yes" : "undetermined") + "; removed: ";
  if (t.removed.empty()) s += "none";
  for (std::size_t i = 0; i < t.removed.size(); ++i) s += (i ? " " : "") + t.removed[i].vertex;
  s += "\n";
  for (const auto& st : t.removed)
    s += "  " + st.vertex + " onto " + st.witness + " (" + reduction_rule_name(st.rule) + ")\n";
  const int n = t.residual.size();
  s += "residual: " + std::to_string(n) + (n == 1 ? " vertex, " : " vertices, ") +
       std::to_string(t.residual.edge_count()) + " edges\n";
  return s;
}

std::string reduction_json(const ReductionTrace& t) {
  ojson j;
  j["contractible"] = t.reduced_to_point() ? "yes" : "undetermined";
  auto& removed = j["removed"] = ojson::array();
  for (const auto& st : t.removed) {
    ojson e;
    e["vertex"] = st.vertex;
    e["witness"] = st.witness;
    e["rule"] = reduction_rule_name(st.rule);
    removed.push_back(e);
  }
  j["residual"] = t.residual.names();
  return j.dump(2) + "\n";
}

Pi1Report pi1_report(const std::vector<LoopWord>& loops, const EquivalenceOptions& options) {
  Pi1Report r;
  r.loops = loops;
  if (loops.empty()) return r;
  auto cx = build_omega(loops.front().digraph(), 1);
  for (const auto& w : loops) {
    r.reductions.push_back(reduce_loop_trace(w));
    r.hurewicz_trivial.push_back(hurewicz_class(w, cx).bounding);
  }
  if (loops.size() == 2) r.equivalence = loops_equivalent(loops[0], loops[1], options);
  return r;
}

std::string pi1_text(const Pi1Report& r) {
  std::string s;
  for (std::size_t i = 0; i < r.loops.size(); ++i)
    s += "reduced: " + loop_to_string(r.reductions[i].result) +
         "; hurewicz: " + (r.hurewicz_trivial[i] ? "trivial" : "nontrivial") + "\n";
  if (r.equivalence) {
    const auto& e = *r.equivalence;
    s += std::string("equivalent: ") + verdict_name(e.verdict) + " (" + equivalence_reason_name(e.reason) + ")\n";
    const Digraph& g = r.loops.front().digraph();
    for (const auto& st : e.trace) s += "  " + step_text(st, g) + "\n";
  }
  return s;
}

std::string pi1_json(const Pi1Report& r) {
  ojson j;
  auto& loops = j["loops"] = ojson::array();
  for (std::size_t i = 0; i < r.loops.size(); ++i) {
    ojson l;
    l["word"] = loop_to_string(r.loops[i]);
    l["reduced"] = loop_to_string(r.reductions[i].result);
    l["hurewicz"] = r.hurewicz_trivial[i] ? "trivial" : "nontrivial";
    auto& steps = l["steps"] = ojson::array();
    for (const auto& st : r.reductions[i].steps) steps.push_back(step_json(st, r.loops[i].digraph()));
    loops.push_back(l);
  }
  if (r.equivalence) {
    const auto& e = *r.equivalence;
    ojson q;
    q["status"] = verdict_name(e.verdict);
    q["reason"] = equivalence_reason_name(e.reason);
    q["explored"] = e.explored;
    auto& trace = q["trace"] = ojson::array();
    for (const auto& st : e.trace) trace.push_back(step_json(st, r.loops.front().digraph()));
    j["equivalence"] = q;
  }
  return j.dump(2) + "\n";
}

SpernerRun sperner_run(const Triangulation& t) {
  SpernerRun run;
  check_sperner(t);
  run.input = t;
  run.side_vertices = boundary_cycle(t).side_vertices.size();
  run.perturbed = perturb_sides(t);
  run.report = verify_sperner_maps(run.perturbed);
  run.report.tricolor = find_tricolor_triangle(t);
  return run;
}

std::string sperner_text(const SpernerRun& r) {
  const auto& t = r.input;
  std::string s = "tricolor: ";
  if (r.report.tricolor) {
    const auto& tr = *r.report.tricolor;
    s += t.vertices[tr[0]] + " " + t.vertices[tr[1]] + " " + t.vertices[tr[2]];
  } else {
    s += "none";
  }
  s += "\nside vertices moved inside: " + std::to_string(r.side_vertices) + "\n";
  s += "f is a digraph map: " + yes_no(r.report.f_is_map) + "; g is a digraph map: " + yes_no(r.report.g_is_map) +
       "; f after g is the identity: " + yes_no(r.report.f_after_g_identity) + "\n";
  s += std::string("boundary loop image in S3: ") + (r.report.image_loop_nontrivial ? "nontrivial" : "trivial") + "\n";
  return s;
}

std::string sperner_json(const SpernerRun& r) {
  ojson j;
  const auto& t = r.input;
  if (r.report.tricolor) {
    const auto& tr = *r.report.tricolor;
    j["tricolor"] = {t.vertices[tr[0]], t.vertices[tr[1]], t.vertices[tr[2]]};
  } else {
    j["tricolor"] = nullptr;
  }
  j["tricolor_count"] = count_tricolor_triangles(t);
  j["side_vertices"] = r.side_vertices;
  j["f_is_map"] = r.report.f_is_map;
  j["g_is_map"] = r.report.g_is_map;
  j["f_after_g_identity"] = r.report.f_after_g_identity;
  j["boundary_image"] = r.report.image_loop_nontrivial ? "nontrivial" : "trivial";
  return j.dump(2) + "\n";
}

}  // namespace pathhom
