#include "pathhom/sperner.hpp"

#include "pathhom/error.hpp"
#include "pathhom/homology.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

namespace pathhom {

namespace {

Edge key(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::map<Edge, std::vector<int>> edge_faces(const Triangulation& t) {
  std::map<Edge, std::vector<int>> faces;
  for (std::size_t f = 0; f < t.triangles.size(); ++f) {
    const auto& tr = t.triangles[f];
    for (int i = 0; i < 3; ++i) faces[key(tr[i], tr[(i + 1) % 3])].push_back(static_cast<int>(f));
  }
  return faces;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadTriangulation, what); }

bool has_third_color(int a, int b, int c) { return a != b && b != c && a != c; }

Triangulation remove_vertex(const Triangulation& t, int x) {
  Triangulation out;
  std::vector<int> remap(t.vertices.size(), -1);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (static_cast<int>(v) == x) continue;
    remap[v] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(t.vertices[v]);
    out.colors.push_back(t.colors[v]);
  }
  for (const auto& tr : t.triangles) {
    if (tr[0] == x || tr[1] == x || tr[2] == x) continue;
    out.triangles.push_back({remap[tr[0]], remap[tr[1]], remap[tr[2]]});
  }
  for (int i = 0; i < 3; ++i) out.corners[i] = remap[t.corners[i]];
  return out;
}

}  // namespace

BoundaryCycle boundary_cycle(const Triangulation& t) {
  const int n = static_cast<int>(t.vertices.size());
  if (static_cast<int>(t.colors.size()) != n) bad("one color per vertex required");
  for (int c : t.corners)
    if (c < 0 || c >= n) bad("corner out of range");
  if (t.corners[0] == t.corners[1] || t.corners[1] == t.corners[2] || t.corners[0] == t.corners[2])
    bad("corners must be distinct");
  if (t.triangles.empty()) bad("no triangles");
  std::set<std::array<int, 3>> seen;
  for (const auto& tr : t.triangles) {
    for (int v : tr)
      if (v < 0 || v >= n) bad("triangle vertex out of range");
    if (tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2]) bad("degenerate triangle");
    auto s = tr;
    std::sort(s.begin(), s.end());
    if (!seen.insert(s).second) bad("repeated triangle");
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::size_t boundary_edges = 0;
  for (const auto& [e, faces] : edge_faces(t)) {
    if (faces.size() > 2) bad("edge " + t.vertices[e.first] + " " + t.vertices[e.second] + " lies in more than two triangles");
    if (faces.size() == 1) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
      ++boundary_edges;
    }
  }
  const int a = t.corners[0], b = t.corners[1], c = t.corners[2];
  for (int v = 0; v < n; ++v)
    if (!adj[v].empty() && adj[v].size() != 2) bad("boundary is not a simple cycle at " + t.vertices[v]);
  if (adj[a].size() != 2) bad("corner A is not on the boundary");
  std::vector<int> cycle{a};
  int prev = a, cur = adj[a][0];
  while (cur != a) {
    cycle.push_back(cur);
    int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != boundary_edges) bad("boundary has more than one component");
  auto pos_b = std::find(cycle.begin(), cycle.end(), b), pos_c = std::find(cycle.begin(), cycle.end(), c);
  if (pos_b == cycle.end() || pos_c == cycle.end()) bad("corners B and C must lie on the boundary");
  if (pos_c < pos_b) std::reverse(cycle.begin() + 1, cycle.end());
  BoundaryCycle bc{cycle, {}};
  for (int v : cycle)
    if (v != a && v != b && v != c) bc.side_vertices.push_back(v);
  return bc;
}

void check_sperner(const Triangulation& t) {
  BoundaryCycle bc = boundary_cycle(t);
  for (std::size_t v = 0; v < t.colors.size(); ++v)
    if (t.colors[v] < 1 || t.colors[v] > 3)
      throw Error(ErrorKind::NotSperner, "color of " + t.vertices[v] + " must be 1, 2 or 3");
  const char* corner_names[3] = {"A", "B", "C"};
  for (int i = 0; i < 3; ++i)
    if (t.colors[t.corners[i]] != i + 1)
      throw Error(ErrorKind::NotSperner, std::string("corner ") + corner_names[i] + " must have color " +
                                             std::to_string(i + 1));
  int side = 0;  // 0: AB, 1: BC, 2: CA
  for (std::size_t i = 1; i < bc.cycle.size(); ++i) {
    const int v = bc.cycle[i];
    if (v == t.corners[1]) {
      side = 1;
      continue;
    }
    if (v == t.corners[2]) {
      side = 2;
      continue;
    }
    const int c1 = side + 1, c2 = (side + 1) % 3 + 1;
    if (t.colors[v] != c1 && t.colors[v] != c2)
      throw Error(ErrorKind::NotSperner, "side vertex " + t.vertices[v] + " has color " + std::to_string(t.colors[v]) +
                                             ", expected " + std::to_string(c1) + " or " + std::to_string(c2));
  }
}

bool is_sperner(const Triangulation& t) {
  try {
    check_sperner(t);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Edge> triangulation_edges(const Triangulation& t) {
  std::vector<Edge> edges;
  for (const auto& [e, faces] : edge_faces(t)) edges.push_back(e);
  return edges;
}

Digraph orient_unchecked(const Triangulation& t) {
  boundary_cycle(t);
  std::vector<Edge> edges;
  for (auto [a, b] : triangulation_edges(t)) {
    const int ca = t.colors[a], cb = t.colors[b];
    if (ca < 1 || ca > 3 || cb < 1 || cb > 3) bad("colors must be 1, 2 or 3");
    if (ca == cb) {
      edges.emplace_back(a, b);
      edges.emplace_back(b, a);
    } else if ((cb - ca + 3) % 3 == 1) {
      edges.emplace_back(a, b);
    } else {
      edges.emplace_back(b, a);
    }
  }
  std::sort(edges.begin(), edges.end());
  return Digraph::from_indices(t.vertices, edges);
}

Digraph orient(const Triangulation& t) {
  check_sperner(t);
  return orient_unchecked(t);
}

std::optional<Triangle> find_tricolor_triangle(const Triangulation& t) {
  for (const auto& tr : t.triangles)
    if (has_third_color(t.colors[tr[0]], t.colors[tr[1]], t.colors[tr[2]])) return tr;
  return std::nullopt;
}

std::size_t count_tricolor_triangles(const Triangulation& t) {
  return static_cast<std::size_t>(std::count_if(t.triangles.begin(), t.triangles.end(), [&](const Triangle& tr) {
    return has_third_color(t.colors[tr[0]], t.colors[tr[1]], t.colors[tr[2]]);
  }));
}

Triangulation perturb_sides(const Triangulation& t) {
  Triangulation cur = t;
  for (;;) {
    BoundaryCycle bc = boundary_cycle(cur);
    if (bc.side_vertices.empty()) return cur;
    const int x = bc.side_vertices.front();
    const auto& cyc = bc.cycle;
    const std::size_t p = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), x) - cyc.begin());
    const int y = cyc[p - 1], z = cyc[(p + 1) % cyc.size()];
    auto faces = edge_faces(cur);
    if (faces.count(key(y, z))) {
      std::array<int, 3> ear{x, y, z};
      std::sort(ear.begin(), ear.end());
      bool is_ear = false;
      for (const auto& tr : cur.triangles) {
        auto s = tr;
        std::sort(s.begin(), s.end());
        is_ear = is_ear || s == ear;
      }
      if (!is_ear) bad("side neighbours of " + cur.vertices[x] + " are already joined");
      cur = remove_vertex(cur, x);
    } else {
      cur.triangles.push_back({y, x, z});
    }
  }
}

Triangulation generate_sperner(int k, std::uint64_t seed) {
  if (k < 1) bad("subdivision order must be positive");
  std::mt19937_64 rng(seed);
  Triangulation t;
  std::vector<std::vector<int>> id(static_cast<std::size_t>(k + 1), std::vector<int>(static_cast<std::size_t>(k + 1), -1));
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i + j <= k; ++i) {
      id[i][j] = static_cast<int>(t.vertices.size());
      t.vertices.push_back("v" + std::to_string(i) + "_" + std::to_string(j));
      int color;
      auto pick = [&](int c1, int c2) { return rng() % 2 == 0 ? c1 : c2; };
      if (i == 0 && j == 0)
        color = 1;
      else if (i == k)
        color = 2;
      else if (j == k)
        color = 3;
      else if (j == 0)
        color = pick(1, 2);
      else if (i == 0)
        color = pick(1, 3);
      else if (i + j == k)
        color = pick(2, 3);
      else
        color = static_cast<int>(rng() % 3) + 1;
      t.colors.push_back(color);
    }
  for (int j = 0; j < k; ++j)
    for (int i = 0; i + j < k; ++i) {
      t.triangles.push_back({id[i][j], id[i + 1][j], id[i][j + 1]});
      if (i + j + 1 < k) t.triangles.push_back({id[i + 1][j], id[i + 1][j + 1], id[i][j + 1]});
    }
  t.corners = {id[0][0], id[k][0], id[0][k]};
  return t;
}

Digraph colored_cycle() { return make_digraph({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}}); }

SpernerReport verify_sperner_maps(const Triangulation& t) {
  check_sperner(t);
  BoundaryCycle bc = boundary_cycle(t);
  if (!bc.side_vertices.empty())
    throw Error(ErrorKind::SideVerticesPresent,
                std::to_string(bc.side_vertices.size()) + " side vertices; run the side perturbation first");
  SpernerReport report;
  Digraph g = orient_unchecked(t);
  Digraph s3 = colored_cycle();
  std::vector<int> fa;
  for (int c : t.colors) fa.push_back(c - 1);
  std::vector<int> ga(t.corners.begin(), t.corners.end());
  report.f_is_map = is_digraph_map(g, s3, fa);
  report.g_is_map = is_digraph_map(s3, g, ga);
  if (report.f_is_map && report.g_is_map) {
    auto f = DigraphMap::make(g, s3, fa);
    auto gm = DigraphMap::make(s3, g, ga);
    report.f_after_g_identity = compose(gm, f) == DigraphMap::identity(s3);
    auto image = make_loop(s3, {f(t.corners[0]), f(t.corners[1]), f(t.corners[2]), f(t.corners[0])});
    report.image_loop_nontrivial = !hurewicz_class(image).bounding;
  }
  report.tricolor = find_tricolor_triangle(t);
  return report;
}

std::optional<ContractionResult> contract_boundary(const Triangulation& t) {
  BoundaryCycle bc = boundary_cycle(t);
  Digraph g = orient_unchecked(t);
  for (const auto& tr : t.triangles)
    if (!is_triangle(g, tr[0], tr[1], tr[2])) return std::nullopt;
  std::vector<int> word = bc.cycle;
  word.push_back(bc.cycle.front());
  LoopWord boundary = make_loop(g, word);
  ContractionResult out{boundary, {}, boundary};
  auto faces = edge_faces(t);
  std::vector<bool> alive(t.triangles.size(), true);
  std::size_t remaining = t.triangles.size();
  while (remaining > 0) {
    const auto& w = out.result.word();
    bool moved = false;
    for (std::size_t i = 0; i + 1 < w.size() && !moved; ++i) {
      const int u = w[i], v = w[i + 1];
      if (u == v) continue;
      auto it = faces.find(key(u, v));
      if (it == faces.end()) continue;
      for (int f : it->second) {
        if (!alive[f]) continue;
        const auto& tr = t.triangles[f];
        const int x = tr[0] != u && tr[0] != v ? tr[0] : tr[1] != u && tr[1] != v ? tr[1] : tr[2];
        RewriteStep s{MoveRule::TriangleDrop, true, static_cast<int>(i), {u, v}, {u, x, v}};
        out.result = apply_move(out.result, s);
        out.steps.push_back(std::move(s));
        alive[f] = false;
        --remaining;
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  Reduction red = reduce_loop_trace(out.result);
  out.result = red.result;
  out.steps.insert(out.steps.end(), red.steps.begin(), red.steps.end());
  return out;
}

Triangulation triangulation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    Triangulation t;
    t.vertices = j.at("vertices").get<std::vector<std::string>>();
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
      if (!index.emplace(t.vertices[i], static_cast<int>(i)).second)
        throw Error(ErrorKind::DuplicateVertex, t.vertices[i]);
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorKind::UnknownVertex, name);
      return it->second;
    };
    for (const auto& tr : j.at("triangles")) {
      auto names = tr.get<std::vector<std::string>>();
      if (names.size() != 3) throw Error(ErrorKind::ParseError, "triangles need three vertices");
      t.triangles.push_back({lookup(names[0]), lookup(names[1]), lookup(names[2])});
    }
    const auto& colors = j.at("colors");
    t.colors.assign(t.vertices.size(), 0);
    if (colors.is_array()) {
      auto list = colors.get<std::vector<int>>();
      if (list.size() != t.vertices.size()) throw Error(ErrorKind::ParseError, "one color per vertex required");
      t.colors = list;
    } else {
      for (const auto& [name, c] : colors.items()) t.colors[static_cast<std::size_t>(lookup(name))] = c.get<int>();
    }
    auto corners = j.at("corners").get<std::vector<std::string>>();
    if (corners.size() != 3) throw Error(ErrorKind::ParseError, "corners must list A, B, C");
    for (int i = 0; i < 3; ++i) t.corners[i] = lookup(corners[static_cast<std::size_t>(i)]);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string triangulation_to_json(const Triangulation& t) {
  nlohmann::ordered_json j;
  j["vertices"] = t.vertices;
  auto& tris = j["triangles"] = nlohmann::ordered_json::array();
  for (const auto& tr : t.triangles) tris.push_back({t.vertices[tr[0]], t.vertices[tr[1]], t.vertices[tr[2]]});
  auto& colors = j["colors"] = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < t.vertices.size(); ++v) colors[t.vertices[v]] = t.colors[v];
  j["corners"] = {t.vertices[t.corners[0]], t.vertices[t.corners[1]], t.vertices[t.corners[2]]};
  return j.dump(2);
}

}  // namespace pathhom
