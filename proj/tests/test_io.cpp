#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include "pathhom/error.hpp"
#include "pathhom/io.hpp"

#include <random>

using namespace pathhom;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_document(text, "t.dg");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse digraph documents") {
  Document d = parse_document("# comment\nv a\n\nv b  # trailing\ne a b\n");
  CHECK(d.mode == DocumentMode::Digraph);
  CHECK(d.digraph == make_digraph({"a", "b"}, {{"a", "b"}}));
  Document u = parse_document("v a\nv b\nu a b\n");
  CHECK(u.mode == DocumentMode::Graph);
  CHECK(u.digraph.edge_count() == 2);
  CHECK(u.graph->edges().size() == 1);
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error("v a\ne a c\n") == "ParseError: t.dg:2:5: unknown vertex c");
  CHECK(parse_error("v a\nv a\n") == "ParseError: t.dg:2:3: duplicate vertex a");
  CHECK(parse_error("v a\n  e a a\n") == "ParseError: t.dg:2:7: self-loop at a");
  CHECK(parse_error("v a\nv b\ne a b\nu a b\n") == "ParseError: t.dg:4:1: cannot mix directed and undirected edges");
  CHECK(parse_error("x\n") == "ParseError: t.dg:1:1: unknown directive x");
  CHECK(parse_error("v\n") == "ParseError: t.dg:1:1: expected 'v NAME'");
  CHECK_THROWS_AS(read_document("/nonexistent/file.dg"), Error);
}

TEST_CASE("dumps re-parse to the same digraph") {
  for (const auto& [name, g] : fixtures::all()) {
    CAPTURE(name);
    CHECK(parse_document(dump_digraph(g)).digraph == g);
  }
  Digraph cyl = cylinder(fixtures::s5());
  CHECK(parse_document(dump_digraph(cyl)).digraph == cyl);
  UGraph c = undirected_cycle(6);
  Document d = parse_document(dump_graph(c));
  CHECK(*d.graph == c);
  CHECK(dump_document(d) == dump_graph(c));
}

TEST_CASE("homology report") {
  Digraph s5 = fixtures::s5();
  CHECK(homology_text(homology(s5, 2), s5) == "H0: 1, H1: 1, H2: 0\n");
  auto z = homology(fixtures::octahedron(), 2, Ring::Z, true);
  std::string text = homology_text(z, fixtures::octahedron());
  CHECK(text.rfind("H0: 1, H1: 0, H2: 1\n", 0) == 0);
  CHECK(text.find("H2[0] = ") != std::string::npos);
  CHECK(homology_json(z, fixtures::octahedron()) == homology_json(homology(fixtures::octahedron(), 2, Ring::Z, true),
                                                                 fixtures::octahedron()));
}

TEST_CASE("reduction and pi1 reports") {
  auto tree = find_reduction(fixtures::directed_tree());
  CHECK(reduction_text(tree).rfind("contractible: yes; removed: ", 0) == 0);
  CHECK(reduction_text(find_reduction(fixtures::s5())).rfind("contractible: undetermined; removed: none", 0) == 0);

  Digraph t = make_digraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto r = pi1_report({parse_loop(t, "a b c a")}, {});
  CHECK(pi1_text(r) == "reduced: a; hurewicz: trivial\n");
  auto s = pi1_report({parse_loop(fixtures::s5(), "0 1 2 3 4 0")}, {});
  CHECK(pi1_text(s) == "reduced: 0 1 2 3 4 0; hurewicz: nontrivial\n");

  Digraph g = fixtures::five_to_three();
  EquivalenceOptions opt;
  opt.max_steps = 2;
  auto inc = pi1_report({parse_loop(g, "0 1 2 3 4 0"), parse_loop(g, "0 5 6 0")}, opt);
  CHECK(pi1_json(inc).find("\"status\": \"inconclusive\"") != std::string::npos);
  auto eq = pi1_report({parse_loop(g, "0 1 2 3 4 0"), parse_loop(g, "0 5 6 0")}, {});
  CHECK(pi1_text(eq).find("equivalent: yes (trace)") != std::string::npos);
  CHECK(pi1_json(eq) == pi1_json(pi1_report({parse_loop(g, "0 1 2 3 4 0"), parse_loop(g, "0 5 6 0")}, {})));
}

TEST_CASE("sperner report") {
  auto run = sperner_run(generate_sperner(4, 1));
  CHECK(run.report.tricolor.has_value());
  CHECK(sperner_text(run).find("boundary loop image in S3: nontrivial") != std::string::npos);
  CHECK(sperner_json(run) == sperner_json(sperner_run(generate_sperner(4, 1))));
}
