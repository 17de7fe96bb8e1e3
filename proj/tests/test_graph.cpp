#include "doctest.h"
#include "oracle.hpp"

#include "pathhom/error.hpp"
#include "pathhom/graph.hpp"

#include <random>

using namespace pathhom;

namespace {

UGraph random_graph(std::mt19937_64& rng, int n, double density) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (u(rng) < density) edges.emplace_back(a, b);
  return UGraph::from_indices(names, edges);
}

UGraph tree() {
  return UGraph::make({"r", "a", "b", "c", "d", "e"}, {{"r", "a"}, {"r", "b"}, {"a", "c"}, {"a", "d"}, {"b", "e"}});
}

}  // namespace

TEST_CASE("double digraph round trip") {
  UGraph e = UGraph::make({"0", "1"}, {{"0", "1"}});
  Digraph d = to_double_digraph(e);
  CHECK(d.edge_count() == 2);
  CHECK(d.has_edge(0, 1));
  CHECK(d.has_edge(1, 0));
  CHECK(to_double_digraph(undirected_cycle(3)).edge_count() == 6);
  CHECK(from_double_digraph(d) == e);
  CHECK(from_double_digraph(to_double_digraph(undirected_cycle(5))) == undirected_cycle(5));
  CHECK_THROWS_AS(from_double_digraph(interval_digraph()), Error);
  CHECK_THROWS_AS(UGraph::make({"a"}, {{"a", "a"}}), Error);
  CHECK_THROWS_AS(UGraph::make({"a"}, {{"a", "b"}}), Error);
  CHECK(UGraph::make({"a", "b"}, {{"a", "b"}, {"b", "a"}}).edges().size() == 1);
}

TEST_CASE("graph homology against the oracle") {
  auto t = graph_homology(tree(), 2);
  CHECK(t.betti == std::vector<int>{1, 0, 0});
  CHECK(oracle::betti(to_double_digraph(tree()), 2) == t.betti);
  auto s3 = graph_homology(undirected_cycle(3), 2);
  CHECK(s3.betti == std::vector<int>{1, 0, 0});
  auto s4 = graph_homology(undirected_cycle(4), 2);
  CHECK(s4.betti == std::vector<int>{1, 0, 0});
  for (int n = 5; n <= 6; ++n) {
    auto s = graph_homology(undirected_cycle(n), 2, Ring::Z);
    CHECK(s.betti == std::vector<int>{1, 1, 0});
    CHECK(oracle::betti(to_double_digraph(undirected_cycle(n)), 2) == s.betti);
  }
}

TEST_CASE("O preserves products") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    UGraph g = random_graph(rng, 1 + static_cast<int>(rng() % 4), 0.5);
    UGraph h = random_graph(rng, 1 + static_cast<int>(rng() % 4), 0.5);
    CHECK(to_double_digraph(graph_product(g, h)) == cartesian_product(to_double_digraph(g), to_double_digraph(h)));
  }
}

TEST_CASE("graph homotopy") {
  UGraph star = UGraph::make({"x", "y", "z", "a"}, {{"a", "x"}, {"a", "y"}, {"a", "z"}, {"x", "y"}});
  auto red = graph_reduce(star);
  CHECK(red.reduced_to_point());
  CHECK(graph_homology(star, 2).betti == std::vector<int>{1, 0, 0});
  auto s5 = graph_reduce(undirected_cycle(5));
  CHECK(s5.removed.empty());
  CHECK(s5.residual.size() == 5);

  UGraph c = undirected_cycle(5);
  auto id = graph_map(c, c, {0, 1, 2, 3, 4});
  CHECK(graph_one_step_homotopic(id, id));
  auto shift = graph_map(c, c, {1, 2, 3, 4, 0});
  CHECK(graph_one_step_homotopic(id, shift));
  auto konst = graph_map(c, c, {0, 0, 0, 0, 0});
  CHECK_FALSE(graph_one_step_homotopic(id, konst));
  HomotopyOptions opt;
  opt.exhaustive = true;
  CHECK(graph_homotopic(id, konst, opt).verdict == Verdict::No);
  CHECK_THROWS_AS(graph_map(c, UGraph::make({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}}), {0, 0, 0, 0, 2}), Error);
  auto folded = graph_map(star, star, {3, 3, 3, 3});
  CHECK(graph_homotopic(DigraphMap::identity(to_double_digraph(star)), folded).verdict == Verdict::Yes);
  CHECK_THROWS_AS(graph_one_step_homotopic(DigraphMap::identity(interval_digraph()),
                                           DigraphMap::identity(interval_digraph())),
                  Error);
}

TEST_CASE("graph homology is invariant under reduction") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    UGraph g = random_graph(rng, 5, 0.5);
    auto red = graph_reduce(g);
    CHECK(homology(red.residual, 2).betti == graph_homology(g, 2).betti);
  }
}
