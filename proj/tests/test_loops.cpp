#include "doctest.h"
#include "fixtures.hpp"

#include "pathhom/error.hpp"
#include "pathhom/loops.hpp"

#include <random>

using namespace pathhom;

namespace {

LoopWord random_walk(std::mt19937_64& rng, const Digraph& g, int base, int len) {
  std::vector<int> w{base};
  for (int i = 0; i < len; ++i) {
    auto nb = g.neighbors(w.back());
    if (nb.empty() || rng() % 5 == 0)
      w.push_back(w.back());
    else
      w.push_back(nb[rng() % nb.size()]);
  }
  // return the way we came
  for (int i = len - 1; i >= 0; --i) w.push_back(w[static_cast<std::size_t>(i)]);
  return make_loop(g, w);
}

LoopWord replay(LoopWord w, const std::vector<RewriteStep>& steps) {
  for (const auto& s : steps) w = apply_move(w, s);
  return w;
}

}  // namespace

TEST_CASE("loop construction") {
  Digraph g = fixtures::square();
  auto w = parse_loop(g, "0 1 3 2 0");
  CHECK(w.length() == 4);
  CHECK(w.base() == 0);
  CHECK(loop_to_string(w) == "0 1 3 2 0");
  CHECK(parse_loop(g, "0").is_trivial());
  CHECK_THROWS_AS(parse_loop(g, "0 3 0"), Error);
  CHECK_THROWS_AS(parse_loop(g, "0 1"), Error);
  CHECK_THROWS_AS(parse_loop(g, "0 9 0"), Error);
  CHECK_THROWS_AS(make_loop(g, {}), Error);
}

TEST_CASE("triangle and square predicates") {
  Digraph t = fixtures::triangle();
  CHECK(is_triangle(t, 0, 1, 2));
  CHECK(is_triangle(t, 2, 0, 1));
  CHECK_FALSE(is_triangle(fixtures::cyclic_triangle(), 0, 1, 2));
  Digraph s = fixtures::square();
  CHECK(is_square(s, 0, 1, 3, 2));
  CHECK(is_square(s, 1, 3, 2, 0));
  CHECK(is_square(s, 0, 2, 3, 1));
  CHECK_FALSE(is_square(s, 0, 1, 2, 3));
  Digraph cyc4 = cycle_digraph({true, true, true, true});
  CHECK_FALSE(is_square(cyc4, 0, 1, 2, 3));
}

TEST_CASE("contractible loops reduce to the base") {
  CHECK(reduce_loop(parse_loop(fixtures::triangle(), "0 1 2 0")).is_trivial());
  CHECK(reduce_loop(parse_loop(fixtures::square(), "0 1 3 2 0")).is_trivial());
  CHECK(reduce_loop(parse_loop(fixtures::square(), "1 3 2 0 1")).is_trivial());
  CHECK(reduce_loop(parse_loop(fixtures::square(), "0 0 1 0 2 2 0")).is_trivial());
  auto red = reduce_loop_trace(parse_loop(fixtures::square(), "0 1 3 2 0"));
  REQUIRE(red.steps.size() == 2);
  CHECK(red.steps[0].rule == MoveRule::SquareDrop);
  CHECK(red.steps[1].rule == MoveRule::Backtrack);
}

TEST_CASE("non-contractible loops stay put") {
  Digraph c = fixtures::s5();
  auto w = parse_loop(c, "0 1 2 3 4 0");
  CHECK(reduce_loop(w) == w);
  CHECK_FALSE(hurewicz_class(w).bounding);
  Digraph cyc = fixtures::cyclic_triangle();
  auto t = parse_loop(cyc, "0 1 2 0");
  CHECK(reduce_loop(t) == t);
  CHECK_FALSE(hurewicz_class(t).bounding);
  CHECK(hurewicz_class(parse_loop(fixtures::triangle(), "0 1 2 0")).bounding);
}

TEST_CASE("square swap") {
  Digraph s = fixtures::square();
  auto w = parse_loop(s, "0 1 3 1 0");
  RewriteStep swap{MoveRule::SquareSwap, false, 1, {1, 3, 1}, {1, 3, 1}};
  CHECK_FALSE(move_is_valid(w, swap));
  RewriteStep ok{MoveRule::SquareSwap, false, 0, {0, 1, 3}, {0, 2, 3}};
  CHECK(move_is_valid(w, ok));
  CHECK(loop_to_string(apply_move(w, ok)) == "0 2 3 1 0");
  bool found = false;
  for (const auto& m : applicable_moves(w)) found = found || m == ok;
  CHECK(found);
}

TEST_CASE("five-cycle is equivalent to the three-cycle") {
  Digraph g = fixtures::five_to_three();
  auto five = parse_loop(g, "0 1 2 3 4 0");
  auto three = parse_loop(g, "0 5 6 0");
  CHECK(reduce_loop(five) == five);
  auto res = loops_equivalent(five, three);
  REQUIRE(res.verdict == Verdict::Yes);
  CHECK(res.reason == EquivalenceReason::Trace);
  CHECK(replay(five, res.trace) == three);
  // the three-cycle is not contractible
  auto triv = loops_equivalent(three, parse_loop(g, "0"));
  CHECK(triv.verdict == Verdict::No);
  CHECK(triv.reason == EquivalenceReason::HurewiczObstruction);
}

TEST_CASE("search budget") {
  Digraph g = fixtures::five_to_three();
  EquivalenceOptions opt;
  opt.use_obstruction = false;
  opt.max_steps = 3;
  auto res = loops_equivalent(parse_loop(g, "0 5 6 0"), parse_loop(g, "0"), opt);
  CHECK(res.verdict == Verdict::Inconclusive);
  CHECK(res.reason == EquivalenceReason::Budget);
  opt.max_steps = 100000;
  opt.max_len = 3;
  auto ex = loops_equivalent(parse_loop(g, "0 5 6 0"), parse_loop(g, "0"), opt);
  CHECK(ex.verdict == Verdict::Inconclusive);
  CHECK(ex.reason == EquivalenceReason::Exhausted);
}

TEST_CASE("loop algebra") {
  Digraph g = fixtures::five_to_three();
  auto w = parse_loop(g, "0 1 2 3 4 0");
  auto v = parse_loop(g, "0 5 6 0");
  CHECK(reduce_loop(concat(w, inverse(w))).is_trivial());
  CHECK(reduce_loop(concat(inverse(v), v)).is_trivial());
  CHECK(chi(concat(w, v)) == chi(w) + chi(v));
  CHECK(chi(inverse(w)) == -chi(w));
  CHECK_THROWS_AS(concat(w, parse_loop(g, "1 2 1")), Error);
}

TEST_CASE("double edges") {
  Digraph d = make_digraph({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  auto w = parse_loop(d, "a b a");
  CHECK(chi(w).terms().empty());
  CHECK(reduce_loop(w).is_trivial());
  CHECK(hurewicz_class(w).bounding);
}

TEST_CASE("moves are reversible and preserve the Hurewicz class") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph g = fixtures::random_digraph(rng, 5, 0.35);
    auto cx = build_omega(g, 1);
    auto w = random_walk(rng, g, 0, 4);
    auto moves = applicable_moves(w);
    for (std::size_t k = 0; k < moves.size(); k += 3) {
      const auto& m = moves[k];
      REQUIRE(move_is_valid(w, m));
      auto w2 = apply_move(w, m);
      CHECK(apply_move(w2, m.reversed()) == w);
      CHECK(is_boundary(chi(w) - chi(w2), cx, Ring::Z).bounding);
    }
    auto red = reduce_loop_trace(w);
    CHECK(replay(w, red.steps) == red.result);
    CHECK(red.result.length() <= w.length());
    for (const auto& s : red.steps) CHECK_FALSE(s.expansion());
  }
}

TEST_CASE("there-and-back walks are null-homotopic") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph g = fixtures::random_digraph(rng, 6, 0.3);
    CHECK(reduce_loop(random_walk(rng, g, 0, 6)).is_trivial());
  }
}

TEST_CASE("connected components") {
  Digraph g = make_digraph({"a", "b", "c", "d", "e"}, {{"b", "a"}, {"c", "d"}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3});
  CHECK(comps[2] == std::vector<int>{4});
  CHECK(connected_components(fixtures::octahedron()).size() == 1);
}
