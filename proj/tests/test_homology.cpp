#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include "pathhom/error.hpp"
#include "pathhom/homology.hpp"

#include <random>

using namespace pathhom;

namespace {

Chain e(std::initializer_list<int> p) { return Chain::elementary(Path(p), Ring::Z); }

Chain named(const Digraph& g, std::initializer_list<std::pair<int, std::string>> terms) {
  Chain c(2, Ring::Z);
  for (const auto& [coef, word] : terms) {
    Path p;
    for (char ch : word) p.push_back(g.index_of(std::string(1, ch)));
    c.add_term(p, Rational(coef));
  }
  return c;
}

std::vector<bool> bits(unsigned mask, int n) {
  std::vector<bool> d;
  for (int i = 0; i < n; ++i) d.push_back((mask >> i) & 1u);
  return d;
}

}  // namespace

TEST_CASE("omega bases of small digraphs") {
  auto sq = build_omega(fixtures::square(), 1);
  REQUIRE(sq.omega_dim(2) == 1);
  CHECK(sq.omega_chain(2, 0) == e({0, 1, 3}) - e({0, 2, 3}));
  auto tr = build_omega(fixtures::triangle(), 1);
  REQUIRE(tr.omega_dim(2) == 1);
  CHECK(tr.omega_chain(2, 0) == e({0, 1, 2}));
  auto s5 = build_omega(fixtures::s5(), 1);
  CHECK(s5.omega_dim(1) == 5);
  CHECK(s5.omega_dim(2) == 0);
}

TEST_CASE("omega complex invariants on fixtures") {
  for (auto& [name, g] : fixtures::all()) {
    CAPTURE(name);
    auto cx = build_omega(g, 2);
    CHECK(cx.omega_dim(0) == g.size());
    CHECK(cx.omega_dim(1) == static_cast<int>(g.edge_count()));
    for (int p = 0; p <= cx.top(); ++p) {
      CHECK(cx.omega_dim(p) == oracle::omega_dim(g, p));
      for (int j = 0; j < cx.omega_dim(p); ++j) CHECK(is_omega_member(g, cx.omega_chain(p, j)));
    }
    for (int p = 2; p <= cx.top(); ++p) CHECK((cx.d_omega[p - 1] * cx.d_omega[p]).is_zero());
  }
}

TEST_CASE("homology matches the brute-force oracle") {
  for (auto& [name, g] : fixtures::all()) {
    CAPTURE(name);
    auto q = homology(g, 2, Ring::Q);
    auto z = homology(g, 2, Ring::Z);
    CHECK(q.betti == oracle::betti(g, 2));
    CHECK(z.betti == q.betti);
  }
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    Digraph g = fixtures::random_digraph(rng, 5, 0.3 + 0.05 * (t % 5));
    CHECK(homology(g, 2).betti == oracle::betti(g, 2));
  }
}

TEST_CASE("reference values") {
  CHECK(homology(fixtures::s5(), 2).betti == std::vector<int>{1, 1, 0});
  CHECK(homology(cube_digraph(3), 3).betti == std::vector<int>{1, 0, 0, 0});

  Digraph bp = fixtures::bipyramid();
  auto hb = homology(bp, 2, Ring::Z, true);
  CHECK(hb.betti == std::vector<int>{1, 0, 1});
  CHECK(hb.torsion[2].empty());
  Chain gen = named(bp, {{1, "124"}, {1, "234"}, {1, "314"}, {-1, "125"}, {-1, "235"}, {-1, "315"}});
  REQUIRE(hb.generators[2].size() == 1);
  CHECK((hb.generators[2][0] == gen || hb.generators[2][0] == -gen));
  auto cx = build_omega(bp, 2);
  CHECK(generates_homology(cx, 2, {gen}, Ring::Z));
  CHECK_FALSE(is_boundary(gen, cx, Ring::Z).bounding);

  Digraph oc = fixtures::octahedron();
  auto ho = homology(oc, 2, Ring::Z);
  CHECK(ho.betti == std::vector<int>{1, 0, 1});
  CHECK(ho.torsion[2].empty());
  Chain w = e({0, 2, 4}) - e({0, 2, 5}) - e({0, 3, 4}) + e({0, 3, 5}) - e({1, 2, 4}) + e({1, 2, 5}) +
            e({1, 3, 4}) - e({1, 3, 5});
  CHECK(is_omega_member(oc, w));
  CHECK(boundary(w).is_zero());
  CHECK_FALSE(is_boundary(w, oc, Ring::Q).bounding);
  CHECK(generates_homology(build_omega(oc, 2), 2, {w}, Ring::Z));
}

TEST_CASE("bipyramid edge set is forced by the generator") {
  // Allowedness of the six terms demands exactly these edges, and they
  // already make the generator closed.
  Digraph bp = fixtures::bipyramid();
  std::set<std::pair<std::string, std::string>> needed;
  for (std::string w : {"124", "234", "314", "125", "235", "315"})
    for (int i = 0; i < 2; ++i) needed.emplace(std::string(1, w[i]), std::string(1, w[i + 1]));
  std::set<std::pair<std::string, std::string>> have;
  for (auto [a, b] : bp.edges()) have.emplace(bp.name(a), bp.name(b));
  CHECK(needed == have);
  CHECK(oracle::betti(bp, 2) == std::vector<int>{1, 0, 1});
}

TEST_CASE("octahedron edge set is forced by its 2-cycle") {
  Digraph oc = fixtures::octahedron();
  std::set<std::pair<int, int>> needed;
  for (auto w : {"024", "025", "034", "035", "124", "125", "134", "135"})
    for (int i = 0; i < 2; ++i) needed.emplace(w[i] - '0', w[i + 1] - '0');
  std::set<std::pair<int, int>> have(oc.edges().begin(), oc.edges().end());
  CHECK(needed == have);
}

TEST_CASE("cycle digraph table") {
  Digraph tri = fixtures::triangle();
  Digraph sq = fixtures::square();
  for (int n = 3; n <= 6; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Digraph s = cycle_digraph(bits(mask, n));
      bool special = oracle::isomorphic(s, tri) || oracle::isomorphic(s, sq);
      auto h = homology(s, 2);
      CHECK(h.betti == std::vector<int>{1, special ? 0 : 1, 0});
      Chain w = standard_cycle_path(s);
      CHECK(boundary(w).is_zero());
      CHECK(is_boundary(w, s, Ring::Z).bounding == special);
    }
  }
}

TEST_CASE("standard cycle path") {
  CHECK(standard_cycle_path(fixtures::cyclic_triangle()) == e({0, 1}) + e({1, 2}) + e({2, 0}));
  // square declared in cycle order 0,1,3,2
  Digraph sq = make_digraph({"0", "1", "3", "2"}, {{"0", "1"}, {"1", "3"}, {"0", "2"}, {"2", "3"}});
  Chain w = standard_cycle_path(sq);
  auto idx = [&](const char* s) { return sq.index_of(s); };
  Chain expected = Chain::elementary({idx("0"), idx("1")}, Ring::Z) + Chain::elementary({idx("1"), idx("3")}, Ring::Z) -
                   Chain::elementary({idx("2"), idx("3")}, Ring::Z) - Chain::elementary({idx("0"), idx("2")}, Ring::Z);
  CHECK(w == expected);
  CHECK_THROWS_AS(standard_cycle_path(fixtures::square()), Error);
  CHECK(standard_cycle_path(fixtures::triangle()) == e({0, 1}) + e({1, 2}) - e({0, 2}));
}

TEST_CASE("is_boundary") {
  auto tri = is_boundary(standard_cycle_path(cycle_digraph({true, true, false})), fixtures::triangle(), Ring::Z);
  CHECK(tri.bounding);
  CHECK(tri.witness == e({0, 1, 2}));
  CHECK_FALSE(is_boundary(standard_cycle_path(fixtures::s5()), fixtures::s5(), Ring::Q).bounding);
  auto zero = is_boundary(Chain(1, Ring::Z), fixtures::s5(), Ring::Z);
  CHECK(zero.bounding);
  CHECK(zero.witness.is_zero());
  CHECK_THROWS_AS(is_boundary(e({0, 1}), fixtures::s5(), Ring::Z), Error);
}

TEST_CASE("witnesses have the right boundary") {
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 30; ++t) {
    Digraph g = fixtures::random_digraph(rng, 5, 0.45);
    auto cx = build_omega(g, 1);
    auto h = homology(cx, Ring::Z);
    for (int j = 0; j < cx.omega_dim(2); ++j) {
      Chain b = boundary(cx.omega_chain(2, j));
      auto r = is_boundary(b, cx, Ring::Z);
      REQUIRE(r.bounding);
      CHECK(boundary(r.witness) == b);
    }
  }
}

TEST_CASE("decompose_omega2") {
  auto tri = decompose_omega2(e({0, 1, 2}), fixtures::triangle());
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].kind == Omega2Kind::Triangle);
  auto sq = decompose_omega2(e({0, 1, 3}) - e({0, 2, 3}), fixtures::square());
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].kind == Omega2Kind::Square);
  Digraph dbl = make_digraph({"0", "1"}, {{"0", "1"}, {"1", "0"}});
  auto de = decompose_omega2(e({0, 1, 0}), dbl);
  REQUIRE(de.size() == 1);
  CHECK(de[0].kind == Omega2Kind::DoubleEdge);
  CHECK_THROWS_AS(decompose_omega2(e({0, 1, 3}), fixtures::square()), Error);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    Digraph g = fixtures::random_digraph(rng, 5, 0.4);
    auto cx = build_omega(g, 1);
    Chain w(2, Ring::Z);
    for (int j = 0; j < cx.omega_dim(2); ++j) w += Rational(static_cast<int>(rng() % 5) - 2) * cx.omega_chain(2, j);
    Chain sum(2, Ring::Z);
    for (const auto& term : decompose_omega2(w, g)) sum += Rational(term.multiplicity) * term.element;
    CHECK(sum == w);
  }
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(build_omega(simplex_digraph(7), 3, 50), Error);
}
