#include "doctest.h"

#include "pathhom/linalg.hpp"

#include <random>

using namespace pathhom;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int spread) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<int> d(-spread, spread);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng() % 3 == 0) m.at(r, c) = d(rng);
  return m;
}

Integer det2(const IntMatrix& m) { return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); }

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  IntMatrix a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 4;
  a.at(1, 0) = 6;
  a.at(1, 1) = 8;
  auto s = smith_normal_form(a, true);
  CHECK(s.diagonal == std::vector<Integer>{2, 4});
  CHECK((det2(s.P) == 1 || det2(s.P) == -1));
  IntMatrix d = s.P * a * s.Q;
  CHECK(d.at(0, 0) == 2);
  CHECK(d.at(1, 1) == 4);
  CHECK(d.at(0, 1) == 0);
  CHECK(d.at(1, 0) == 0);
}

TEST_CASE("smith transforms diagonalize random matrices") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    IntMatrix a = random_matrix(rng, 1 + t % 6, 1 + (t / 3) % 6, 6);
    auto s = smith_normal_form(a, true);
    IntMatrix d = s.P * a * s.Q;
    for (int r = 0; r < d.rows(); ++r)
      for (int c = 0; c < d.cols(); ++c) {
        if (r == c && static_cast<std::size_t>(r) < s.diagonal.size())
          CHECK(d.at(r, c) == s.diagonal[r]);
        else
          CHECK(d.at(r, c) == 0);
      }
    for (std::size_t i = 1; i < s.diagonal.size(); ++i) CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
    CHECK(s.diagonal.size() == rank_q(a.columns()));
  }
}

TEST_CASE("integer kernel is saturated") {
  // 2x - 2y = 0 : kernel over Z is spanned by (1,1)
  std::vector<IntVec> cols{{{0, Integer(2)}}, {{0, Integer(-2)}}};
  auto k = integer_kernel(cols);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == IntVec{{0, Integer(1)}, {1, Integer(1)}});

  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    IntMatrix a = random_matrix(rng, 1 + t % 5, 2 + t % 7, 3);
    auto cols2 = a.columns();
    auto ker = integer_kernel(cols2);
    CHECK(ker.size() + rank_q(cols2) == static_cast<std::size_t>(a.cols()));
    IntMatrix kmat = IntMatrix::from_columns(a.cols(), ker);
    CHECK((a * kmat).is_zero());
    auto s = smith_normal_form(kmat);
    for (const auto& d : s.diagonal) CHECK(d == 1);
  }
}

TEST_CASE("hermite basis is canonical") {
  std::vector<IntVec> a{{{0, Integer(2)}, {1, Integer(3)}}, {{0, Integer(4)}, {1, Integer(1)}}};
  std::vector<IntVec> b{{{0, Integer(2)}, {1, Integer(3)}}, {{0, Integer(6)}, {1, Integer(4)}}};
  CHECK(hermite_basis(a) == hermite_basis(b));
  auto h = hermite_basis(a);
  auto c = hermite_coordinates(h, RatVec{{0, Rational(4)}, {1, Rational(1)}});
  REQUIRE(c.has_value());
  CHECK_FALSE(hermite_coordinates(h, RatVec{{2, Rational(1)}}).has_value());
}

TEST_CASE("rational echelon solves") {
  RationalEchelon e;
  CHECK(e.insert({{0, Rational(1)}, {1, Rational(1)}}));
  CHECK(e.insert({{1, Rational(1)}, {2, Rational(1)}}));
  CHECK_FALSE(e.insert({{0, Rational(1)}, {2, Rational(-1)}}));
  auto y = e.solve({{0, Rational(2)}, {1, Rational(3)}, {2, Rational(1)}});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == 2);
  CHECK((*y)[1] == 1);
  CHECK_FALSE(e.solve({{2, Rational(1)}}).has_value());
}

TEST_CASE("integer solve") {
  IntMatrix a(1, 1);
  a.at(0, 0) = 2;
  CHECK_FALSE(solve_integer(a, {Integer(1)}).has_value());
  auto y = solve_integer(a, {Integer(4)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == 2);
}
