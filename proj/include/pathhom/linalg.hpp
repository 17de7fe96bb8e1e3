#pragma once

#include "pathhom/arith.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace pathhom {

using IntVec = std::map<int, Integer>;
using RatVec = std::map<int, Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix from_columns(int rows, const std::vector<IntVec>& columns);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Integer& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntVec column(int c) const;
  std::vector<IntVec> columns() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

RatVec to_rational(const IntVec& v);

// Z-basis of { x in Z^n : sum_j x_j columns[j] = 0 } where n = columns.size().
// The result is saturated and returned in Hermite normal form.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& columns);

// Column Hermite normal form of the lattice spanned by the given vectors:
// pivot rows strictly increase, pivots are positive, entries of earlier
// columns in a later pivot row lie in [0, pivot). Zero vectors are dropped.
std::vector<IntVec> hermite_basis(std::vector<IntVec> vectors);

// Coordinates of x in a Hermite basis, or nothing if x is outside its span.
std::optional<std::vector<Rational>> hermite_coordinates(const std::vector<IntVec>& basis, RatVec x);

// Incremental row echelon form over Q. Each stored vector remembers how it
// was combined from the inserted vectors.
class RationalEchelon {
 public:
  // Returns true when v is independent of everything inserted before.
  bool insert(const RatVec& v);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t inserted() const { return count_; }
  bool contains(const RatVec& v) const;
  // Solves v = sum y_i inserted_i if possible.
  std::optional<RatVec> solve(const RatVec& v) const;

 private:
  struct Row {
    RatVec vec;
    RatVec combo;
  };
  void reduce(RatVec& v, RatVec& combo) const;
  std::map<int, Row> pivots_;
  std::size_t count_ = 0;
};

std::size_t rank_q(const std::vector<IntVec>& columns);

struct SmithForm {
  std::vector<Integer> diagonal;  // nonzero invariant factors, each dividing the next
  IntMatrix P;                    // S = P * A * Q
  IntMatrix Q;
};

SmithForm smith_normal_form(const IntMatrix& a, bool with_transforms = false);

// Integral solution of A y = x, if one exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& x);

}  // namespace pathhom
