#include "pathhom/linalg.hpp"

#include "pathhom/error.hpp"

#include <algorithm>
#include <utility>

namespace pathhom {

namespace {

template <class Vec, class Scalar>
void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

// Reduce the columns in `list` (all nonzero at row r) by integer column
// operations until one column is left nonzero at r. Columns that reach zero at
// r are passed to `release`. `apply` performs c -= q * p on a column pair.
template <class Lead, class Apply, class Release>
int euclid_at_row(std::vector<int> list, int r, Lead lead, Apply apply, Release release) {
  while (list.size() > 1) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < list.size(); ++i)
      if (abs_value(lead(list[i], r)) < abs_value(lead(list[best], r))) best = i;
    const int p = list[best];
    std::vector<int> kept{p};
    for (int c : list) {
      if (c == p) continue;
      Integer q = lead(c, r) / lead(p, r);
      apply(c, p, q);
      if (lead(c, r) == 0)
        release(c);
      else
        kept.push_back(c);
    }
    list = std::move(kept);
  }
  return list.front();
}

}  // namespace

IntMatrix IntMatrix::from_columns(int rows, const std::vector<IntVec>& columns) {
  IntMatrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : columns[c]) {
      if (r < 0 || r >= rows) throw Error(ErrorKind::Mismatch, "column entry outside matrix");
      m.at(r, c) = v;
    }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVec IntMatrix::column(int c) const {
  IntVec v;
  for (int r = 0; r < rows_; ++r)
    if (at(r, c) != 0) v.emplace(r, at(r, c));
  return v;
}

std::vector<IntVec> IntMatrix::columns() const {
  std::vector<IntVec> cols;
  for (int c = 0; c < cols_; ++c) cols.push_back(column(c));
  return cols;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::Mismatch, "matrix product dimensions");
  IntMatrix m(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < other.cols_; ++j)
        if (other.at(k, j) != 0) m.at(i, j) += at(i, k) * other.at(k, j);
    }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

RatVec to_rational(const IntVec& v) {
  RatVec r;
  for (const auto& [k, x] : v) r.emplace(k, Rational(x));
  return r;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& columns) {
  struct Col {
    IntVec m;
    IntVec u;
  };
  std::vector<Col> cols(columns.size());
  std::vector<int> kernel;
  std::map<int, std::vector<int>> buckets;
  auto place = [&](int j) {
    if (cols[j].m.empty())
      kernel.push_back(j);
    else
      buckets[cols[j].m.begin()->first].push_back(j);
  };
  for (std::size_t j = 0; j < columns.size(); ++j) {
    cols[j].m = columns[j];
    cols[j].u.emplace(static_cast<int>(j), Integer(1));
    place(static_cast<int>(j));
  }
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const int r = node.key();
    euclid_at_row(
        std::move(node.mapped()), r,
        [&](int c, int row) -> Integer {
          auto it = cols[c].m.find(row);
          return it == cols[c].m.end() ? Integer(0) : it->second;
        },
        [&](int c, int p, const Integer& q) {
          axpy(cols[c].m, Integer(-q), cols[p].m);
          axpy(cols[c].u, Integer(-q), cols[p].u);
        },
        place);
  }
  std::vector<IntVec> basis;
  for (int j : kernel) basis.push_back(std::move(cols[j].u));
  return hermite_basis(std::move(basis));
}

std::vector<IntVec> hermite_basis(std::vector<IntVec> vectors) {
  std::map<int, std::vector<int>> buckets;
  auto place = [&](int j) {
    if (!vectors[j].empty()) buckets[vectors[j].begin()->first].push_back(j);
  };
  for (std::size_t j = 0; j < vectors.size(); ++j) place(static_cast<int>(j));
  std::vector<int> retired;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const int r = node.key();
    const int p = euclid_at_row(
        std::move(node.mapped()), r,
        [&](int c, int row) -> Integer {
          auto it = vectors[c].find(row);
          return it == vectors[c].end() ? Integer(0) : it->second;
        },
        [&](int c, int piv, const Integer& q) { axpy(vectors[c], Integer(-q), vectors[piv]); },
        place);
    if (vectors[p].at(r) < 0)
      for (auto& [k, x] : vectors[p]) x = -x;
    const Integer pivot = vectors[p].at(r);
    for (int l : retired) {
      auto it = vectors[l].find(r);
      if (it == vectors[l].end()) continue;
      Integer q = floor_div(it->second, pivot);
      axpy(vectors[l], Integer(-q), vectors[p]);
    }
    retired.push_back(p);
  }
  std::vector<IntVec> basis;
  basis.reserve(retired.size());
  for (int j : retired) basis.push_back(std::move(vectors[j]));
  return basis;
}

std::optional<std::vector<Rational>> hermite_coordinates(const std::vector<IntVec>& basis, RatVec x) {
  std::vector<Rational> coords(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& [r, pivot] = *basis[j].begin();
    auto it = x.find(r);
    if (it == x.end()) continue;
    Rational c = it->second / Rational(pivot);
    coords[j] = c;
    for (const auto& [k, v] : basis[j]) {
      auto [jt, inserted] = x.emplace(k, -c * v);
      if (!inserted) {
        jt->second -= c * v;
        if (jt->second == 0) x.erase(jt);
      }
    }
  }
  if (!x.empty()) return std::nullopt;
  return coords;
}

void RationalEchelon::reduce(RatVec& v, RatVec& combo) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto pv = pivots_.find(it->first);
    if (pv == pivots_.end()) {
      ++it;
      continue;
    }
    const int key = it->first;
    Rational c = it->second;
    axpy(v, Rational(-c), pv->second.vec);
    axpy(combo, c, pv->second.combo);
    it = v.upper_bound(key);
  }
}

bool RationalEchelon::insert(const RatVec& v) {
  RatVec w = v;
  RatVec acc;
  reduce(w, acc);
  const int index = static_cast<int>(count_++);
  if (w.empty()) return false;
  RatVec combo{{index, Rational(1)}};
  axpy(combo, Rational(-1), acc);
  const int r = w.begin()->first;
  Rational inv = 1 / w.begin()->second;
  for (auto& [k, x] : w) x *= inv;
  for (auto& [k, x] : combo) x *= inv;
  // keep stored rows reduced against each other so reduce() needs one pass
  for (auto& [pr, row] : pivots_) {
    auto it = row.vec.find(r);
    if (it == row.vec.end()) continue;
    Rational c = it->second;
    axpy(row.vec, Rational(-c), w);
    axpy(row.combo, Rational(-c), combo);
  }
  pivots_.emplace(r, Row{std::move(w), std::move(combo)});
  return true;
}

bool RationalEchelon::contains(const RatVec& v) const {
  RatVec w = v;
  RatVec acc;
  reduce(w, acc);
  return w.empty();
}

std::optional<RatVec> RationalEchelon::solve(const RatVec& v) const {
  RatVec w = v;
  RatVec acc;
  reduce(w, acc);
  if (!w.empty()) return std::nullopt;
  return acc;
}

std::size_t rank_q(const std::vector<IntVec>& columns) {
  RationalEchelon e;
  for (const auto& c : columns) e.insert(to_rational(c));
  return e.rank();
}

namespace {

class SmithWorker {
 public:
  SmithWorker(const IntMatrix& a, bool transforms)
      : a_(a), transforms_(transforms), m_(a.rows()), n_(a.cols()) {
    if (transforms_) {
      p_ = IntMatrix::identity(m_);
      q_ = IntMatrix::identity(n_);
    }
  }

  SmithForm run() {
    int t = 0;
    while (t < std::min(m_, n_)) {
      if (!move_min_to(t, t, m_, n_)) break;
      for (;;) {
        bool clean = true;
        for (int i = t + 1; i < m_; ++i) {
          if (a_.at(i, t) == 0) continue;
          add_row(i, t, Integer(-(a_.at(i, t) / a_.at(t, t))));
          if (a_.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < n_; ++j) {
          if (a_.at(t, j) == 0) continue;
          add_col(j, t, Integer(-(a_.at(t, j) / a_.at(t, t))));
          if (a_.at(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_min_in_cross(t);
          continue;
        }
        bool divisible = true;
        for (int i = t + 1; i < m_ && divisible; ++i)
          for (int j = t + 1; j < n_; ++j)
            if (a_.at(i, j) % a_.at(t, t) != 0) {
              add_row(t, i, Integer(1));
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (a_.at(t, t) < 0) scale_row(t);
      ++t;
    }
    SmithForm result;
    for (int i = 0; i < t; ++i) result.diagonal.push_back(a_.at(i, i));
    if (transforms_) {
      result.P = std::move(p_);
      result.Q = std::move(q_);
    }
    return result;
  }

 private:
  bool move_min_to(int t, int, int, int) {
    int bi = -1, bj = -1;
    for (int i = t; i < m_; ++i)
      for (int j = t; j < n_; ++j)
        if (a_.at(i, j) != 0 && (bi < 0 || abs_value(a_.at(i, j)) < abs_value(a_.at(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void move_min_in_cross(int t) {
    int bi = t, bj = t;
    Integer best = a_.at(t, t) == 0 ? Integer(-1) : abs_value(a_.at(t, t));
    for (int i = t; i < m_; ++i)
      if (a_.at(i, t) != 0 && (best < 0 || abs_value(a_.at(i, t)) < best)) {
        best = abs_value(a_.at(i, t));
        bi = i;
        bj = t;
      }
    for (int j = t; j < n_; ++j)
      if (a_.at(t, j) != 0 && (best < 0 || abs_value(a_.at(t, j)) < best)) {
        best = abs_value(a_.at(t, j));
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n_; ++c) std::swap(a_.at(i, c), a_.at(j, c));
    if (transforms_)
      for (int c = 0; c < m_; ++c) std::swap(p_.at(i, c), p_.at(j, c));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m_; ++r) std::swap(a_.at(r, i), a_.at(r, j));
    if (transforms_)
      for (int r = 0; r < n_; ++r) std::swap(q_.at(r, i), q_.at(r, j));
  }

  // row_i += k * row_j
  void add_row(int i, int j, const Integer& k) {
    if (k == 0) return;
    for (int c = 0; c < n_; ++c)
      if (a_.at(j, c) != 0) a_.at(i, c) += k * a_.at(j, c);
    if (transforms_)
      for (int c = 0; c < m_; ++c)
        if (p_.at(j, c) != 0) p_.at(i, c) += k * p_.at(j, c);
  }

  // col_i += k * col_j
  void add_col(int i, int j, const Integer& k) {
    if (k == 0) return;
    for (int r = 0; r < m_; ++r)
      if (a_.at(r, j) != 0) a_.at(r, i) += k * a_.at(r, j);
    if (transforms_)
      for (int r = 0; r < n_; ++r)
        if (q_.at(r, j) != 0) q_.at(r, i) += k * q_.at(r, j);
  }

  void scale_row(int i) {
    for (int c = 0; c < n_; ++c) a_.at(i, c) = -a_.at(i, c);
    if (transforms_)
      for (int c = 0; c < m_; ++c) p_.at(i, c) = -p_.at(i, c);
  }

  IntMatrix a_;
  bool transforms_;
  int m_;
  int n_;
  IntMatrix p_;
  IntMatrix q_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, bool with_transforms) {
  return SmithWorker(a, with_transforms).run();
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& x) {
  if (static_cast<int>(x.size()) != a.rows()) throw Error(ErrorKind::Mismatch, "right-hand side size");
  SmithForm s = smith_normal_form(a, true);
  std::vector<Integer> px(x.size());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.rows(); ++k)
      if (s.P.at(i, k) != 0 && x[k] != 0) px[i] += s.P.at(i, k) * x[k];
  const std::size_t r = s.diagonal.size();
  std::vector<Integer> z(static_cast<std::size_t>(a.cols()));
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (i < r) {
      if (px[i] % s.diagonal[i] != 0) return std::nullopt;
      z[i] = px[i] / s.diagonal[i];
    } else if (px[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> y(static_cast<std::size_t>(a.cols()));
  for (int i = 0; i < a.cols(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      if (s.Q.at(i, k) != 0 && z[k] != 0) y[i] += s.Q.at(i, k) * z[k];
  return y;
}

}  // namespace pathhom
