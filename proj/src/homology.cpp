#include "pathhom/homology.hpp"

#include "pathhom/error.hpp"

#include <algorithm>

namespace pathhom {

namespace {

void accumulate(RatVec& v, int key, const Rational& x) {
  if (x == 0) return;
  auto [it, inserted] = v.emplace(key, x);
  if (!inserted) {
    it->second += x;
    if (it->second == 0) v.erase(it);
  }
}

std::vector<Integer> integral_coords(const std::vector<Rational>& coords) {
  std::vector<Integer> out;
  out.reserve(coords.size());
  for (const auto& q : coords) {
    if (!is_integral(q)) throw Error(ErrorKind::Mismatch, "lattice coordinates are not integral");
    out.push_back(to_integer(q));
  }
  return out;
}

}  // namespace

int OmegaComplex::omega_dim(int p) const {
  if (p < 0 || p > top()) return 0;
  return static_cast<int>(omega_basis[p].size());
}

Chain OmegaComplex::chain_from_a(int p, const RatVec& coords, Ring ring) const {
  Chain c(p, ring);
  for (const auto& [i, q] : coords) c.add_term(a_basis[p][i], q);
  return c;
}

Chain OmegaComplex::omega_chain(int p, int j) const {
  return chain_from_a(p, to_rational(omega_basis[p][j]), Ring::Z);
}

Chain OmegaComplex::chain_from_omega(int p, const std::vector<Rational>& coords, Ring ring) const {
  RatVec acc;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] == 0) continue;
    for (const auto& [i, x] : omega_basis[p][j]) accumulate(acc, i, coords[j] * x);
  }
  return chain_from_a(p, acc, ring);
}

std::optional<RatVec> OmegaComplex::a_coordinates(const Chain& c) const {
  const int p = c.dim();
  RatVec v;
  if (c.is_zero()) return v;
  if (p < 0 || p > top()) return std::nullopt;
  for (const auto& [path, q] : c.terms()) {
    auto it = a_index[p].find(path);
    if (it == a_index[p].end()) return std::nullopt;
    v.emplace(it->second, q);
  }
  return v;
}

std::optional<std::vector<Rational>> OmegaComplex::omega_coordinates(const Chain& c) const {
  const int p = c.dim();
  if (p < 0 || p > top()) {
    if (c.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  auto v = a_coordinates(c);
  if (!v) return std::nullopt;
  return hermite_coordinates(omega_basis[p], std::move(*v));
}

OmegaComplex build_omega(const Digraph& g, int p_max, std::size_t budget) {
  if (p_max < 0) throw Error(ErrorKind::Mismatch, "p_max must be nonnegative");
  OmegaComplex cx;
  cx.digraph = g;
  cx.max_dim = p_max;
  cx.a_basis = enumerate_allowed_upto(g, p_max + 1, budget);
  const int top = p_max + 1;
  cx.a_index.resize(top + 1);
  for (int p = 0; p <= top; ++p)
    for (std::size_t i = 0; i < cx.a_basis[p].size(); ++i) cx.a_index[p].emplace(cx.a_basis[p][i], static_cast<int>(i));

  cx.omega_basis.resize(top + 1);
  cx.d_omega.resize(top + 1);
  Path face;
  for (int p = 0; p <= top; ++p) {
    // project the boundary of each allowed path onto the non-allowed faces
    std::map<Path, int> bad_rows;
    std::vector<IntVec> columns(cx.a_basis[p].size());
    for (std::size_t j = 0; j < cx.a_basis[p].size() && p > 0; ++j) {
      const Path& path = cx.a_basis[p][j];
      for (std::size_t q = 0; q < path.size(); ++q) {
        face.clear();
        for (std::size_t i = 0; i < path.size(); ++i)
          if (i != q) face.push_back(path[i]);
        if (!is_regular(face) || cx.a_index[p - 1].count(face)) continue;
        int row = bad_rows.emplace(face, static_cast<int>(bad_rows.size())).first->second;
        Integer sign = q % 2 == 0 ? 1 : -1;
        auto [it, inserted] = columns[j].emplace(row, sign);
        if (!inserted) {
          it->second += sign;
          if (it->second == 0) columns[j].erase(it);
        }
      }
    }
    cx.omega_basis[p] = integer_kernel(columns);
  }

  cx.d_omega[0] = IntMatrix(0, cx.omega_dim(0));
  for (int p = 1; p <= top; ++p) {
    std::vector<IntVec> cols;
    for (int j = 0; j < cx.omega_dim(p); ++j) {
      auto bd = cx.a_coordinates(boundary(cx.omega_chain(p, j)));
      if (!bd) throw Error(ErrorKind::Mismatch, "boundary of an Omega element is not allowed");
      auto coords = hermite_coordinates(cx.omega_basis[p - 1], std::move(*bd));
      if (!coords) throw Error(ErrorKind::Mismatch, "boundary left Omega");
      IntVec col;
      auto ints = integral_coords(*coords);
      for (std::size_t i = 0; i < ints.size(); ++i)
        if (ints[i] != 0) col.emplace(static_cast<int>(i), ints[i]);
      cols.push_back(std::move(col));
    }
    cx.d_omega[p] = IntMatrix::from_columns(cx.omega_dim(p - 1), cols);
  }
  return cx;
}

HomologyResult homology(const OmegaComplex& cx, Ring ring, bool with_generators) {
  HomologyResult result;
  result.ring = ring;
  result.max_dim = cx.max_dim;
  std::vector<std::size_t> rank(cx.top() + 2, 0);
  std::vector<std::vector<IntVec>> d_cols(cx.top() + 1);
  for (int p = 1; p <= cx.top(); ++p) {
    d_cols[p] = cx.d_omega[p].columns();
    rank[p] = rank_q(d_cols[p]);
  }
  result.betti.resize(cx.max_dim + 1);
  result.torsion.resize(cx.max_dim + 1);
  result.generators.resize(cx.max_dim + 1);
  for (int p = 0; p <= cx.max_dim; ++p) {
    result.betti[p] = cx.omega_dim(p) - static_cast<int>(rank[p]) - static_cast<int>(rank[p + 1]);
    if (ring == Ring::Z) {
      for (const auto& d : smith_normal_form(cx.d_omega[p + 1]).diagonal)
        if (d > 1) result.torsion[p].push_back(d);
    }
    if (!with_generators || result.betti[p] == 0) continue;
    std::vector<IntVec> cycles;
    if (p == 0) {
      for (int j = 0; j < cx.omega_dim(0); ++j) cycles.push_back(IntVec{{j, Integer(1)}});
    } else {
      cycles = integer_kernel(d_cols[p]);
    }
    RationalEchelon span;
    for (const auto& col : d_cols[p + 1]) span.insert(to_rational(col));
    for (const auto& z : cycles) {
      if (!span.insert(to_rational(z))) continue;
      std::vector<Rational> coords(static_cast<std::size_t>(cx.omega_dim(p)));
      for (const auto& [j, x] : z) coords[j] = Rational(x);
      result.generators[p].push_back(cx.chain_from_omega(p, coords, ring));
    }
  }
  return result;
}

HomologyResult homology(const Digraph& g, int p_max, Ring ring, bool with_generators, std::size_t budget) {
  return homology(build_omega(g, p_max, budget), ring, with_generators);
}

bool generates_homology(const OmegaComplex& cx, int p, const std::vector<Chain>& cycles, Ring ring) {
  if (p < 0 || p > cx.max_dim) throw Error(ErrorKind::Mismatch, "dimension outside the complex");
  std::vector<IntVec> lattice = cx.d_omega[p + 1].columns();
  for (const auto& c : cycles) {
    auto coords = cx.omega_coordinates(c);
    if (!coords || !boundary(c).is_zero()) throw Error(ErrorKind::NotACycle, "generator candidate is not a cycle in Omega");
    Integer scale = 1;
    for (const auto& q : *coords) scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(q)));
    if (ring == Ring::Z && scale != 1) return false;
    IntVec v;
    for (std::size_t j = 0; j < coords->size(); ++j)
      if ((*coords)[j] != 0) v.emplace(static_cast<int>(j), to_integer((*coords)[j] * scale));
    lattice.push_back(std::move(v));
  }
  std::size_t cycle_rank = 0;
  if (p == 0)
    cycle_rank = static_cast<std::size_t>(cx.omega_dim(0));
  else
    cycle_rank = static_cast<std::size_t>(cx.omega_dim(p)) - rank_q(cx.d_omega[p].columns());
  if (rank_q(lattice) != cycle_rank) return false;
  if (ring == Ring::Q) return true;
  auto snf = smith_normal_form(IntMatrix::from_columns(cx.omega_dim(p), lattice));
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(), [](const Integer& d) { return d == 1; });
}

bool is_omega_member(const Digraph& g, const Chain& c) {
  return is_allowed(g, c) && is_allowed(g, boundary(c));
}

Chain standard_cycle_path(const Digraph& s) {
  const int n = s.size();
  if (n < 3 || static_cast<int>(s.edge_count()) != n) throw Error(ErrorKind::NotACycle, "not a cycle digraph");
  Chain w(1, Ring::Z);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const bool fwd = s.has_edge(i, j), bwd = s.has_edge(j, i);
    if (fwd == bwd) throw Error(ErrorKind::NotACycle, "vertices " + s.name(i) + " and " + s.name(j));
    if (fwd)
      w.add_term({i, j}, Rational(1));
    else
      w.add_term({j, i}, Rational(-1));
  }
  return w;
}

BoundaryResult is_boundary(const Chain& c, const OmegaComplex& cx, Ring ring) {
  BoundaryResult result;
  const int p = c.dim();
  result.witness = Chain(p + 1, ring);
  if (c.is_zero()) {
    result.bounding = true;
    return result;
  }
  if (p < 0 || p > cx.max_dim) throw Error(ErrorKind::Mismatch, "chain dimension outside the complex");
  auto coords = cx.omega_coordinates(c);
  if (!coords) throw Error(ErrorKind::NotACycle, "chain is not in Omega_" + std::to_string(p));
  if (!boundary(c).is_zero()) throw Error(ErrorKind::NotACycle, "chain has nonzero boundary");
  const IntMatrix& d = cx.d_omega[p + 1];
  if (ring == Ring::Q) {
    RationalEchelon e;
    for (const auto& col : d.columns()) e.insert(to_rational(col));
    RatVec x;
    for (std::size_t j = 0; j < coords->size(); ++j)
      if ((*coords)[j] != 0) x.emplace(static_cast<int>(j), (*coords)[j]);
    auto y = e.solve(x);
    if (!y) return result;
    std::vector<Rational> w(static_cast<std::size_t>(cx.omega_dim(p + 1)));
    for (const auto& [j, q] : *y) w[j] = q;
    result.bounding = true;
    result.witness = cx.chain_from_omega(p + 1, w, ring);
    return result;
  }
  for (const auto& [path, q] : c.terms())
    if (!is_integral(q)) throw Error(ErrorKind::Mismatch, "Z boundary test needs integral coefficients");
  auto y = solve_integer(d, integral_coords(*coords));
  if (!y) return result;
  std::vector<Rational> w(y->begin(), y->end());
  result.bounding = true;
  result.witness = cx.chain_from_omega(p + 1, w, ring);
  return result;
}

BoundaryResult is_boundary(const Chain& c, const Digraph& g, Ring ring) {
  return is_boundary(c, build_omega(g, std::max(c.dim(), 0)), ring);
}

const char* omega2_kind_name(Omega2Kind kind) {
  switch (kind) {
    case Omega2Kind::DoubleEdge: return "double-edge";
    case Omega2Kind::Triangle: return "triangle";
    case Omega2Kind::Square: return "square";
  }
  return "?";
}

std::vector<Omega2Term> decompose_omega2(const Chain& omega, const Digraph& g) {
  if (omega.is_zero()) return {};
  if (omega.dim() != 2 || !is_omega_member(g, omega))
    throw Error(ErrorKind::NotInOmega2, "chain fails the Omega_2 membership check");
  for (const auto& [path, q] : omega.terms())
    if (!is_integral(q)) throw Error(ErrorKind::NotInOmega2, "non-integral coefficient");

  std::vector<Omega2Term> terms;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Integer>>> routes;
  for (const auto& [path, q] : omega.terms()) {
    const int i = path[0], j = path[1], k = path[2];
    if (i == k)
      terms.push_back({Omega2Kind::DoubleEdge, Chain::elementary(path, Ring::Z), to_integer(q)});
    else if (g.has_edge(i, k))
      terms.push_back({Omega2Kind::Triangle, Chain::elementary(path, Ring::Z), to_integer(q)});
    else
      routes[{i, k}].emplace_back(j, to_integer(q));
  }
  for (auto& [ends, list] : routes) {
    std::vector<std::pair<int, Integer>> pos, neg;
    for (const auto& [j, q] : list) (q > 0 ? pos : neg).emplace_back(j, q > 0 ? q : Integer(-q));
    std::size_t a = 0, b = 0;
    while (a < pos.size() && b < neg.size()) {
      Integer t = std::min(pos[a].second, neg[b].second);
      Chain sq = Chain::elementary({ends.first, pos[a].first, ends.second}, Ring::Z) -
                 Chain::elementary({ends.first, neg[b].first, ends.second}, Ring::Z);
      terms.push_back({Omega2Kind::Square, std::move(sq), t});
      pos[a].second -= t;
      neg[b].second -= t;
      if (pos[a].second == 0) ++a;
      if (neg[b].second == 0) ++b;
    }
    if (a < pos.size() || b < neg.size())
      throw Error(ErrorKind::NotInOmega2, "unbalanced routes over a non-edge");
  }
  return terms;
}

}  // namespace pathhom
