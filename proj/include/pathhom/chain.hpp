#pragma once

#include "pathhom/arith.hpp"
#include "pathhom/digraph.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace pathhom {

// Elementary path e_{i0...ip} as its vertex index sequence.
using Path = std::vector<int>;

inline constexpr std::size_t kDefaultPathBudget = 2'000'000;

bool is_regular(const Path& path);
bool is_allowed(const Digraph& g, const Path& path);

// Sparse p-chain of regular paths. Terms are kept in lexicographic order and
// zero coefficients are never stored. Z chains reject non-integral coefficients.
class Chain {
 public:
  explicit Chain(int dim = 0, Ring ring = Ring::Q) : dim_(dim), ring_(ring) {}

  static Chain elementary(const Path& path, Ring ring = Ring::Q);
  static Chain from_terms(int dim, const std::vector<std::pair<Path, Rational>>& terms, Ring ring = Ring::Q);

  int dim() const { return dim_; }
  Ring ring() const { return ring_; }
  const std::map<Path, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Path& path) const;

  void add_term(const Path& path, const Rational& coeff);
  Chain with_ring(Ring ring) const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Rational& scalar);

  bool operator==(const Chain& other) const { return dim_ == other.dim_ && terms_ == other.terms_; }
  bool operator!=(const Chain& other) const { return !(*this == other); }

 private:
  int dim_;
  Ring ring_;
  std::map<Path, Rational> terms_;
};

Chain operator+(Chain a, const Chain& b);
Chain operator-(Chain a, const Chain& b);
Chain operator-(Chain a);
Chain operator*(const Rational& scalar, Chain c);

bool is_allowed(const Digraph& g, const Chain& c);

Chain boundary(const Chain& c);

// Lexicographically ordered allowed p-paths of g.
std::vector<Path> enumerate_allowed(const Digraph& g, int p, std::size_t budget = kDefaultPathBudget);
// Levels 0..max_dim, each checked against the budget.
std::vector<std::vector<Path>> enumerate_allowed_upto(const Digraph& g, int max_dim,
                                                      std::size_t budget = kDefaultPathBudget);

Chain induced_map(const DigraphMap& f, const Chain& c);

// Chains on g, lifted into cylinder(g) where x' = x + |V_g|.
Chain lift(const Chain& c, const Digraph& g);
Chain prime_copy(const Chain& c, const Digraph& g);
Chain concat_product(const Chain& u, const Chain& v);

std::string path_to_string(const Path& path, const Digraph& g);
std::string to_string(const Chain& c, const Digraph& g);
std::string rational_to_string(const Rational& q);

}  // namespace pathhom
