#include "pathhom/chain.hpp"

#include "pathhom/error.hpp"

namespace pathhom {

bool is_regular(const Path& path) {
  for (std::size_t i = 1; i < path.size(); ++i)
    if (path[i] == path[i - 1]) return false;
  return true;
}

bool is_allowed(const Digraph& g, const Path& path) {
  for (int v : path)
    if (v < 0 || v >= g.size()) return false;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!g.has_edge(path[i - 1], path[i])) return false;
  return true;
}

Chain Chain::elementary(const Path& path, Ring ring) {
  Chain c(static_cast<int>(path.size()) - 1, ring);
  c.add_term(path, Rational(1));
  return c;
}

Chain Chain::from_terms(int dim, const std::vector<std::pair<Path, Rational>>& terms, Ring ring) {
  Chain c(dim, ring);
  for (const auto& [p, q] : terms) c.add_term(p, q);
  return c;
}

Rational Chain::coefficient(const Path& path) const {
  auto it = terms_.find(path);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add_term(const Path& path, const Rational& coeff) {
  if (static_cast<int>(path.size()) != dim_ + 1)
    throw Error(ErrorKind::Mismatch, "path length does not match chain dimension");
  if (coeff == 0 || !is_regular(path)) return;
  if (ring_ == Ring::Z && !is_integral(coeff))
    throw Error(ErrorKind::Mismatch, "non-integral coefficient in a Z chain");
  auto [it, inserted] = terms_.emplace(path, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain Chain::with_ring(Ring ring) const {
  Chain c(dim_, ring);
  for (const auto& [p, q] : terms_) c.add_term(p, q);
  return c;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.is_zero()) return *this;
  if (dim_ != other.dim_) throw Error(ErrorKind::Mismatch, "adding chains of different dimension");
  for (const auto& [p, q] : other.terms_) add_term(p, q);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.is_zero()) return *this;
  if (dim_ != other.dim_) throw Error(ErrorKind::Mismatch, "subtracting chains of different dimension");
  for (const auto& [p, q] : other.terms_) add_term(p, -q);
  return *this;
}

Chain& Chain::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  if (ring_ == Ring::Z && !is_integral(scalar))
    throw Error(ErrorKind::Mismatch, "non-integral scalar on a Z chain");
  for (auto& [p, q] : terms_) q *= scalar;
  return *this;
}

Chain operator+(Chain a, const Chain& b) { return a += b; }
Chain operator-(Chain a, const Chain& b) { return a -= b; }
Chain operator-(Chain a) { return a *= Rational(-1); }
Chain operator*(const Rational& scalar, Chain c) { return c *= scalar; }

bool is_allowed(const Digraph& g, const Chain& c) {
  for (const auto& [p, q] : c.terms())
    if (!is_allowed(g, p)) return false;
  return true;
}

Chain boundary(const Chain& c) {
  Chain result(c.dim() - 1, c.ring());
  if (c.dim() <= 0) return result;
  Path face;
  for (const auto& [path, coeff] : c.terms()) {
    for (std::size_t q = 0; q < path.size(); ++q) {
      face.clear();
      for (std::size_t i = 0; i < path.size(); ++i)
        if (i != q) face.push_back(path[i]);
      result.add_term(face, q % 2 == 0 ? coeff : Rational(-coeff));
    }
  }
  return result;
}

std::vector<std::vector<Path>> enumerate_allowed_upto(const Digraph& g, int max_dim, std::size_t budget) {
  std::vector<std::vector<Path>> levels;
  if (max_dim < 0) return levels;
  std::vector<Path> level;
  for (int v = 0; v < g.size(); ++v) level.push_back({v});
  if (level.size() > budget) throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " allowed 0-paths");
  levels.push_back(level);
  for (int p = 1; p <= max_dim; ++p) {
    std::vector<Path> next;
    for (const auto& path : levels.back()) {
      for (int w : g.out(path.back())) {
        if (next.size() >= budget)
          throw Error(ErrorKind::BudgetExceeded,
                      "more than " + std::to_string(budget) + " allowed " + std::to_string(p) + "-paths");
        Path ext = path;
        ext.push_back(w);
        next.push_back(std::move(ext));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<Path> enumerate_allowed(const Digraph& g, int p, std::size_t budget) {
  if (p < 0) return {};
  auto levels = enumerate_allowed_upto(g, p, budget);
  return std::move(levels.back());
}

Chain induced_map(const DigraphMap& f, const Chain& c) {
  Chain result(c.dim(), c.ring());
  Path image;
  for (const auto& [path, coeff] : c.terms()) {
    image.clear();
    for (int v : path) image.push_back(f(v));
    result.add_term(image, coeff);
  }
  return result;
}

Chain lift(const Chain& c, const Digraph& g) {
  const int n = g.size();
  Chain result(c.dim() + 1, c.ring());
  Path lifted;
  for (const auto& [path, coeff] : c.terms()) {
    for (std::size_t k = 0; k < path.size(); ++k) {
      lifted.clear();
      for (std::size_t i = 0; i <= k; ++i) lifted.push_back(path[i]);
      for (std::size_t i = k; i < path.size(); ++i) lifted.push_back(path[i] + n);
      result.add_term(lifted, k % 2 == 0 ? coeff : Rational(-coeff));
    }
  }
  return result;
}

Chain prime_copy(const Chain& c, const Digraph& g) {
  const int n = g.size();
  Chain result(c.dim(), c.ring());
  Path shifted;
  for (const auto& [path, coeff] : c.terms()) {
    shifted.clear();
    for (int v : path) shifted.push_back(v + n);
    result.add_term(shifted, coeff);
  }
  return result;
}

Chain concat_product(const Chain& u, const Chain& v) {
  Ring ring = (u.ring() == Ring::Z && v.ring() == Ring::Z) ? Ring::Z : Ring::Q;
  Chain result(u.dim() + v.dim() + 1, ring);
  Path joined;
  for (const auto& [a, qa] : u.terms()) {
    for (const auto& [b, qb] : v.terms()) {
      joined = a;
      joined.insert(joined.end(), b.begin(), b.end());
      result.add_term(joined, qa * qb);
    }
  }
  return result;
}

std::string rational_to_string(const Rational& q) {
  if (is_integral(q)) return to_integer(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string path_to_string(const Path& path, const Digraph& g) {
  std::string s = "e(";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ",";
    s += (path[i] >= 0 && path[i] < g.size()) ? g.name(path[i]) : std::to_string(path[i]);
  }
  return s + ")";
}

std::string to_string(const Chain& c, const Digraph& g) {
  if (c.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [path, coeff] : c.terms()) {
    Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
    if (first)
      s += coeff < 0 ? "-" : "";
    else
      s += coeff < 0 ? " - " : " + ";
    if (mag != 1) s += rational_to_string(mag) + "*";
    s += path_to_string(path, g);
    first = false;
  }
  return s;
}

}  // namespace pathhom
