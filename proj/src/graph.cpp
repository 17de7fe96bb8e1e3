#include "pathhom/graph.hpp"

#include "pathhom/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace pathhom {

UGraph UGraph::from_indices(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
  UGraph g;
  std::unordered_map<std::string, int> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!seen.emplace(vertices[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::DuplicateVertex, vertices[i]);
  g.names_ = std::move(vertices);
  g.adj_.assign(g.names_.size(), {});
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= g.size() || b >= g.size())
      throw Error(ErrorKind::UnknownVertex, "index " + std::to_string(a < 0 || a >= g.size() ? a : b));
    if (a == b) throw Error(ErrorKind::SelfLoop, g.names_[static_cast<std::size_t>(a)]);
    if (a > b) std::swap(a, b);
    if (g.adjacent(a, b)) continue;
    g.edges_.emplace_back(a, b);
    auto& la = g.adj_[static_cast<std::size_t>(a)];
    la.insert(std::lower_bound(la.begin(), la.end(), b), b);
    auto& lb = g.adj_[static_cast<std::size_t>(b)];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
  }
  return g;
}

UGraph UGraph::make(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], static_cast<int>(i));
  auto lookup = [&](const std::string& n) {
    auto it = index.find(n);
    if (it == index.end()) throw Error(ErrorKind::UnknownVertex, n);
    return it->second;
  };
  std::vector<Edge> idx;
  for (const auto& [a, b] : edges) idx.emplace_back(lookup(a), lookup(b));
  return from_indices(std::move(vertices), idx);
}

bool UGraph::adjacent(int a, int b) const {
  const auto& l = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(l.begin(), l.end(), b);
}

bool UGraph::operator==(const UGraph& other) const {
  if (names_ != other.names_ || edges_.size() != other.edges_.size()) return false;
  return adj_ == other.adj_;
}

Digraph to_double_digraph(const UGraph& g) {
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    edges.emplace_back(a, b);
    edges.emplace_back(b, a);
  }
  std::sort(edges.begin(), edges.end());
  return Digraph::from_indices(g.names(), edges);
}

bool is_double_digraph(const Digraph& g) {
  for (auto [a, b] : g.edges())
    if (!g.has_edge(b, a)) return false;
  return true;
}

UGraph from_double_digraph(const Digraph& g) {
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (!g.has_edge(b, a)) throw Error(ErrorKind::NotDouble, g.name(a) + " -> " + g.name(b));
    if (a < b) edges.emplace_back(a, b);
  }
  return UGraph::from_indices(g.names(), edges);
}

UGraph graph_product(const UGraph& g, const UGraph& h) {
  const int n = g.size();
  std::vector<std::string> names;
  for (int y = 0; y < h.size(); ++y)
    for (int x = 0; x < n; ++x) names.push_back("(" + g.name(x) + "," + h.name(y) + ")");
  std::vector<Edge> edges;
  for (int y = 0; y < h.size(); ++y)
    for (auto [a, b] : g.edges()) edges.emplace_back(a + n * y, b + n * y);
  for (int x = 0; x < n; ++x)
    for (auto [a, b] : h.edges()) edges.emplace_back(x + n * a, x + n * b);
  std::sort(edges.begin(), edges.end());
  return UGraph::from_indices(std::move(names), edges);
}

UGraph undirected_cycle(int n) {
  if (n < 3) throw Error(ErrorKind::CycleTooShort, "n = " + std::to_string(n));
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    edges.emplace_back(i, (i + 1) % n);
  }
  return UGraph::from_indices(std::move(names), edges);
}

DigraphMap graph_map(const UGraph& source, const UGraph& target, std::vector<int> assignment) {
  return DigraphMap::make(to_double_digraph(source), to_double_digraph(target), std::move(assignment));
}

HomologyResult graph_homology(const UGraph& g, int p_max, Ring ring, bool with_generators, std::size_t budget) {
  return homology(to_double_digraph(g), p_max, ring, with_generators, budget);
}

namespace {

void require_double(const DigraphMap& f) {
  if (!is_double_digraph(f.source()) || !is_double_digraph(f.target()))
    throw Error(ErrorKind::NotDouble, "graph maps must act between double digraphs");
}

}  // namespace

bool graph_one_step_homotopic(const DigraphMap& f, const DigraphMap& g) {
  require_double(f);
  require_double(g);
  return one_step_homotopic(f, g) != OneStep::No;
}

HomotopyResult graph_homotopic(const DigraphMap& f, const DigraphMap& g, const HomotopyOptions& options) {
  require_double(f);
  require_double(g);
  return homotopic(f, g, options);
}

ReductionTrace graph_reduce(const UGraph& g) { return find_reduction(to_double_digraph(g)); }

}  // namespace pathhom
