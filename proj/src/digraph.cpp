#include "pathhom/digraph.hpp"

#include "pathhom/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace pathhom {

struct Digraph::Impl {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};

Digraph::Digraph() : impl_(std::make_shared<const Impl>()) {}

Digraph::Digraph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Digraph Digraph::from_indices(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
  auto impl = std::make_shared<Impl>();
  const int n = static_cast<int>(vertices.size());
  impl->index.reserve(vertices.size());
  for (int i = 0; i < n; ++i) {
    if (!impl->index.emplace(vertices[i], i).second)
      throw Error(ErrorKind::DuplicateVertex, vertices[i]);
  }
  impl->names = std::move(vertices);
  impl->out.assign(n, {});
  impl->in.assign(n, {});
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n) throw Error(ErrorKind::UnknownVertex, "index " + std::to_string(a));
    if (b < 0 || b >= n) throw Error(ErrorKind::UnknownVertex, "index " + std::to_string(b));
    if (a == b) throw Error(ErrorKind::SelfLoop, impl->names[a]);
    auto& o = impl->out[a];
    auto it = std::lower_bound(o.begin(), o.end(), b);
    if (it != o.end() && *it == b) continue;
    o.insert(it, b);
    auto& i = impl->in[b];
    i.insert(std::lower_bound(i.begin(), i.end(), a), a);
    impl->edges.emplace_back(a, b);
  }
  return Digraph(std::move(impl));
}

Digraph Digraph::make(std::vector<std::string> vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index.emplace(vertices[i], i);
  std::vector<Edge> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    if (ia == index.end()) throw Error(ErrorKind::UnknownVertex, a);
    auto ib = index.find(b);
    if (ib == index.end()) throw Error(ErrorKind::UnknownVertex, b);
    if (ia->second == ib->second) throw Error(ErrorKind::SelfLoop, a);
    idx.emplace_back(ia->second, ib->second);
  }
  return from_indices(std::move(vertices), idx);
}

Digraph make_digraph(std::vector<std::string> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges) {
  return Digraph::make(std::move(vertices), edges);
}

int Digraph::size() const { return static_cast<int>(impl_->names.size()); }
std::size_t Digraph::edge_count() const { return impl_->edges.size(); }
const std::vector<std::string>& Digraph::names() const { return impl_->names; }
const std::string& Digraph::name(int v) const { return impl_->names.at(static_cast<std::size_t>(v)); }

std::optional<int> Digraph::find(const std::string& name) const {
  auto it = impl_->index.find(name);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

int Digraph::index_of(const std::string& name) const {
  auto v = find(name);
  if (!v) throw Error(ErrorKind::UnknownVertex, name);
  return *v;
}

const std::vector<Edge>& Digraph::edges() const { return impl_->edges; }
const std::vector<int>& Digraph::out(int v) const { return impl_->out[static_cast<std::size_t>(v)]; }
const std::vector<int>& Digraph::in(int v) const { return impl_->in[static_cast<std::size_t>(v)]; }

std::vector<int> Digraph::neighbors(int v) const {
  std::vector<int> result;
  std::set_union(out(v).begin(), out(v).end(), in(v).begin(), in(v).end(), std::back_inserter(result));
  return result;
}

bool Digraph::has_edge(int a, int b) const {
  const auto& o = out(a);
  return std::binary_search(o.begin(), o.end(), b);
}

bool Digraph::operator==(const Digraph& other) const {
  if (impl_ == other.impl_) return true;
  if (names() != other.names()) return false;
  if (edge_count() != other.edge_count()) return false;
  for (int v = 0; v < size(); ++v)
    if (out(v) != other.out(v)) return false;
  return true;
}

namespace {

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::string> index_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

bool is_digraph_map(const Digraph& source, const Digraph& target, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != source.size()) return false;
  for (int a : assignment)
    if (a < 0 || a >= target.size()) return false;
  for (const auto& [v, w] : source.edges())
    if (!target.arrow_eq(assignment[v], assignment[w])) return false;
  return true;
}

DigraphMap::DigraphMap(Digraph source, Digraph target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {}

DigraphMap DigraphMap::make(Digraph source, Digraph target, std::vector<int> assignment) {
  if (static_cast<int>(assignment.size()) != source.size())
    throw Error(ErrorKind::NotADigraphMap, "assignment size differs from source vertex count");
  for (int a : assignment)
    if (a < 0 || a >= target.size()) throw Error(ErrorKind::UnknownVertex, "index " + std::to_string(a));
  for (const auto& [v, w] : source.edges()) {
    if (!target.arrow_eq(assignment[v], assignment[w]))
      throw Error(ErrorKind::NotADigraphMap, "edge " + source.name(v) + "->" + source.name(w) +
                                                 " maps to " + target.name(assignment[v]) + "," +
                                                 target.name(assignment[w]));
  }
  return DigraphMap(std::move(source), std::move(target), std::move(assignment));
}

DigraphMap DigraphMap::by_names(Digraph source, Digraph target,
                                const std::vector<std::pair<std::string, std::string>>& assignment) {
  std::vector<int> a(static_cast<std::size_t>(source.size()), -1);
  for (const auto& [from, to] : assignment) a[source.index_of(from)] = target.index_of(to);
  for (int v = 0; v < source.size(); ++v)
    if (a[v] < 0) throw Error(ErrorKind::NotADigraphMap, "no image for " + source.name(v));
  return make(std::move(source), std::move(target), std::move(a));
}

DigraphMap DigraphMap::identity(const Digraph& g) {
  std::vector<int> a(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) a[v] = v;
  return DigraphMap(g, g, std::move(a));
}

DigraphMap DigraphMap::constant(const Digraph& source, const Digraph& target, int value) {
  if (value < 0 || value >= target.size()) throw Error(ErrorKind::UnknownVertex, "index " + std::to_string(value));
  return DigraphMap(source, target, std::vector<int>(static_cast<std::size_t>(source.size()), value));
}

bool DigraphMap::operator==(const DigraphMap& other) const {
  return assignment_ == other.assignment_ && source_ == other.source_ && target_ == other.target_;
}

DigraphMap compose(const DigraphMap& f, const DigraphMap& g) {
  if (f.target() != g.source()) throw Error(ErrorKind::Mismatch, "target of first map is not source of second");
  std::vector<int> a(f.assignment().size());
  for (std::size_t v = 0; v < a.size(); ++v) a[v] = g(f.assignment()[v]);
  return DigraphMap::make(f.source(), g.target(), std::move(a));
}

Digraph cartesian_product(const Digraph& g, const Digraph& h) {
  const int ng = g.size(), nh = h.size();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(ng) * static_cast<std::size_t>(nh));
  for (int y = 0; y < nh; ++y)
    for (int x = 0; x < ng; ++x) names.push_back("(" + g.name(x) + "," + h.name(y) + ")");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(ng) * h.edge_count() + g.edge_count() * static_cast<std::size_t>(nh));
  for (int y = 0; y < nh; ++y)
    for (const auto& [a, b] : g.edges()) edges.emplace_back(product_index(a, y, ng), product_index(b, y, ng));
  for (int x = 0; x < ng; ++x)
    for (const auto& [a, b] : h.edges()) edges.emplace_back(product_index(x, a, ng), product_index(x, b, ng));
  return Digraph::from_indices(std::move(names), sorted_edges(std::move(edges)));
}

Digraph point_digraph() { return Digraph::from_indices({"0"}, {}); }

Digraph interval_digraph() { return Digraph::from_indices({"0", "1"}, {{0, 1}}); }

Digraph cylinder(const Digraph& g) { return cartesian_product(g, interval_digraph()); }

Digraph inverse_cylinder(const Digraph& g) {
  return cartesian_product(g, Digraph::from_indices({"0", "1"}, {{1, 0}}));
}

Digraph map_cylinder(const DigraphMap& f, bool inverse) {
  const Digraph& g = f.source();
  const Digraph& h = f.target();
  const int ng = g.size();
  std::vector<std::string> names;
  for (int x = 0; x < ng; ++x) names.push_back("(" + g.name(x) + ",0)");
  for (int y = 0; y < h.size(); ++y) names.push_back("(" + h.name(y) + ",1)");
  std::vector<Edge> edges(g.edges());
  for (const auto& [a, b] : h.edges()) edges.emplace_back(a + ng, b + ng);
  for (int x = 0; x < ng; ++x) {
    if (inverse)
      edges.emplace_back(f(x) + ng, x);
    else
      edges.emplace_back(x, f(x) + ng);
  }
  return Digraph::from_indices(std::move(names), sorted_edges(std::move(edges)));
}

Digraph line_digraph(const std::vector<bool>& directions) {
  const int n = static_cast<int>(directions.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    if (directions[i])
      edges.emplace_back(i, i + 1);
    else
      edges.emplace_back(i + 1, i);
  }
  return Digraph::from_indices(index_names(n + 1), edges);
}

Digraph cycle_digraph(const std::vector<bool>& directions) {
  const int n = static_cast<int>(directions.size());
  if (n < 3) throw Error(ErrorKind::CycleTooShort, "cycle length " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (directions[i])
      edges.emplace_back(i, j);
    else
      edges.emplace_back(j, i);
  }
  return Digraph::from_indices(index_names(n), edges);
}

Digraph simplex_digraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Digraph::from_indices(index_names(n + 1), edges);
}

Digraph cube_digraph(int n) {
  Digraph g = point_digraph();
  for (int k = 0; k < n; ++k) g = cylinder(g);
  return rename_vertices(g, index_names(g.size()));
}

Digraph induced_subdigraph(const Digraph& g, const std::vector<int>& keep) {
  std::vector<int> position(static_cast<std::size_t>(g.size()), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    position[keep[i]] = static_cast<int>(i);
    names.push_back(g.name(keep[i]));
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges())
    if (position[a] >= 0 && position[b] >= 0) edges.emplace_back(position[a], position[b]);
  return Digraph::from_indices(std::move(names), edges);
}

Digraph rename_vertices(const Digraph& g, std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != g.size()) throw Error(ErrorKind::Mismatch, "rename needs one name per vertex");
  return Digraph::from_indices(std::move(names), g.edges());
}

DigraphMap level_inclusion(const Digraph& g, const Digraph& product, int level) {
  std::vector<int> a(static_cast<std::size_t>(g.size()));
  for (int x = 0; x < g.size(); ++x) a[x] = product_index(x, level, g.size());
  return DigraphMap::make(g, product, std::move(a));
}

DigraphMap product_projection(const Digraph& g, const Digraph& h, const Digraph& product) {
  if (product.size() != g.size() * h.size()) throw Error(ErrorKind::Mismatch, "product size");
  std::vector<int> a(static_cast<std::size_t>(product.size()));
  for (int v = 0; v < product.size(); ++v) a[v] = v % g.size();
  return DigraphMap::make(product, g, std::move(a));
}

}  // namespace pathhom
