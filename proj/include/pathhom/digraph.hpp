#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pathhom {

using Edge = std::pair<int, int>;

// Finite digraph without self-loops. Vertex indices follow declaration order;
// edges keep the order of first appearance. Copies share the immutable data.
class Digraph {
 public:
  Digraph();

  static Digraph make(std::vector<std::string> vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges);
  static Digraph from_indices(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  int size() const;
  std::size_t edge_count() const;

  const std::vector<std::string>& names() const;
  const std::string& name(int v) const;
  std::optional<int> find(const std::string& name) const;
  int index_of(const std::string& name) const;

  const std::vector<Edge>& edges() const;
  const std::vector<int>& out(int v) const;
  const std::vector<int>& in(int v) const;
  std::vector<int> neighbors(int v) const;

  bool has_edge(int a, int b) const;
  bool adjacent(int a, int b) const { return has_edge(a, b) || has_edge(b, a); }
  // a =-> b : equal or joined by an edge a -> b
  bool arrow_eq(int a, int b) const { return a == b || has_edge(a, b); }

  bool operator==(const Digraph& other) const;
  bool operator!=(const Digraph& other) const { return !(*this == other); }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit Digraph(std::shared_ptr<const Impl> impl);
};

Digraph make_digraph(std::vector<std::string> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges);

class DigraphMap {
 public:
  static DigraphMap make(Digraph source, Digraph target, std::vector<int> assignment);
  static DigraphMap by_names(Digraph source, Digraph target,
                             const std::vector<std::pair<std::string, std::string>>& assignment);
  static DigraphMap identity(const Digraph& g);
  static DigraphMap constant(const Digraph& source, const Digraph& target, int value);

  const Digraph& source() const { return source_; }
  const Digraph& target() const { return target_; }
  const std::vector<int>& assignment() const { return assignment_; }
  int operator()(int v) const { return assignment_[static_cast<std::size_t>(v)]; }

  bool operator==(const DigraphMap& other) const;

 private:
  DigraphMap(Digraph source, Digraph target, std::vector<int> assignment);
  Digraph source_;
  Digraph target_;
  std::vector<int> assignment_;
};

bool is_digraph_map(const Digraph& source, const Digraph& target, const std::vector<int>& assignment);

// f then g
DigraphMap compose(const DigraphMap& f, const DigraphMap& g);

// Vertex (x,y) of G x H sits at index x + |V_G| * y.
inline int product_index(int x, int y, int g_size) { return x + g_size * y; }

Digraph cartesian_product(const Digraph& g, const Digraph& h);
Digraph point_digraph();
Digraph interval_digraph();
Digraph cylinder(const Digraph& g);
Digraph inverse_cylinder(const Digraph& g);
Digraph map_cylinder(const DigraphMap& f, bool inverse = false);

Digraph line_digraph(const std::vector<bool>& directions);
Digraph cycle_digraph(const std::vector<bool>& directions);
Digraph simplex_digraph(int n);
Digraph cube_digraph(int n);

Digraph induced_subdigraph(const Digraph& g, const std::vector<int>& keep);
Digraph rename_vertices(const Digraph& g, std::vector<std::string> names);

// Inclusion of the level-k copy of G into cylinder(G) or a product G x I_n.
DigraphMap level_inclusion(const Digraph& g, const Digraph& product, int level);
// Projection G x H -> G.
DigraphMap product_projection(const Digraph& g, const Digraph& h, const Digraph& product);

}  // namespace pathhom
