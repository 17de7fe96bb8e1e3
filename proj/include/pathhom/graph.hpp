#pragma once

#include "pathhom/digraph.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/homotopy.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pathhom {

// Undirected graph without loops. Edges are stored as (low, high) index pairs
// in order of first appearance.
class UGraph {
 public:
  UGraph() = default;

  static UGraph make(std::vector<std::string> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges);
  static UGraph from_indices(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int a, int b) const;

  bool operator==(const UGraph& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

Digraph to_double_digraph(const UGraph& g);
UGraph from_double_digraph(const Digraph& g);
bool is_double_digraph(const Digraph& g);

// Vertex (x,y) has index x + |V_G| * y.
UGraph graph_product(const UGraph& g, const UGraph& h);
UGraph undirected_cycle(int n);

// Graph maps are carried as digraph maps between the double digraphs.
DigraphMap graph_map(const UGraph& source, const UGraph& target, std::vector<int> assignment);

HomologyResult graph_homology(const UGraph& g, int p_max, Ring ring = Ring::Q, bool with_generators = false,
                              std::size_t budget = kDefaultPathBudget);
bool graph_one_step_homotopic(const DigraphMap& f, const DigraphMap& g);
HomotopyResult graph_homotopic(const DigraphMap& f, const DigraphMap& g, const HomotopyOptions& options = {});
ReductionTrace graph_reduce(const UGraph& g);

}  // namespace pathhom
