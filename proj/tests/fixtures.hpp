#pragma once

#include "pathhom/digraph.hpp"

#include <random>
#include <string>
#include <vector>

namespace fixtures {

using pathhom::Digraph;

inline Digraph triangle() { return pathhom::simplex_digraph(2); }

// 0->1->3, 0->2->3
inline Digraph square() { return pathhom::cube_digraph(2); }

inline Digraph cyclic_triangle() { return pathhom::cycle_digraph({true, true, true}); }

inline Digraph s5() { return pathhom::cycle_digraph({true, true, true, true, true}); }

inline Digraph bipyramid() {
  return pathhom::make_digraph({"1", "2", "3", "4", "5"}, {{"1", "2"}, {"2", "3"}, {"3", "1"},
                                                          {"1", "4"}, {"2", "4"}, {"3", "4"},
                                                          {"1", "5"}, {"2", "5"}, {"3", "5"}});
}

// Same as the bipyramid with the 1-3 edge turned around; vertices declared so
// that the reduction removes 5, 4, 3, 2 in that order.
inline Digraph bipyramid_acyclic_base() {
  return pathhom::make_digraph({"5", "4", "3", "2", "1"}, {{"1", "2"}, {"2", "3"}, {"1", "3"},
                                                          {"1", "4"}, {"2", "4"}, {"3", "4"},
                                                          {"1", "5"}, {"2", "5"}, {"3", "5"}});
}

inline Digraph octahedron() {
  return pathhom::make_digraph({"0", "1", "2", "3", "4", "5"}, {{"0", "2"}, {"0", "3"}, {"1", "2"}, {"1", "3"},
                                                               {"2", "4"}, {"2", "5"}, {"3", "4"}, {"3", "5"}});
}

// Five vertices retracting onto the cyclic triangle 1->3->4->1 via 0->1, 2->3.
inline Digraph retract_example() {
  return pathhom::make_digraph({"0", "1", "2", "3", "4"}, {{"1", "3"}, {"3", "4"}, {"4", "1"},
                                                          {"0", "1"}, {"2", "3"}, {"0", "2"}, {"4", "0"}});
}

// A 5-cycle 0-1-2-3-4-0 that is C-homotopic to the 3-cycle 0->5->6->0.
inline Digraph five_to_three() {
  return pathhom::make_digraph({"0", "1", "2", "3", "4", "5", "6"},
                               {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"0", "4"}, {"0", "5"},
                                {"5", "1"}, {"5", "2"}, {"5", "6"}, {"6", "3"}, {"6", "0"}});
}

inline Digraph directed_tree() {
  return pathhom::make_digraph({"r", "a", "b", "c", "d", "e"},
                               {{"r", "a"}, {"b", "r"}, {"a", "c"}, {"d", "a"}, {"b", "e"}});
}

inline std::vector<std::pair<std::string, Digraph>> all() {
  return {{"triangle", triangle()},
          {"square", square()},
          {"cyclic_triangle", cyclic_triangle()},
          {"s5", s5()},
          {"bipyramid", bipyramid()},
          {"bipyramid_acyclic_base", bipyramid_acyclic_base()},
          {"octahedron", octahedron()},
          {"retract_example", retract_example()},
          {"five_to_three", five_to_three()},
          {"directed_tree", directed_tree()},
          {"simplex3", pathhom::simplex_digraph(3)},
          {"cube3", pathhom::cube_digraph(3)}};
}

inline Digraph random_digraph(std::mt19937_64& rng, int n, double density) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<pathhom::Edge> edges;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && u(rng) < density) edges.emplace_back(a, b);
  return Digraph::from_indices(names, edges);
}

}  // namespace fixtures
