#pragma once

#include "pathhom/digraph.hpp"
#include "pathhom/loops.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pathhom {

using Triangle = std::array<int, 3>;

struct Triangulation {
  std::vector<std::string> vertices;
  std::vector<Triangle> triangles;
  std::vector<int> colors;  // 1, 2 or 3 per vertex
  std::array<int, 3> corners{0, 0, 0};  // A, B, C
};

// Boundary cycle starting at A and passing B before C.
struct BoundaryCycle {
  std::vector<int> cycle;
  std::vector<int> side_vertices;  // boundary vertices other than the corners
};

// Checks triangle shape, that each edge lies in at most two triangles and that
// the boundary edges form one cycle through the three corners.
BoundaryCycle boundary_cycle(const Triangulation& t);
// Throws NotSperner naming the violated condition.
void check_sperner(const Triangulation& t);
bool is_sperner(const Triangulation& t);

// Undirected edges of the triangulation, sorted.
std::vector<Edge> triangulation_edges(const Triangulation& t);

// Colors 1 -> 2 -> 3 -> 1; equal colors give a double edge.
Digraph orient(const Triangulation& t);
Digraph orient_unchecked(const Triangulation& t);

std::optional<Triangle> find_tricolor_triangle(const Triangulation& t);
std::size_t count_tricolor_triangles(const Triangulation& t);

// Pushes every side vertex inside by adding the triangle with its two
// boundary neighbours.
Triangulation perturb_sides(const Triangulation& t);

// Regular k-subdivision with A = (0,0), B = (k,0), C = (0,k); sides get colors
// of their endpoints, interior vertices any color.
Triangulation generate_sperner(int k, std::uint64_t seed);

struct SpernerReport {
  bool f_is_map = false;
  bool g_is_map = false;
  bool f_after_g_identity = false;
  bool image_loop_nontrivial = false;
  std::optional<Triangle> tricolor;
};

Digraph colored_cycle();
// f: orient(T) -> S3 by color, g: S3 -> orient(T) onto A, B, C.
SpernerReport verify_sperner_maps(const Triangulation& t);

struct ContractionResult {
  LoopWord boundary;
  std::vector<RewriteStep> steps;
  LoopWord result;
  bool contracted() const { return result.is_trivial(); }
};

// Shells off one face at a time with inverse triangle moves on the boundary
// word, then reduces. Needs every face to be a triangle of orient_unchecked(T).
std::optional<ContractionResult> contract_boundary(const Triangulation& t);

Triangulation triangulation_from_json(const std::string& text);
std::string triangulation_to_json(const Triangulation& t);

}  // namespace pathhom
