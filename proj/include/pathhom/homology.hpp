#pragma once

#include "pathhom/chain.hpp"
#include "pathhom/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pathhom {

// Omega_p for p = 0..max_dim+1. Each Omega_p basis is a saturated integer
// lattice basis in Hermite form over the allowed-path basis A_p, so it serves
// both Q and Z. d_omega[p] is the matrix of the boundary Omega_p -> Omega_{p-1}.
struct OmegaComplex {
  Digraph digraph;
  int max_dim = 0;
  std::vector<std::vector<Path>> a_basis;
  std::vector<std::map<Path, int>> a_index;
  std::vector<std::vector<IntVec>> omega_basis;
  std::vector<IntMatrix> d_omega;

  int top() const { return max_dim + 1; }
  int omega_dim(int p) const;
  Chain omega_chain(int p, int j) const;
  Chain chain_from_a(int p, const RatVec& coords, Ring ring = Ring::Q) const;
  Chain chain_from_omega(int p, const std::vector<Rational>& coords, Ring ring = Ring::Q) const;
  // Coordinates over A_p, or nothing if some term is not allowed.
  std::optional<RatVec> a_coordinates(const Chain& c) const;
  // Coordinates over the Omega_p basis, or nothing if c is not in Omega_p.
  std::optional<std::vector<Rational>> omega_coordinates(const Chain& c) const;
};

OmegaComplex build_omega(const Digraph& g, int p_max, std::size_t budget = kDefaultPathBudget);

struct HomologyResult {
  Ring ring = Ring::Q;
  int max_dim = 0;
  std::vector<int> betti;
  std::vector<std::vector<Integer>> torsion;
  std::vector<std::vector<Chain>> generators;
};

HomologyResult homology(const OmegaComplex& complex, Ring ring = Ring::Q, bool with_generators = false);
HomologyResult homology(const Digraph& g, int p_max, Ring ring = Ring::Q, bool with_generators = false,
                        std::size_t budget = kDefaultPathBudget);

// True when the given cycles together with the boundaries span all cycles of
// Omega_p (over Z: as lattices, over Q: as vector spaces).
bool generates_homology(const OmegaComplex& complex, int p, const std::vector<Chain>& cycles, Ring ring);

bool is_omega_member(const Digraph& g, const Chain& c);

Chain standard_cycle_path(const Digraph& s);

struct BoundaryResult {
  bool bounding = false;
  Chain witness;
};

BoundaryResult is_boundary(const Chain& c, const OmegaComplex& complex, Ring ring);
BoundaryResult is_boundary(const Chain& c, const Digraph& g, Ring ring);

enum class Omega2Kind { DoubleEdge, Triangle, Square };

struct Omega2Term {
  Omega2Kind kind;
  Chain element;
  Integer multiplicity;
};

std::vector<Omega2Term> decompose_omega2(const Chain& omega, const Digraph& g);

const char* omega2_kind_name(Omega2Kind kind);

}  // namespace pathhom
