#pragma once

#include "pathhom/digraph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pathhom {

enum class OneStep { Forward, Backward, Both, No };

const char* one_step_name(OneStep s);

// Forward: f(x) =-> g(x) for all x. Backward: g(x) =-> f(x) for all x.
OneStep one_step_homotopic(const DigraphMap& f, const DigraphMap& g);

struct HomotopySequence {
  std::vector<DigraphMap> maps;
  std::vector<OneStep> directions;
};

enum class Verdict { Yes, No, Inconclusive };

const char* verdict_name(Verdict v);

struct HomotopyOptions {
  std::size_t budget = 100'000;  // maps visited before giving up
  bool exhaustive = false;
  std::uint64_t cap = 1'000'000;  // largest map space searched exhaustively
};

struct HomotopyResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<HomotopySequence> sequence;
  std::size_t explored = 0;
};

HomotopyResult homotopic(const DigraphMap& f, const DigraphMap& g, const HomotopyOptions& options = {});

// Number of assignments V_G -> V_H, saturating at UINT64_MAX.
std::uint64_t map_space_size(const Digraph& source, const Digraph& target);

// F on cylinder(G) with F(x,0) = f(x), F(x,1) = g(x); needs f(x) =-> g(x).
DigraphMap one_step_homotopy_map(const DigraphMap& f, const DigraphMap& g);

enum class ReductionRule { Abi, OneStepRetraction };

const char* reduction_rule_name(ReductionRule r);

struct ReductionStep {
  std::string vertex;
  std::string witness;
  ReductionRule rule;
};

struct ReductionTrace {
  std::vector<ReductionStep> removed;
  Digraph residual;
  bool reduced_to_point() const { return residual.size() == 1; }
};

// First neighbour b0 (declaration order) such that a -> b implies b0 -> b and
// b -> a implies b -> b0 for every other neighbour b of a.
std::optional<int> abi_witness(const Digraph& g, int a);

ReductionTrace find_reduction(const Digraph& g);
bool replay_reduction(const Digraph& g, const ReductionTrace& trace);

enum class RetractionCriterion { OneStepForward, OneStepBackward, HomotopySearch, None };

const char* retraction_criterion_name(RetractionCriterion c);

struct RetractionResult {
  bool deformation = false;
  RetractionCriterion criterion = RetractionCriterion::None;
  std::optional<HomotopyResult> search;
};

// r: G -> H where H is a sub-digraph of G matched by vertex names.
RetractionResult is_deformation_retraction(const DigraphMap& r, const HomotopyOptions& options = {});

// Checks dL + Ld = g_* - f_* on Omega_p(G) for p <= p_max, L(v) = F_*(lift v).
bool verify_chain_homotopy(const DigraphMap& F, const DigraphMap& f, const DigraphMap& g, int p_max = 2);

}  // namespace pathhom
