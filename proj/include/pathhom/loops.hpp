#pragma once

#include "pathhom/chain.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/homotopy.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pathhom {

// Closed walk v0 v1 ... vn with v0 = vn = base; consecutive letters are equal
// or joined by an edge in either direction.
class LoopWord {
 public:
  LoopWord(Digraph g, std::vector<int> word) : digraph_(std::move(g)), word_(std::move(word)) {}

  const Digraph& digraph() const { return digraph_; }
  const std::vector<int>& word() const { return word_; }
  int base() const { return word_.front(); }
  int length() const { return static_cast<int>(word_.size()) - 1; }
  bool is_trivial() const { return word_.size() == 1; }
  bool operator==(const LoopWord& other) const { return word_ == other.word_ && digraph_ == other.digraph_; }

 private:
  Digraph digraph_;
  std::vector<int> word_;
};

LoopWord make_loop(const Digraph& g, std::vector<int> word, int base);
LoopWord make_loop(const Digraph& g, std::vector<int> word);
// Whitespace separated vertex names.
LoopWord parse_loop(const Digraph& g, const std::string& text);
std::string loop_to_string(const LoopWord& w);

enum class MoveRule { TriangleDrop, SquareSwap, SquareDrop, Backtrack, Dedup };

const char* move_rule_name(MoveRule r);

struct RewriteStep {
  MoveRule rule;
  bool inverse = false;
  int position = 0;
  std::vector<int> replaced;
  std::vector<int> replacement;

  bool expansion() const { return replacement.size() > replaced.size(); }
  RewriteStep reversed() const;
  bool operator==(const RewriteStep& other) const = default;
};

// {a,b,c} distinct and ordered somehow as v -> v', v -> v'', v' -> v''.
bool is_triangle(const Digraph& g, int a, int b, int c);
// (a,b,c,d) is a cyclic or reversed cyclic ordering of v, v', v'', v''' with
// v -> v', v' -> v'', v -> v''', v''' -> v''.
bool is_square(const Digraph& g, int a, int b, int c, int d);

std::vector<RewriteStep> applicable_moves(const LoopWord& w);
// Validates the side condition against the digraph and applies the step.
LoopWord apply_move(const LoopWord& w, const RewriteStep& step);
bool move_is_valid(const LoopWord& w, const RewriteStep& step);

struct Reduction {
  LoopWord result;
  std::vector<RewriteStep> steps;
};

// Backtracks and repeated letters are removed first (leftmost), then
// triangle and square drops (leftmost), until nothing shortens the word.
Reduction reduce_loop_trace(const LoopWord& w);
LoopWord reduce_loop(const LoopWord& w);

struct EquivalenceOptions {
  std::optional<int> max_len;  // default 2 * max(|w1|, |w2|) + 4
  std::size_t max_steps = 100'000;
  bool use_obstruction = true;
};

enum class EquivalenceReason { Trace, HurewiczObstruction, Exhausted, Budget };

const char* equivalence_reason_name(EquivalenceReason r);

struct EquivalenceResult {
  Verdict verdict = Verdict::Inconclusive;
  EquivalenceReason reason = EquivalenceReason::Budget;
  std::vector<RewriteStep> trace;
  std::size_t explored = 0;
};

EquivalenceResult loops_equivalent(const LoopWord& w1, const LoopWord& w2, const EquivalenceOptions& options = {});

LoopWord concat(const LoopWord& w1, const LoopWord& w2);
LoopWord inverse(const LoopWord& w);

// Steps over a double edge use the edge from the lower to the higher index.
Chain chi(const LoopWord& w);

BoundaryResult hurewicz_class(const LoopWord& w);
BoundaryResult hurewicz_class(const LoopWord& w, const OmegaComplex& complex);

std::vector<std::vector<int>> connected_components(const Digraph& g);

}  // namespace pathhom
