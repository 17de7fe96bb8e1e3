#include "pathhom/loops.hpp"

#include "pathhom/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace pathhom {

namespace {

struct WordHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

bool traversable(const Digraph& g, int a, int b) { return a == b || g.adjacent(a, b); }

std::vector<int> common_neighbours(const Digraph& g, int a, int b) {
  auto na = g.neighbors(a), nb = g.neighbors(b);
  std::vector<int> out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

RewriteStep step(MoveRule rule, bool inverse, int pos, std::vector<int> from, std::vector<int> to) {
  return RewriteStep{rule, inverse, pos, std::move(from), std::move(to)};
}

bool long_short_valid(const Digraph& g, MoveRule rule, const std::vector<int>& lng, const std::vector<int>& sht) {
  switch (rule) {
    case MoveRule::Dedup:
      return lng.size() == 2 && sht.size() == 1 && lng[0] == lng[1] && sht[0] == lng[0];
    case MoveRule::Backtrack:
      return lng.size() == 3 && sht.size() == 1 && lng[0] == lng[2] && sht[0] == lng[0] && lng[0] != lng[1] &&
             g.adjacent(lng[0], lng[1]);
    case MoveRule::TriangleDrop: {
      if (lng.size() != 3 || sht.size() != 2 || sht[0] != lng[0] || sht[1] != lng[2]) return false;
      const int a = lng[0], b = lng[1], c = lng[2];
      if (a == c) return a != b && g.adjacent(a, b);
      return is_triangle(g, a, b, c);
    }
    case MoveRule::SquareDrop:
      return lng.size() == 4 && sht.size() == 2 && sht[0] == lng[0] && sht[1] == lng[3] &&
             is_square(g, lng[0], lng[1], lng[2], lng[3]);
    case MoveRule::SquareSwap:
      return false;
  }
  return false;
}

}  // namespace

const char* move_rule_name(MoveRule r) {
  switch (r) {
    case MoveRule::TriangleDrop: return "triangle-drop";
    case MoveRule::SquareSwap: return "square-swap";
    case MoveRule::SquareDrop: return "square-drop";
    case MoveRule::Backtrack: return "backtrack";
    case MoveRule::Dedup: return "dedup";
  }
  return "?";
}

const char* equivalence_reason_name(EquivalenceReason r) {
  switch (r) {
    case EquivalenceReason::Trace: return "trace";
    case EquivalenceReason::HurewiczObstruction: return "hurewicz-obstruction";
    case EquivalenceReason::Exhausted: return "exhausted";
    case EquivalenceReason::Budget: return "budget";
  }
  return "?";
}

LoopWord make_loop(const Digraph& g, std::vector<int> word, int base) {
  if (word.empty() || word.front() != base || word.back() != base)
    throw Error(ErrorKind::BadEndpoints, "loop must start and end at the base vertex");
  for (int v : word)
    if (v < 0 || v >= g.size()) throw Error(ErrorKind::UnknownVertex, "index " + std::to_string(v));
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (!traversable(g, word[i], word[i + 1]))
      throw Error(ErrorKind::NotTraversable, "position " + std::to_string(i) + ": " + g.name(word[i]) + " " +
                                                 g.name(word[i + 1]));
  return LoopWord(g, std::move(word));
}

LoopWord make_loop(const Digraph& g, std::vector<int> word) {
  if (word.empty()) throw Error(ErrorKind::BadEndpoints, "empty word");
  int base = word.front();
  return make_loop(g, std::move(word), base);
}

LoopWord parse_loop(const Digraph& g, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> word;
  std::string name;
  while (in >> name) word.push_back(g.index_of(name));
  return make_loop(g, std::move(word));
}

std::string loop_to_string(const LoopWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.word().size(); ++i) {
    if (i) s += " ";
    s += w.digraph().name(w.word()[i]);
  }
  return s;
}

RewriteStep RewriteStep::reversed() const {
  RewriteStep r = *this;
  std::swap(r.replaced, r.replacement);
  if (rule != MoveRule::SquareSwap) r.inverse = !inverse;
  return r;
}

bool is_triangle(const Digraph& g, int a, int b, int c) {
  if (a == b || b == c || a == c) return false;
  int t[3] = {a, b, c};
  std::sort(t, t + 3);
  do {
    if (g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2])) return true;
  } while (std::next_permutation(t, t + 3));
  return false;
}

bool is_square(const Digraph& g, int a, int b, int c, int d) {
  const int q[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (q[i] == q[j]) return false;
  for (int s = 0; s < 4; ++s) {
    const int v = q[s], v1 = q[(s + 1) % 4], v2 = q[(s + 2) % 4], v3 = q[(s + 3) % 4];
    if (g.has_edge(v, v1) && g.has_edge(v, v3) && g.has_edge(v1, v2) && g.has_edge(v3, v2)) return true;
  }
  return false;
}

std::vector<RewriteStep> applicable_moves(const LoopWord& w) {
  const Digraph& g = w.digraph();
  const auto& W = w.word();
  const int n = static_cast<int>(W.size());
  std::vector<RewriteStep> moves;
  for (int i = 0; i < n; ++i) {
    const int a = W[i];
    if (i + 1 < n && W[i + 1] == a) moves.push_back(step(MoveRule::Dedup, false, i, {a, a}, {a}));
    if (i + 2 < n) {
      const int b = W[i + 1], c = W[i + 2];
      if (a == c && a != b) {
        moves.push_back(step(MoveRule::Backtrack, false, i, {a, b, a}, {a}));
        moves.push_back(step(MoveRule::TriangleDrop, false, i, {a, b, a}, {a, a}));
      }
      if (is_triangle(g, a, b, c)) moves.push_back(step(MoveRule::TriangleDrop, false, i, {a, b, c}, {a, c}));
      if (a != b && b != c && a != c)
        for (int d : common_neighbours(g, a, c))
          if (d != b && is_square(g, a, b, c, d)) moves.push_back(step(MoveRule::SquareSwap, false, i, {a, b, c}, {a, d, c}));
    }
    if (i + 3 < n && is_square(g, a, W[i + 1], W[i + 2], W[i + 3]))
      moves.push_back(step(MoveRule::SquareDrop, false, i, {a, W[i + 1], W[i + 2], W[i + 3]}, {a, W[i + 3]}));
  }
  for (int i = 0; i < n; ++i) {
    const int a = W[i];
    moves.push_back(step(MoveRule::Dedup, true, i, {a}, {a, a}));
    for (int b : g.neighbors(a)) moves.push_back(step(MoveRule::Backtrack, true, i, {a}, {a, b, a}));
    if (i + 1 >= n) continue;
    const int c = W[i + 1];
    if (a == c) {
      for (int b : g.neighbors(a)) moves.push_back(step(MoveRule::TriangleDrop, true, i, {a, a}, {a, b, a}));
      continue;
    }
    for (int b : common_neighbours(g, a, c))
      if (is_triangle(g, a, b, c)) moves.push_back(step(MoveRule::TriangleDrop, true, i, {a, c}, {a, b, c}));
    for (int b : g.neighbors(a)) {
      if (b == c) continue;
      for (int x : common_neighbours(g, b, c))
        if (x != a && is_square(g, a, b, x, c))
          moves.push_back(step(MoveRule::SquareDrop, true, i, {a, c}, {a, b, x, c}));
    }
  }
  return moves;
}

bool move_is_valid(const LoopWord& w, const RewriteStep& s) {
  const auto& W = w.word();
  if (s.position < 0 || s.replaced.empty() ||
      static_cast<std::size_t>(s.position) + s.replaced.size() > W.size())
    return false;
  if (!std::equal(s.replaced.begin(), s.replaced.end(), W.begin() + s.position)) return false;
  const Digraph& g = w.digraph();
  if (s.rule == MoveRule::SquareSwap) {
    return s.replaced.size() == 3 && s.replacement.size() == 3 && s.replaced[0] == s.replacement[0] &&
           s.replaced[2] == s.replacement[2] &&
           is_square(g, s.replaced[0], s.replaced[1], s.replaced[2], s.replacement[1]);
  }
  return s.inverse ? long_short_valid(g, s.rule, s.replacement, s.replaced)
                   : long_short_valid(g, s.rule, s.replaced, s.replacement);
}

LoopWord apply_move(const LoopWord& w, const RewriteStep& s) {
  if (!move_is_valid(w, s)) throw Error(ErrorKind::Mismatch, std::string("invalid ") + move_rule_name(s.rule) + " step");
  std::vector<int> out(w.word().begin(), w.word().begin() + s.position);
  out.insert(out.end(), s.replacement.begin(), s.replacement.end());
  out.insert(out.end(), w.word().begin() + s.position + static_cast<long>(s.replaced.size()), w.word().end());
  return make_loop(w.digraph(), std::move(out), w.base());
}

Reduction reduce_loop_trace(const LoopWord& w) {
  Reduction red{w, {}};
  for (;;) {
    const auto& W = red.result.word();
    const int n = static_cast<int>(W.size());
    std::optional<RewriteStep> chosen;
    for (int i = 0; i + 1 < n && !chosen; ++i) {
      if (W[i] == W[i + 1])
        chosen = step(MoveRule::Dedup, false, i, {W[i], W[i]}, {W[i]});
      else if (i + 2 < n && W[i] == W[i + 2])
        chosen = step(MoveRule::Backtrack, false, i, {W[i], W[i + 1], W[i]}, {W[i]});
    }
    for (int i = 0; i + 2 < n && !chosen; ++i) {
      if (is_triangle(red.result.digraph(), W[i], W[i + 1], W[i + 2]))
        chosen = step(MoveRule::TriangleDrop, false, i, {W[i], W[i + 1], W[i + 2]}, {W[i], W[i + 2]});
      else if (i + 3 < n && is_square(red.result.digraph(), W[i], W[i + 1], W[i + 2], W[i + 3]))
        chosen = step(MoveRule::SquareDrop, false, i, {W[i], W[i + 1], W[i + 2], W[i + 3]}, {W[i], W[i + 3]});
    }
    if (!chosen) return red;
    red.result = apply_move(red.result, *chosen);
    red.steps.push_back(std::move(*chosen));
  }
}

LoopWord reduce_loop(const LoopWord& w) { return reduce_loop_trace(w).result; }

EquivalenceResult loops_equivalent(const LoopWord& w1, const LoopWord& w2, const EquivalenceOptions& options) {
  if (w1.digraph() != w2.digraph() || w1.base() != w2.base())
    throw Error(ErrorKind::Mismatch, "loops must share digraph and base");
  EquivalenceResult result;
  if (w1.word() == w2.word()) {
    result.verdict = Verdict::Yes;
    result.reason = EquivalenceReason::Trace;
    return result;
  }
  if (options.use_obstruction) {
    auto cx = build_omega(w1.digraph(), 1);
    Chain diff = chi(w1) - chi(w2);
    if (!is_boundary(diff, cx, Ring::Z).bounding) {
      result.verdict = Verdict::No;
      result.reason = EquivalenceReason::HurewiczObstruction;
      return result;
    }
  }
  const int max_len = options.max_len.value_or(2 * std::max(w1.length(), w2.length()) + 4);
  const Digraph& g = w1.digraph();

  using Map = std::unordered_map<std::vector<int>, std::pair<std::vector<int>, RewriteStep>, WordHash>;
  Map seen[2];
  std::deque<std::vector<int>> queue[2];
  const RewriteStep none{MoveRule::Dedup, false, -1, {}, {}};
  seen[0].emplace(w1.word(), std::make_pair(std::vector<int>{}, none));
  seen[1].emplace(w2.word(), std::make_pair(std::vector<int>{}, none));
  queue[0].push_back(w1.word());
  queue[1].push_back(w2.word());

  std::optional<std::vector<int>> meet;
  while (!meet) {
    if (queue[0].empty() || queue[1].empty()) {
      result.verdict = Verdict::Inconclusive;
      result.reason = EquivalenceReason::Exhausted;
      result.explored = seen[0].size() + seen[1].size();
      return result;
    }
    if (result.explored >= options.max_steps) {
      result.verdict = Verdict::Inconclusive;
      result.reason = EquivalenceReason::Budget;
      return result;
    }
    const int side = queue[0].size() <= queue[1].size() ? 0 : 1;
    std::vector<int> cur = std::move(queue[side].front());
    queue[side].pop_front();
    ++result.explored;
    LoopWord lw(g, cur);
    for (auto& mv : applicable_moves(lw)) {
      std::vector<int> next(cur.begin(), cur.begin() + mv.position);
      next.insert(next.end(), mv.replacement.begin(), mv.replacement.end());
      next.insert(next.end(), cur.begin() + mv.position + static_cast<long>(mv.replaced.size()), cur.end());
      if (static_cast<int>(next.size()) - 1 > max_len) continue;
      if (seen[side].count(next)) continue;
      seen[side].emplace(next, std::make_pair(cur, mv));
      if (seen[1 - side].count(next)) {
        meet = next;
        break;
      }
      queue[side].push_back(std::move(next));
    }
  }

  std::vector<RewriteStep> head;
  for (std::vector<int> x = *meet; x != w1.word();) {
    auto& [parent, mv] = seen[0].at(x);
    head.push_back(mv);
    x = parent;
  }
  std::reverse(head.begin(), head.end());
  for (std::vector<int> x = *meet; x != w2.word();) {
    auto& [parent, mv] = seen[1].at(x);
    RewriteStep back = mv.reversed();
    head.push_back(back);
    x = parent;
  }
  result.verdict = Verdict::Yes;
  result.reason = EquivalenceReason::Trace;
  result.trace = std::move(head);
  return result;
}

LoopWord concat(const LoopWord& w1, const LoopWord& w2) {
  if (w1.digraph() != w2.digraph() || w1.base() != w2.base())
    throw Error(ErrorKind::Mismatch, "loops must share digraph and base");
  std::vector<int> word = w1.word();
  word.insert(word.end(), w2.word().begin() + 1, w2.word().end());
  return LoopWord(w1.digraph(), std::move(word));
}

LoopWord inverse(const LoopWord& w) {
  std::vector<int> word(w.word().rbegin(), w.word().rend());
  return LoopWord(w.digraph(), std::move(word));
}

Chain chi(const LoopWord& w) {
  const Digraph& g = w.digraph();
  const auto& W = w.word();
  Chain c(1, Ring::Z);
  for (std::size_t i = 0; i + 1 < W.size(); ++i) {
    const int a = W[i], b = W[i + 1];
    if (a == b) continue;
    const bool fwd = g.has_edge(a, b), bwd = g.has_edge(b, a);
    if (fwd && (!bwd || a < b))
      c.add_term({a, b}, Rational(1));
    else
      c.add_term({b, a}, Rational(-1));
  }
  return c;
}

BoundaryResult hurewicz_class(const LoopWord& w, const OmegaComplex& complex) {
  return is_boundary(chi(w), complex, Ring::Z);
}

BoundaryResult hurewicz_class(const LoopWord& w) { return hurewicz_class(w, build_omega(w.digraph(), 1)); }

std::vector<std::vector<int>> connected_components(const Digraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.size()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.edges()) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> slot(static_cast<std::size_t>(g.size()), -1);
  for (int v = 0; v < g.size(); ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

}  // namespace pathhom
