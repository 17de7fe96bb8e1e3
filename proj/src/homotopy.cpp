#include "pathhom/homotopy.hpp"

#include "pathhom/chain.hpp"
#include "pathhom/error.hpp"
#include "pathhom/homology.hpp"

#include <deque>
#include <unordered_map>

namespace pathhom {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

void require_same_ends(const DigraphMap& f, const DigraphMap& g) {
  if (f.source() != g.source() || f.target() != g.target())
    throw Error(ErrorKind::Mismatch, "maps do not share source and target");
}

// All digraph maps h != f with f(x) =-> h(x) (forward) or h(x) =-> f(x).
void one_step_neighbours(const Digraph& src, const Digraph& dst, const std::vector<int>& f, bool forward,
                         std::vector<std::vector<int>>& out) {
  const int n = src.size();
  std::vector<int> h(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> choices(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    choices[x].push_back(f[x]);
    const auto& next = forward ? dst.out(f[x]) : dst.in(f[x]);
    choices[x].insert(choices[x].end(), next.begin(), next.end());
  }
  auto fits = [&](int x) {
    for (int y : src.out(x))
      if (y < x && !dst.arrow_eq(h[x], h[y])) return false;
    for (int y : src.in(x))
      if (y < x && !dst.arrow_eq(h[y], h[x])) return false;
    return true;
  };
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      if (h != f) out.push_back(h);
      return;
    }
    for (int c : choices[x]) {
      h[x] = c;
      if (fits(x)) self(self, x + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

const char* one_step_name(OneStep s) {
  switch (s) {
    case OneStep::Forward: return "forward";
    case OneStep::Backward: return "backward";
    case OneStep::Both: return "both";
    case OneStep::No: return "no";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* reduction_rule_name(ReductionRule r) {
  return r == ReductionRule::Abi ? "abi" : "one-step-retraction";
}

const char* retraction_criterion_name(RetractionCriterion c) {
  switch (c) {
    case RetractionCriterion::OneStepForward: return "one-step x=->r(x)";
    case RetractionCriterion::OneStepBackward: return "one-step r(x)=->x";
    case RetractionCriterion::HomotopySearch: return "homotopy search";
    case RetractionCriterion::None: return "none";
  }
  return "?";
}

OneStep one_step_homotopic(const DigraphMap& f, const DigraphMap& g) {
  require_same_ends(f, g);
  const Digraph& h = f.target();
  bool fwd = true, bwd = true;
  for (int x = 0; x < f.source().size(); ++x) {
    fwd = fwd && h.arrow_eq(f(x), g(x));
    bwd = bwd && h.arrow_eq(g(x), f(x));
  }
  if (fwd && bwd) return OneStep::Both;
  if (fwd) return OneStep::Forward;
  if (bwd) return OneStep::Backward;
  return OneStep::No;
}

std::uint64_t map_space_size(const Digraph& source, const Digraph& target) {
  std::uint64_t total = 1;
  const std::uint64_t base = static_cast<std::uint64_t>(target.size());
  for (int i = 0; i < source.size(); ++i) {
    if (base != 0 && total > UINT64_MAX / base) return UINT64_MAX;
    total *= base;
  }
  return total;
}

HomotopyResult homotopic(const DigraphMap& f, const DigraphMap& g, const HomotopyOptions& options) {
  require_same_ends(f, g);
  HomotopyResult result;
  std::size_t budget = options.budget;
  if (options.exhaustive) {
    if (map_space_size(f.source(), f.target()) > options.cap)
      throw Error(ErrorKind::StateSpaceTooLarge,
                  "map space exceeds the exhaustive cap of " + std::to_string(options.cap));
    budget = static_cast<std::size_t>(options.cap);
  }
  const Digraph& src = f.source();
  const Digraph& dst = f.target();
  std::vector<std::vector<int>> nodes{f.assignment()};
  std::vector<std::pair<int, OneStep>> parent{{-1, OneStep::Both}};
  std::unordered_map<std::vector<int>, int, VecHash> seen{{f.assignment(), 0}};
  std::deque<int> queue{0};
  int found = f.assignment() == g.assignment() ? 0 : -1;
  std::vector<std::vector<int>> next;
  while (found < 0 && !queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (bool forward : {true, false}) {
      next.clear();
      one_step_neighbours(src, dst, nodes[cur], forward, next);
      for (auto& h : next) {
        if (seen.count(h)) continue;
        if (nodes.size() >= budget) {
          result.verdict = Verdict::Inconclusive;
          result.explored = nodes.size();
          return result;
        }
        int id = static_cast<int>(nodes.size());
        seen.emplace(h, id);
        nodes.push_back(h);
        parent.emplace_back(cur, forward ? OneStep::Forward : OneStep::Backward);
        if (h == g.assignment()) {
          found = id;
          break;
        }
        queue.push_back(id);
      }
      if (found >= 0) break;
    }
  }
  result.explored = nodes.size();
  if (found < 0) {
    result.verdict = Verdict::No;
    return result;
  }
  std::vector<int> chain;
  for (int v = found; v >= 0; v = parent[v].first) chain.push_back(v);
  HomotopySequence seq;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) seq.maps.push_back(DigraphMap::make(src, dst, nodes[*it]));
  for (std::size_t i = 1; i < seq.maps.size(); ++i) seq.directions.push_back(one_step_homotopic(seq.maps[i - 1], seq.maps[i]));
  result.verdict = Verdict::Yes;
  result.sequence = std::move(seq);
  return result;
}

DigraphMap one_step_homotopy_map(const DigraphMap& f, const DigraphMap& g) {
  OneStep s = one_step_homotopic(f, g);
  if (s != OneStep::Forward && s != OneStep::Both)
    throw Error(ErrorKind::Mismatch, "f(x) =-> g(x) fails for some x");
  const Digraph& src = f.source();
  Digraph cyl = cylinder(src);
  std::vector<int> a(static_cast<std::size_t>(cyl.size()));
  for (int x = 0; x < src.size(); ++x) {
    a[product_index(x, 0, src.size())] = f(x);
    a[product_index(x, 1, src.size())] = g(x);
  }
  return DigraphMap::make(cyl, f.target(), std::move(a));
}

std::optional<int> abi_witness(const Digraph& g, int a) {
  const auto nbrs = g.neighbors(a);
  for (int b0 : nbrs) {
    bool ok = true;
    for (int b : nbrs) {
      if (b == b0) continue;
      if (g.has_edge(a, b) && !g.has_edge(b0, b)) ok = false;
      if (g.has_edge(b, a) && !g.has_edge(b, b0)) ok = false;
      if (!ok) break;
    }
    if (ok) return b0;
  }
  return std::nullopt;
}

ReductionTrace find_reduction(const Digraph& g) {
  ReductionTrace trace;
  Digraph cur = g;
  bool progress = true;
  while (progress && cur.size() > 1) {
    progress = false;
    for (int a = 0; a < cur.size(); ++a) {
      auto b0 = abi_witness(cur, a);
      if (!b0) continue;
      ReductionRule rule = cur.neighbors(a).size() == 1 ? ReductionRule::OneStepRetraction : ReductionRule::Abi;
      trace.removed.push_back({cur.name(a), cur.name(*b0), rule});
      std::vector<int> keep;
      for (int v = 0; v < cur.size(); ++v)
        if (v != a) keep.push_back(v);
      cur = induced_subdigraph(cur, keep);
      progress = true;
      break;
    }
  }
  trace.residual = cur;
  return trace;
}

bool replay_reduction(const Digraph& g, const ReductionTrace& trace) {
  Digraph cur = g;
  for (const auto& step : trace.removed) {
    auto a = cur.find(step.vertex);
    auto b0 = cur.find(step.witness);
    if (!a || !b0 || !cur.adjacent(*a, *b0)) return false;
    // r(a) = b0 must be a digraph map onto the rest, with a =-> b0 or b0 =-> a
    std::vector<int> keep;
    for (int v = 0; v < cur.size(); ++v)
      if (v != *a) keep.push_back(v);
    Digraph rest = induced_subdigraph(cur, keep);
    std::vector<int> r(static_cast<std::size_t>(cur.size()));
    for (int v = 0; v < cur.size(); ++v) r[v] = rest.index_of(cur.name(v == *a ? *b0 : v));
    if (!is_digraph_map(cur, rest, r)) return false;
    cur = rest;
  }
  return cur == trace.residual;
}

RetractionResult is_deformation_retraction(const DigraphMap& r, const HomotopyOptions& options) {
  const Digraph& g = r.source();
  const Digraph& h = r.target();
  std::vector<int> inc(static_cast<std::size_t>(h.size()));
  for (int y = 0; y < h.size(); ++y) {
    auto x = g.find(h.name(y));
    if (!x) throw Error(ErrorKind::NotARetraction, "vertex " + h.name(y) + " is not in the source");
    inc[y] = *x;
  }
  if (!is_digraph_map(h, g, inc)) throw Error(ErrorKind::NotARetraction, "target is not a sub-digraph of the source");
  for (int y = 0; y < h.size(); ++y)
    if (r(inc[y]) != y) throw Error(ErrorKind::NotARetraction, "r moves " + h.name(y));

  RetractionResult result;
  std::vector<int> ir(static_cast<std::size_t>(g.size()));
  for (int x = 0; x < g.size(); ++x) ir[x] = inc[r(x)];
  auto composite = DigraphMap::make(g, g, ir);
  OneStep s = one_step_homotopic(DigraphMap::identity(g), composite);
  if (s == OneStep::Forward || s == OneStep::Both) {
    result.deformation = true;
    result.criterion = RetractionCriterion::OneStepForward;
    return result;
  }
  if (s == OneStep::Backward) {
    result.deformation = true;
    result.criterion = RetractionCriterion::OneStepBackward;
    return result;
  }
  auto search = homotopic(composite, DigraphMap::identity(g), options);
  result.deformation = search.verdict == Verdict::Yes;
  result.criterion = result.deformation ? RetractionCriterion::HomotopySearch : RetractionCriterion::None;
  result.search = std::move(search);
  return result;
}

bool verify_chain_homotopy(const DigraphMap& F, const DigraphMap& f, const DigraphMap& g, int p_max) {
  require_same_ends(f, g);
  const Digraph& src = f.source();
  const int n = src.size();
  if (F.source() != cylinder(src) || F.target() != f.target())
    throw Error(ErrorKind::BadRestriction, "F must be defined on the cylinder over the source of f");
  for (int x = 0; x < n; ++x) {
    if (F(product_index(x, 0, n)) != f(x) || F(product_index(x, 1, n)) != g(x))
      throw Error(ErrorKind::BadRestriction, "F does not restrict to f and g at " + src.name(x));
  }
  auto cx = build_omega(src, p_max);
  for (int p = 0; p <= p_max; ++p) {
    for (int j = 0; j < cx.omega_dim(p); ++j) {
      Chain v = cx.omega_chain(p, j);
      Chain lhs = boundary(induced_map(F, lift(v, src)));
      if (p > 0) lhs += induced_map(F, lift(boundary(v), src));
      Chain rhs = induced_map(g, v) - induced_map(f, v);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace pathhom
