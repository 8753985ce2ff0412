#include "jroots/classify.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>

#include "jroots/errors.hpp"
#include "jroots/weyl.hpp"

namespace jroots {
namespace {

bool within_range(std::span<const Coord> x, Coord d) {
  return std::all_of(x.begin(), x.end(), [d](Coord v) { return 0 <= v && v <= d; });
}

bool all_non_positive(std::span<const Coord> x) {
  return std::all_of(x.begin(), x.end(), [](Coord v) { return v <= 0; });
}

RootKind negate(RootKind kind) {
  switch (kind) {
    case RootKind::RealPositive: return RootKind::RealNegative;
    case RootKind::RealNegative: return RootKind::RealPositive;
    case RootKind::AlmostRealPositive: return RootKind::AlmostRealNegative;
    case RootKind::AlmostRealNegative: return RootKind::AlmostRealPositive;
    default: return kind;
  }
}

ReductionTrace run_reduction(const LatticeVector& start) {
  ReductionTrace trace{{}, TerminalKind::RangeViolation, std::nullopt};
  const LatticeVector minus_beta = -LatticeVector::beta(start.params());
  LatticeVector current = start;
  // Every step strictly lowers the degree while the range condition holds,
  // so the loop runs at most deg(start) times on genuine inputs.
  for (;;) {
    LatticeVector sorted = dec(current);
    const Coord r = s_beta_shift(sorted);
    LatticeVector next = apply_s_beta(sorted);
    const Coord d = degree(next);
    trace.steps.push_back({current, sorted, r, d});
    if (all_non_positive(next.coords())) {
      trace.terminal = next == minus_beta ? TerminalKind::NegativeBeta : TerminalKind::SignChangeOther;
      trace.last = std::move(next);
      return trace;
    }
    if (d < 1 || !within_range(next.coords(), d)) {
      trace.terminal = TerminalKind::RangeViolation;
      trace.last = std::move(next);
      return trace;
    }
    current = std::move(next);
  }
}

Classification classify_positive_degree(const LatticeVector& v, Coord d, Coord qv) {
  if (!within_range(v.coords(), d)) return {RootKind::NotRealRangeViolation, d, qv, std::nullopt};
  if (qv != 2) return {RootKind::NotRealQ, d, qv, std::nullopt};
  ReductionTrace trace = run_reduction(v);
  const RootKind kind =
      trace.terminal == TerminalKind::NegativeBeta ? RootKind::RealPositive : RootKind::AlmostRealPositive;
  return {kind, d, qv, std::move(trace)};
}

}  // namespace

std::string to_string(RootKind kind) {
  switch (kind) {
    case RootKind::RealPositive: return "real positive";
    case RootKind::RealNegative: return "real negative";
    case RootKind::AlmostRealPositive: return "almost real positive";
    case RootKind::AlmostRealNegative: return "almost real negative";
    case RootKind::DegreeZeroReal: return "real, degree 0";
    case RootKind::NotRealQ: return "not a real root (q != 2)";
    case RootKind::NotRealRangeViolation: return "not a real root (entry outside [0, degree])";
    case RootKind::NotInLattice: return "not in root lattice";
    case RootKind::Zero: return "zero vector";
  }
  return "unknown";
}

bool is_real(RootKind kind) {
  return kind == RootKind::RealPositive || kind == RootKind::RealNegative || kind == RootKind::DegreeZeroReal;
}

bool is_almost_real(RootKind kind) {
  return kind == RootKind::AlmostRealPositive || kind == RootKind::AlmostRealNegative;
}

std::string to_string(TerminalKind kind) {
  switch (kind) {
    case TerminalKind::NegativeBeta: return "real";
    case TerminalKind::RangeViolation: return "almost";
    case TerminalKind::SignChangeOther: return "sign-change";
  }
  return "unknown";
}

Classification classify(const LatticeVector& v) {
  const Coord d = degree(v);
  const Coord qv = q(v);
  if (std::all_of(v.coords().begin(), v.coords().end(), [](Coord c) { return c == 0; }))
    return {RootKind::Zero, 0, 0, std::nullopt};
  if (d == 0) {
    // sum 0 and sum of squares 2 force +-(e_i - e_j)
    return {qv == 2 ? RootKind::DegreeZeroReal : RootKind::NotRealQ, d, qv, std::nullopt};
  }
  if (d < 0) {
    Classification mirrored = classify_positive_degree(-v, -d, qv);
    mirrored.kind = negate(mirrored.kind);
    mirrored.degree = d;
    return mirrored;
  }
  return classify_positive_degree(v, d, qv);
}

Classification classify(const SystemParams& params, std::span<const Coord> x) {
  if (!in_lattice(params, x)) return {RootKind::NotInLattice, std::nullopt, std::nullopt, std::nullopt};
  return classify(LatticeVector(params, std::vector<Coord>(x.begin(), x.end())));
}

ReductionTrace reduce_trace(const LatticeVector& v) {
  const Coord d = degree(v);
  if (d < 1) throw ContractError("reduction requires degree >= 1, got " + std::to_string(d));
  if (!within_range(v.coords(), d))
    throw ContractError("reduction requires all entries in [0, " + std::to_string(d) + "]");
  if (const Coord qv = q(v); qv != 2)
    throw ContractError("reduction requires q = 2, got q = " + std::to_string(qv));
  return run_reduction(v);
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Coord>& x) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Coord c : x) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
  }
};

bool is_positive_degree_zero(std::span<const Coord> x) {
  // e_i - e_j is positive when i > j: the +1 sits after the -1.
  std::size_t plus = 0, minus = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 1) plus = i;
    if (x[i] == -1) minus = i;
  }
  return plus > minus;
}

}  // namespace

std::set<std::vector<Coord>> bruteforce_positive_real_roots(const SystemParams& params, Coord max_degree,
                                                            std::size_t state_cap) {
  if (max_degree < 0) throw ContractError("max_degree must be non-negative");
  const Coord bound = checked_mul(max_degree, params.k());
  const auto admissible = [&](const LatticeVector& v) {
    const Coord d = degree(v);
    if (d < 0 || d > max_degree) return false;
    return std::all_of(v.coords().begin(), v.coords().end(),
                       [bound](Coord c) { return -bound <= c && c <= bound; });
  };

  std::vector<Reflection> generators{Reflection::beta()};
  for (int i = 1; i < params.n(); ++i) generators.push_back(Reflection::simple(i));

  std::unordered_set<std::vector<Coord>, VectorHash> seen;
  std::deque<LatticeVector> frontier;
  const LatticeVector start = LatticeVector::beta(params);
  seen.insert(start.values());
  frontier.push_back(start);
  while (!frontier.empty()) {
    const LatticeVector v = std::move(frontier.front());
    frontier.pop_front();
    for (const Reflection& s : generators) {
      LatticeVector w = apply(s, v);
      if (!admissible(w)) continue;
      if (!seen.insert(w.values()).second) continue;
      if (seen.size() > state_cap)
        throw ResourceLimitError("brute-force orbit search exceeded " + std::to_string(state_cap) + " states");
      frontier.push_back(std::move(w));
    }
  }

  std::set<std::vector<Coord>> out;
  for (const auto& x : seen) {
    const Coord d = degree(params, x);
    if (d >= 1 || is_positive_degree_zero(x)) out.insert(x);
  }
  return out;
}

}  // namespace jroots
