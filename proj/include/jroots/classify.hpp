#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "jroots/lattice.hpp"

namespace jroots {

enum class RootKind {
  RealPositive,
  RealNegative,
  AlmostRealPositive,
  AlmostRealNegative,
  DegreeZeroReal,
  NotRealQ,
  NotRealRangeViolation,
  NotInLattice,
  Zero,
};

std::string to_string(RootKind kind);
bool is_real(RootKind kind);
bool is_almost_real(RootKind kind);

/// How the reduction x -> s_beta(dec(x)) stopped.
enum class TerminalKind {
  /// Reached -beta with the range condition intact throughout.
  NegativeBeta,
  /// Some step produced an entry outside [0, degree].
  RangeViolation,
  /// All entries became non-positive without landing on -beta.
  SignChangeOther,
};

std::string to_string(TerminalKind kind);

struct ReductionStep {
  LatticeVector before_sort;
  LatticeVector sorted;
  Coord r;
  /// Degree of s_beta(sorted).
  Coord degree_after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  TerminalKind terminal;
  /// The vector produced by the last step.
  std::optional<LatticeVector> last;
};

struct Classification {
  RootKind kind;
  /// Degree of the input; absent for NotInLattice.
  std::optional<Coord> degree;
  /// q of the input; absent for NotInLattice.
  std::optional<Coord> q_value;
  /// Present for every input whose reduction was run (|degree| >= 1,
  /// range condition and q = 2 satisfied). For negative-degree inputs this
  /// is the trace of the negated vector.
  std::optional<ReductionTrace> trace;
};

/// Decides whether `v` is a real root, an almost real root, or neither,
/// using the range condition, q = 2 and the s_beta(dec(.)) reduction.
Classification classify(const LatticeVector& v);
Classification classify(const SystemParams& params, std::span<const Coord> x);

/// Runs x -> s_beta(dec(x)) to termination. Requires degree >= 1, all
/// entries in [0, degree] and q = 2; throws ContractError otherwise.
ReductionTrace reduce_trace(const LatticeVector& v);

/// Independent oracle: breadth-first search of the orbit W * beta,
/// restricted to degrees in [0, max_degree] and entries bounded by
/// max_degree * k in absolute value. Returns the positive real roots of
/// degree <= max_degree. Throws ResourceLimitError past `state_cap` states.
std::set<std::vector<Coord>> bruteforce_positive_real_roots(const SystemParams& params, Coord max_degree,
                                                            std::size_t state_cap = 10'000'000);

}  // namespace jroots
