#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jroots/classify.hpp"
#include "jroots/lattice.hpp"
#include "jroots/rational.hpp"

namespace jroots {

enum class OrbitKind { Real, AlmostReal };

std::string to_string(OrbitKind kind);

/// A W(A_{n-1})-orbit of positive real or almost real roots of fixed degree,
/// represented by its non-increasing member.
struct OrbitClass {
  LatticeVector representative;
  Coord degree;
  OrbitKind kind;
  BigInt orbit_size;
  /// value -> multiplicity, largest value first.
  std::map<Coord, int, std::greater<>> multiset_signature;
};

/// Knobs shared by the enumeration entry points.
struct EnumerationOptions {
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Enumeration throws ResourceLimitError once this instant has passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// n! / prod(multiplicity!) for the coordinate multiset.
BigInt orbit_size(const LatticeVector& representative);

/// All orbits of degree `degree` whose non-increasing representative has
/// entries in [0, degree] and q = 2, each tagged Real or AlmostReal by
/// `classify`. Sorted lexicographically descending by representative.
std::vector<OrbitClass> enumerate_orbits(const SystemParams& params, Coord degree,
                                         const EnumerationOptions& options = {});

/// Number of positive real roots of the given degree; degree 0 gives n(n-1)/2.
BigInt count_real_roots(const SystemParams& params, Coord degree, const EnumerationOptions& options = {});
BigInt count_almost_real_roots(const SystemParams& params, Coord degree,
                               const EnumerationOptions& options = {});

/// An orbit valid in every J_{k,n} with k, n - k large enough:
/// (degree)^(k - offset) followed by `core`, then zeros.
struct GenericOrbit {
  std::vector<Coord> core;
  /// c in "k - c leading entries equal to the degree".
  int offset;
  Coord degree;
  OrbitKind kind;

  /// Core lives in J_{offset, core.size()}.
  int min_n_minus_k() const { return static_cast<int>(core.size()) - offset; }
  bool fits(const SystemParams& params) const;
  /// Throws ContractError when the orbit does not fit.
  LatticeVector specialize(const SystemParams& params) const;
  /// Run-length form, e.g. "3^(k-3) 2 1^7".
  std::string pattern() const;
};

/// Orbits of the given degree for all sufficiently large (k, n), found by
/// enumerating J_{2d-1, 4d-2}. Ordered as in `enumerate_orbits`.
std::vector<GenericOrbit> enumerate_generic(Coord degree, const EnumerationOptions& options = {});

/// Calls `visit` for every non-increasing sequence of length n with entries
/// in [0, max_entry], the given sum and the given sum of squares, in
/// lexicographically descending order. Single-threaded building block.
void for_each_candidate(int n, Coord max_entry, Coord sum, Coord square_sum,
                        const std::function<void(const std::vector<Coord>&)>& visit,
                        const std::optional<std::chrono::steady_clock::time_point>& deadline = std::nullopt);

}  // namespace jroots
