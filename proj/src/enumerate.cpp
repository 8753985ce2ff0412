#include "jroots/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "jroots/errors.hpp"
#include "jroots/families.hpp"

namespace jroots {
namespace {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

/// Backtracking over non-increasing sequences with exact sum and square
/// sum targets. The bounds in `feasible` are necessary conditions for the
/// remaining slots, so pruning never drops a solution.
class CandidateSearch {
 public:
  CandidateSearch(int n, Coord max_entry, Coord sum, Coord square_sum, Deadline deadline)
      : n_(n), max_entry_(max_entry), sum_(sum), square_sum_(square_sum), deadline_(deadline) {}

  bool feasible(int pos, Coord cap, Coord sum_left, Coord squares_left) const {
    const Coord slots = n_ - pos;
    if (sum_left < 0 || squares_left < 0) return false;
    if (slots == 0) return sum_left == 0 && squares_left == 0;
    if (sum_left > slots * cap) return false;
    const Coord even = sum_left / slots;
    const Coord extra = sum_left % slots;
    const Coord min_squares = (slots - extra) * even * even + extra * (even + 1) * (even + 1);
    if (squares_left < min_squares) return false;
    if (cap == 0) return squares_left == 0;
    const Coord full = sum_left / cap;
    const Coord rest = sum_left % cap;
    const Coord max_squares = full * cap * cap + rest * rest;
    return squares_left <= max_squares;
  }

  /// Valid prefixes of the given length, descending.
  std::vector<std::vector<Coord>> prefixes(int length) {
    std::vector<std::vector<Coord>> out;
    std::vector<Coord> current;
    collect_prefixes(length, current, max_entry_, sum_, square_sum_, out);
    return out;
  }

  template <typename Visit>
  void run(std::vector<Coord> prefix, Visit&& visit) {
    Coord sum_left = sum_;
    Coord squares_left = square_sum_;
    Coord cap = max_entry_;
    for (Coord v : prefix) {
      sum_left -= v;
      squares_left -= v * v;
      cap = v;
    }
    const int pos = static_cast<int>(prefix.size());
    if (!feasible(pos, cap, sum_left, squares_left)) return;
    prefix.resize(n_);
    descend(pos, cap, sum_left, squares_left, prefix, visit);
  }

 private:
  void collect_prefixes(int length, std::vector<Coord>& current, Coord cap, Coord sum_left, Coord squares_left,
                        std::vector<std::vector<Coord>>& out) {
    const int pos = static_cast<int>(current.size());
    if (pos == length || pos == n_) {
      out.push_back(current);
      return;
    }
    for (Coord v = std::min(cap, sum_left); v >= 0; --v) {
      if (!feasible(pos + 1, v, sum_left - v, squares_left - v * v)) continue;
      current.push_back(v);
      collect_prefixes(length, current, v, sum_left - v, squares_left - v * v, out);
      current.pop_back();
    }
  }

  template <typename Visit>
  void descend(int pos, Coord cap, Coord sum_left, Coord squares_left, std::vector<Coord>& x, Visit& visit) {
    if (deadline_ && (++ticks_ & 0xFFF) == 0 && Clock::now() > *deadline_)
      throw ResourceLimitError("enumeration time limit exceeded");
    if (pos == n_) {
      visit(static_cast<const std::vector<Coord>&>(x));
      return;
    }
    const Coord slots_after = n_ - pos - 1;
    for (Coord v = std::min(cap, sum_left); v >= 0; --v) {
      if (sum_left - v > slots_after * v) break;
      if (!feasible(pos + 1, v, sum_left - v, squares_left - v * v)) continue;
      x[pos] = v;
      descend(pos + 1, v, sum_left - v, squares_left - v * v, x, visit);
    }
  }

  int n_;
  Coord max_entry_;
  Coord sum_;
  Coord square_sum_;
  Deadline deadline_;
  std::uint64_t ticks_ = 0;
};

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

OrbitClass make_orbit(const SystemParams& params, const std::vector<Coord>& x, Coord d) {
  LatticeVector rep(params, x);
  const Classification c = classify(rep);
  OrbitKind kind;
  if (c.kind == RootKind::RealPositive)
    kind = OrbitKind::Real;
  else if (c.kind == RootKind::AlmostRealPositive)
    kind = OrbitKind::AlmostReal;
  else
    throw std::logic_error("candidate " + to_string(rep) + " classified as " + to_string(c.kind));
  OrbitClass orbit{rep, d, kind, orbit_size(rep), {}};
  for (Coord v : x) ++orbit.multiset_signature[v];
  return orbit;
}

}  // namespace

std::string to_string(OrbitKind kind) { return kind == OrbitKind::Real ? "real" : "almost"; }

void for_each_candidate(int n, Coord max_entry, Coord sum, Coord square_sum,
                        const std::function<void(const std::vector<Coord>&)>& visit, const Deadline& deadline) {
  CandidateSearch search(n, max_entry, sum, square_sum, deadline);
  search.run({}, visit);
}

BigInt orbit_size(const LatticeVector& representative) {
  std::map<Coord, int> counts;
  for (Coord v : representative.coords()) ++counts[v];
  BigInt out = factorial(static_cast<int>(representative.size()));
  for (const auto& [value, mult] : counts) out /= factorial(mult);
  return out;
}

std::vector<OrbitClass> enumerate_orbits(const SystemParams& params, Coord degree,
                                         const EnumerationOptions& options) {
  if (degree < 1) throw ContractError("orbit enumeration requires degree >= 1");
  const int k = params.k();
  const Coord sum = checked_mul(k, degree);
  const Coord squares = checked_add(2, checked_mul(k - 2, checked_mul(degree, degree)));
  if (squares < 0) return {};

  CandidateSearch planner(params.n(), degree, sum, squares, options.deadline);
  const std::vector<std::vector<Coord>> prefixes = planner.prefixes(2);

  std::vector<std::vector<OrbitClass>> buckets(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&] {
    try {
      CandidateSearch search(params.n(), degree, sum, squares, options.deadline);
      for (std::size_t i = next++; i < prefixes.size(); i = next++) {
        search.run(prefixes[i], [&](const std::vector<Coord>& x) {
          buckets[i].push_back(make_orbit(params, x, degree));
        });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = prefixes.size();
    }
  };

  const unsigned threads = std::min<std::size_t>(resolve_threads(options.threads), std::max<std::size_t>(1, prefixes.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<OrbitClass> out;
  for (auto& bucket : buckets)
    for (auto& orbit : bucket) out.push_back(std::move(orbit));
  std::sort(out.begin(), out.end(), [](const OrbitClass& a, const OrbitClass& b) {
    return a.representative.values() > b.representative.values();
  });
  return out;
}

namespace {

BigInt count_kind(const SystemParams& params, Coord degree, OrbitKind kind, const EnumerationOptions& options) {
  BigInt total = 0;
  for (const OrbitClass& orbit : enumerate_orbits(params, degree, options))
    if (orbit.kind == kind) total += orbit.orbit_size;
  return total;
}

}  // namespace

BigInt count_real_roots(const SystemParams& params, Coord degree, const EnumerationOptions& options) {
  if (degree < 0) throw ContractError("degree must be non-negative");
  if (degree == 0) return BigInt(params.n()) * (params.n() - 1) / 2;
  return count_kind(params, degree, OrbitKind::Real, options);
}

BigInt count_almost_real_roots(const SystemParams& params, Coord degree, const EnumerationOptions& options) {
  if (degree < 1) throw ContractError("degree must be >= 1");
  return count_kind(params, degree, OrbitKind::AlmostReal, options);
}

bool GenericOrbit::fits(const SystemParams& params) const {
  return params.k() >= offset && params.n() - params.k() >= min_n_minus_k();
}

LatticeVector GenericOrbit::specialize(const SystemParams& params) const {
  if (!fits(params))
    throw ContractError("generic orbit " + pattern() + " does not fit " + to_string(params));
  std::vector<Coord> x(params.n(), 0);
  const int lead = params.k() - offset;
  for (int i = 0; i < lead; ++i) x[i] = degree;
  std::copy(core.begin(), core.end(), x.begin() + lead);
  return LatticeVector(params, std::move(x));
}

std::string GenericOrbit::pattern() const {
  std::size_t leading = 0;
  while (leading < core.size() && core[leading] == degree) ++leading;
  const int c = offset - static_cast<int>(leading);
  std::ostringstream os;
  if (c > 0)
    os << degree << "^(k-" << c << ')';
  else
    os << degree << "^k";
  for (std::size_t i = leading; i < core.size();) {
    std::size_t j = i;
    while (j < core.size() && core[j] == core[i]) ++j;
    os << ' ' << core[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::vector<GenericOrbit> enumerate_generic(Coord degree, const EnumerationOptions& options) {
  if (degree < 1) throw ContractError("generic enumeration requires degree >= 1");
  const SystemParams ambient(static_cast<int>(2 * degree - 1), static_cast<int>(4 * degree - 2));
  std::vector<GenericOrbit> out;
  for (const OrbitClass& orbit : enumerate_orbits(ambient, degree, options)) {
    MinimalSupport support = minimal_support(orbit.representative);
    out.push_back({std::move(support.core), support.k, degree, orbit.kind});
  }
  return out;
}

}  // namespace jroots
