#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace jroots::reference {

/// Marks an unbounded k or n in orbit-count rows.
inline constexpr int kUnbounded = 0;

/// Published W(A_{n-1})-orbit counts per degree, degrees 1..11.
struct OrbitCountRow {
  int k;
  int n;
  std::vector<std::uint64_t> real;
  std::vector<std::uint64_t> almost;
};

/// Published root counts per degree; `first_degree` is the degree of values[0].
struct RootCountRow {
  int k;
  int n;
  int first_degree;
  std::vector<std::uint64_t> values;
};

std::span<const OrbitCountRow> orbit_counts();
/// Real roots, degrees 1..7.
std::span<const RootCountRow> real_root_counts();
/// Almost real roots, degrees 4..7.
std::span<const RootCountRow> almost_real_root_counts();

}  // namespace jroots::reference
