#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jroots/lattice.hpp"

namespace jroots {

/// A stack of d k-subsets of {1, ..., n}, top row first. Rows are kept
/// sorted increasingly; the order predicates are defined on that form.
class Profile {
 public:
  /// Throws ContractError unless there is at least one row and every row
  /// holds k distinct labels from {1, ..., n}.
  Profile(SystemParams params, std::vector<std::vector<int>> rows);

  const SystemParams& params() const { return params_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  bool operator==(const Profile&) const = default;

 private:
  SystemParams params_;
  std::vector<std::vector<int>> rows_;
};

/// x_i = number of occurrences of i in the profile.
LatticeVector phi(const Profile& p);

/// The profile P_x: with a = (1^{x_1}, 2^{x_2}, ..., n^{x_n}) of length kd,
/// row i takes a_{d-i+1+jd} for j = 0..k-1. Requires d >= 1 and all
/// entries in [0, d].
Profile canonical_profile(const LatticeVector& v);

bool is_weakly_column_decreasing(const Profile& p);
/// Weakly column decreasing and P_{d,j} >= P_{1,j-1} for j = 2..k.
bool is_canonical(const Profile& p);

/// The d rotations of the row sequence, starting with p itself.
std::vector<Profile> cyclic_permutations(const Profile& p);

/// "258|147|136" when n <= 9, "2,5,8|1,4,7|1,3,6" otherwise.
std::string render(const Profile& p);
/// Accepts either rendering; single-digit rows need n <= 9.
Profile parse_profile(const SystemParams& params, std::string_view text);

}  // namespace jroots
