#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jroots/lattice.hpp"

namespace jroots {

/// A Coxeter generator of W(J_{k,n}): s_beta, or the transposition s_i
/// swapping coordinates i and i+1 (1-based).
class Reflection {
 public:
  static Reflection beta() { return Reflection(0); }
  static Reflection simple(int i);

  bool is_beta() const { return index_ == 0; }
  /// 1-based index for s_i; 0 for s_beta.
  int index() const { return index_; }

  bool operator==(const Reflection&) const = default;

 private:
  explicit Reflection(int index) : index_(index) {}
  int index_;
};

/// Letters applied left to right.
struct WeylWord {
  std::vector<Reflection> letters;
};

/// Parses "b,3,b,1"; throws ContractError on malformed tokens.
WeylWord parse_word(std::string_view text);
std::string to_string(const WeylWord& w);

LatticeVector apply_s_i(int i, const LatticeVector& v);
/// Adds r = x_{k+1} + ... + x_n - 2 deg(x) to the first k coordinates.
LatticeVector apply_s_beta(const LatticeVector& v);
/// The shift r used by s_beta.
Coord s_beta_shift(const LatticeVector& v);
LatticeVector apply(const Reflection& s, const LatticeVector& v);
LatticeVector apply_word(const WeylWord& w, const LatticeVector& v);

/// Non-increasing rearrangement of the coordinates.
LatticeVector dec(const LatticeVector& v);

}  // namespace jroots
