#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jroots/lattice.hpp"
#include "jroots/rational.hpp"

namespace jroots {

/// The element of J_{n-k,n} matching v under the diagram symmetry:
/// (d - x_n, ..., d - x_1).
LatticeVector dualize(const LatticeVector& v);

/// Embeds J_{k,n} into J_{k,n+1} (append 0) or, when `grow_k`, into
/// J_{k+1,n+1} (prepend the degree).
LatticeVector extend(const LatticeVector& v, bool grow_k);

/// Result of stripping a non-increasing vector down to its smallest
/// natural subsystem. The core lives in J_{k,n}; `k` never drops below 1,
/// so `n == k` is possible (e.g. beta reduces to (1) with k = n = 1).
struct MinimalSupport {
  int k;
  int n;
  std::vector<Coord> core;
};

/// Removes trailing zeros and leading entries equal to the degree.
/// Requires v = dec(v), degree >= 1 and entries in [0, degree].
MinimalSupport minimal_support(const LatticeVector& v);

/// gamma_d = d^(k-3) (d-1) 1^(2d+1), zero padded.
LatticeVector gamma(Coord d, const SystemParams& params);
/// delta_d = d^(k-d-1) (d-1)^(d+1) 1^(d+1), zero padded.
LatticeVector delta_family(Coord d, const SystemParams& params);

/// Null root of the affine systems J_{3,9}, J_{4,8}, J_{6,9}.
LatticeVector affine_delta(const SystemParams& params);

/// Families alpha + m * delta coming from a natural affine subsystem:
/// A* from J_{3,9}, B* from J_{6,9}, C* from J_{4,8}.
enum class AffineSeries { A0, A1, A2, A3, B0, B1, B2, B3, C0, C1, C2 };

std::string to_string(AffineSeries s);
std::optional<AffineSeries> parse_affine_series(const std::string& name);

/// sign * base + m * delta, with delta embedded into `params`.
/// Series *0 take 1-based positions i > j inside the affine subsystem and
/// use base e_i - e_j.
LatticeVector affine_family(AffineSeries series, int sign, Coord m, const SystemParams& params,
                            std::optional<std::pair<int, int>> positions = std::nullopt);

/// Inclusive 1-based coordinate window occupied by the affine subsystem of
/// `series` inside J_{k,n}.
std::pair<int, int> affine_window(AffineSeries series, const SystemParams& params);

struct WeightVector {
  SystemParams params;
  std::vector<Rational> coords;       // e-basis
  std::vector<Rational> root_coeffs;  // (beta, alpha_1, ..., alpha_{n-1}) basis
};

/// Columns of C * A^{-1}: fundamental weights for beta, alpha_1, ...,
/// alpha_{n-1} in that order. Throws NotFiniteTypeError unless the Cartan
/// matrix is positive definite.
std::vector<WeightVector> fundamental_weights(const SystemParams& params);

/// "1/3(-1,2,2,2,2,2)" style: common denominator pulled out.
std::string format_scaled(const std::vector<Rational>& v);

/// Every positive root of a finite-type system, in e-coordinates.
std::vector<LatticeVector> positive_roots(const SystemParams& params);

/// Sum of all positive roots (finite type only), by explicit enumeration.
std::vector<Rational> sum_of_positive_roots(const SystemParams& params);

/// Sum of the fundamental weights (the Weyl vector), in e-coordinates.
std::vector<Rational> sum_of_fundamental_weights(const SystemParams& params);

/// Coordinates (a, b_1, ..., b_8) with a = deg(x), b = x, for J_{3,8}.
struct ManinVector {
  Coord a;
  std::vector<Coord> b;

  bool operator==(const ManinVector&) const = default;
};

ManinVector to_manin(const LatticeVector& v);

}  // namespace jroots
