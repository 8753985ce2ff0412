#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jroots/checked.hpp"
#include "jroots/rational.hpp"

namespace jroots {

/// Parameters (k, n) of the root system J_{k,n} = T_{2,k,n-k-2}.
///
/// The branch node beta is attached to alpha_k; J_{1,n} = A_n,
/// J_{2,n} = D_n and J_{3,n} = E_n.
class SystemParams {
 public:
  /// Throws ParamError unless 1 <= k < n.
  SystemParams(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }

  bool operator==(const SystemParams&) const = default;

 private:
  int k_;
  int n_;
};

std::string to_string(const SystemParams& p);

/// An element of the root lattice in the ambient basis e_1, ..., e_n.
///
/// The lattice is { x in Z^n : k divides x_1 + ... + x_n }; construction
/// rejects anything else with a LatticeError.
class LatticeVector {
 public:
  LatticeVector(SystemParams params, std::vector<Coord> x);

  static LatticeVector zero(SystemParams params);
  /// beta = e_1 + ... + e_k.
  static LatticeVector beta(SystemParams params);
  /// alpha_i = e_{i+1} - e_i, 1 <= i <= n-1.
  static LatticeVector alpha(SystemParams params, int i);

  const SystemParams& params() const { return params_; }
  std::span<const Coord> coords() const { return x_; }
  const std::vector<Coord>& values() const { return x_; }
  std::size_t size() const { return x_.size(); }
  /// 0-based access.
  Coord operator[](std::size_t i) const { return x_[i]; }

  LatticeVector operator-() const;
  LatticeVector operator+(const LatticeVector& rhs) const;
  LatticeVector operator-(const LatticeVector& rhs) const;
  LatticeVector scaled(Coord factor) const;

  bool operator==(const LatticeVector&) const = default;

 private:
  SystemParams params_;
  std::vector<Coord> x_;
};

std::string to_string(const LatticeVector& v);

/// True iff the coordinates describe a root lattice element of `params`.
bool in_lattice(const SystemParams& params, std::span<const Coord> x);

/// Coefficients in the simple-root basis beta, alpha_1, ..., alpha_{n-1}.
struct RootCoefficients {
  SystemParams params;
  Coord m_beta;
  std::vector<Coord> m;  // m[i-1] is the coefficient of alpha_i

  bool operator==(const RootCoefficients&) const = default;
};

/// Gram matrix of the inner product in the basis (beta, alpha_1, ..., alpha_{n-1}).
struct GramMatrix {
  std::size_t dim = 0;
  std::vector<Coord> entries;  // row-major

  Coord operator()(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
  RationalMatrix to_rational() const;
};

/// (x_1 + ... + x_n) / k, the coefficient of beta.
Coord degree(const LatticeVector& v);
/// Throws LatticeError if the sum is not divisible by k.
Coord degree(const SystemParams& params, std::span<const Coord> x);

/// q(x) = sum x_i^2 + (2 - k) deg(x)^2.
Coord q(const LatticeVector& v);
/// The same form evaluated as sum x_i^2 + (2-k)/k^2 (sum x_i)^2 over the
/// rationals; used to cross-check `q`.
Rational q_rational(const SystemParams& params, std::span<const Coord> x);

/// Polarization of q.
Coord inner(const LatticeVector& u, const LatticeVector& v);

/// Bilinear extension of `inner` to rational vectors in the e-basis.
Rational inner(const SystemParams& params, std::span<const Rational> u, std::span<const Rational> v);

/// Applies C^{-1} = V D U.
RootCoefficients to_root_basis(const LatticeVector& v);
/// Applies C.
LatticeVector from_root_basis(const RootCoefficients& c);

/// C, mapping simple-root coordinates to e-coordinates.
RationalMatrix basis_change(const SystemParams& params);
/// C^{-1} assembled as the product V * D * U.
RationalMatrix basis_change_inverse(const SystemParams& params);
/// I - (k-2)/k^2 J, the Gram matrix in the e-basis.
RationalMatrix gram_e_basis(const SystemParams& params);

GramMatrix cartan_matrix(const SystemParams& params);

}  // namespace jroots
