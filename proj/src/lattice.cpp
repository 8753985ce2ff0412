#include "jroots/lattice.hpp"

#include <sstream>
#include <utility>

#include "jroots/errors.hpp"

namespace jroots {
namespace {

Coord checked_sum(std::span<const Coord> x) {
  Coord s = 0;
  for (Coord v : x) s = checked_add(s, v);
  return s;
}

Coord checked_square_sum(std::span<const Coord> x) {
  Coord s = 0;
  for (Coord v : x) s = checked_add(s, checked_mul(v, v));
  return s;
}

void require_same_system(const LatticeVector& u, const LatticeVector& v) {
  if (u.params() != v.params())
    throw ParamError("vectors belong to different systems: " + to_string(u.params()) + " vs " +
                     to_string(v.params()));
}

}  // namespace

SystemParams::SystemParams(int k, int n) : k_(k), n_(n) {
  if (k < 1 || k >= n)
    throw ParamError("system parameters must satisfy 1 <= k < n, got k=" + std::to_string(k) +
                     " n=" + std::to_string(n));
}

std::string to_string(const SystemParams& p) {
  return "J(" + std::to_string(p.k()) + "," + std::to_string(p.n()) + ")";
}

bool in_lattice(const SystemParams& params, std::span<const Coord> x) {
  if (x.size() != static_cast<std::size_t>(params.n())) return false;
  return checked_sum(x) % params.k() == 0;
}

LatticeVector::LatticeVector(SystemParams params, std::vector<Coord> x)
    : params_(params), x_(std::move(x)) {
  if (x_.size() != static_cast<std::size_t>(params_.n()))
    throw ParamError("expected " + std::to_string(params_.n()) + " coordinates, got " +
                     std::to_string(x_.size()));
  const Coord s = checked_sum(x_);
  if (s % params_.k() != 0)
    throw LatticeError("coordinate sum " + std::to_string(s) + " is not divisible by k=" +
                       std::to_string(params_.k()) + "; not in the root lattice");
}

LatticeVector LatticeVector::zero(SystemParams params) {
  return LatticeVector(params, std::vector<Coord>(params.n(), 0));
}

LatticeVector LatticeVector::beta(SystemParams params) {
  std::vector<Coord> x(params.n(), 0);
  for (int i = 0; i < params.k(); ++i) x[i] = 1;
  return LatticeVector(params, std::move(x));
}

LatticeVector LatticeVector::alpha(SystemParams params, int i) {
  if (i < 1 || i >= params.n())
    throw ContractError("simple root index " + std::to_string(i) + " out of range for " +
                        to_string(params));
  std::vector<Coord> x(params.n(), 0);
  x[i] = 1;
  x[i - 1] = -1;
  return LatticeVector(params, std::move(x));
}

LatticeVector LatticeVector::operator-() const {
  std::vector<Coord> out(x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) out[i] = checked_neg(x_[i]);
  return LatticeVector(params_, std::move(out));
}

LatticeVector LatticeVector::operator+(const LatticeVector& rhs) const {
  require_same_system(*this, rhs);
  std::vector<Coord> out(x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) out[i] = checked_add(x_[i], rhs.x_[i]);
  return LatticeVector(params_, std::move(out));
}

LatticeVector LatticeVector::operator-(const LatticeVector& rhs) const {
  require_same_system(*this, rhs);
  std::vector<Coord> out(x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) out[i] = checked_sub(x_[i], rhs.x_[i]);
  return LatticeVector(params_, std::move(out));
}

LatticeVector LatticeVector::scaled(Coord factor) const {
  std::vector<Coord> out(x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) out[i] = checked_mul(x_[i], factor);
  return LatticeVector(params_, std::move(out));
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Coord degree(const SystemParams& params, std::span<const Coord> x) {
  const Coord s = checked_sum(x);
  if (s % params.k() != 0)
    throw LatticeError("coordinate sum " + std::to_string(s) + " is not divisible by k=" +
                       std::to_string(params.k()) + "; not in the root lattice");
  return s / params.k();
}

Coord degree(const LatticeVector& v) { return checked_sum(v.coords()) / v.params().k(); }

Coord q(const LatticeVector& v) {
  const Coord d = degree(v);
  const Coord correction = checked_mul(2 - v.params().k(), checked_mul(d, d));
  return checked_add(checked_square_sum(v.coords()), correction);
}

Rational q_rational(const SystemParams& params, std::span<const Coord> x) {
  Rational squares = 0;
  Rational sum = 0;
  for (Coord v : x) {
    squares += Rational(v) * v;
    sum += v;
  }
  const int k = params.k();
  return squares + Rational(2 - k, k * k) * sum * sum;
}

Coord inner(const LatticeVector& u, const LatticeVector& v) {
  require_same_system(u, v);
  Coord dot = 0;
  for (std::size_t i = 0; i < u.size(); ++i) dot = checked_add(dot, checked_mul(u[i], v[i]));
  const Coord correction = checked_mul(2 - u.params().k(), checked_mul(degree(u), degree(v)));
  return checked_add(dot, correction);
}

Rational inner(const SystemParams& params, std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != static_cast<std::size_t>(params.n()) || v.size() != u.size())
    throw ParamError("rational vectors must have n entries");
  Rational dot = 0, su = 0, sv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    su += u[i];
    sv += v[i];
  }
  const int k = params.k();
  return dot - Rational(k - 2, k * k) * su * sv;
}

RootCoefficients to_root_basis(const LatticeVector& v) {
  const int k = v.params().k();
  const int n = v.params().n();
  // U: suffix sums, D: divide the first by k, V: add (i-k)*d to entries 1..k-1.
  std::vector<Coord> suffix(n);
  Coord acc = 0;
  for (int i = n - 1; i >= 0; --i) {
    acc = checked_add(acc, v[i]);
    suffix[i] = acc;
  }
  const Coord d = suffix[0] / k;
  RootCoefficients out{v.params(), d, std::vector<Coord>(n - 1)};
  for (int i = 1; i < n; ++i) {
    Coord entry = suffix[i];
    if (i < k) entry = checked_add(entry, checked_mul(i - k, d));
    out.m[i - 1] = entry;
  }
  return out;
}

LatticeVector from_root_basis(const RootCoefficients& c) {
  const int k = c.params.k();
  const int n = c.params.n();
  if (c.m.size() != static_cast<std::size_t>(n - 1))
    throw ParamError("expected " + std::to_string(n - 1) + " simple-root coefficients");
  std::vector<Coord> x(n, 0);
  for (int j = 0; j < n; ++j) {
    Coord value = j < k ? c.m_beta : 0;
    if (j >= 1) value = checked_add(value, c.m[j - 1]);
    if (j + 1 <= n - 1) value = checked_sub(value, c.m[j]);
    x[j] = value;
  }
  return LatticeVector(c.params, std::move(x));
}

RationalMatrix basis_change(const SystemParams& params) {
  const int k = params.k();
  const int n = params.n();
  RationalMatrix c(n);
  for (int r = 0; r < k; ++r) c(r, 0) = 1;
  for (int i = 1; i < n; ++i) {
    c(i, i) = 1;
    c(i - 1, i) = -1;
  }
  return c;
}

RationalMatrix basis_change_inverse(const SystemParams& params) {
  const int k = params.k();
  const int n = params.n();
  RationalMatrix vm = RationalMatrix::identity(n);
  for (int i = 1; i < k; ++i) vm(i, 0) = i - k;
  RationalMatrix dm = RationalMatrix::identity(n);
  dm(0, 0) = Rational(1, k);
  RationalMatrix um(n);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) um(r, c) = 1;
  return vm * dm * um;
}

RationalMatrix gram_e_basis(const SystemParams& params) {
  const int k = params.k();
  const int n = params.n();
  RationalMatrix g(n);
  const Rational off = Rational(k - 2, k * k);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = (r == c ? Rational(1) : Rational(0)) - off;
  return g;
}

RationalMatrix GramMatrix::to_rational() const {
  RationalMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = (*this)(r, c);
  return m;
}

GramMatrix cartan_matrix(const SystemParams& params) {
  const int n = params.n();
  std::vector<LatticeVector> basis;
  basis.reserve(n);
  basis.push_back(LatticeVector::beta(params));
  for (int i = 1; i < n; ++i) basis.push_back(LatticeVector::alpha(params, i));
  GramMatrix g{static_cast<std::size_t>(n), std::vector<Coord>(n * n)};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g.entries[r * n + c] = inner(basis[r], basis[c]);
  return g;
}

}  // namespace jroots
