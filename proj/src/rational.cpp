#include "jroots/rational.hpp"

#include <utility>

#include "jroots/errors.hpp"

namespace jroots {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& v) { return v.str(); }

RationalMatrix RationalMatrix::identity(std::size_t dim) {
  RationalMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw ContractError("matrix dimension mismatch");
  RationalMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t t = 0; t < dim_; ++t) {
      const Rational& a = (*this)(r, t);
      if (a == 0) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(t, c);
    }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
  return out;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.dim();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& input) {
  const std::size_t n = input.dim();
  RationalMatrix m = input;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw ContractError("matrix is singular");
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(pivot, c), m(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    const Rational scale = m(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) /= scale;
      inv(col, c) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

bool is_positive_definite(const RationalMatrix& m) {
  for (std::size_t size = 1; size <= m.dim(); ++size) {
    RationalMatrix minor(size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) minor(r, c) = m(r, c);
    if (determinant(std::move(minor)) <= 0) return false;
  }
  return true;
}

}  // namespace jroots
