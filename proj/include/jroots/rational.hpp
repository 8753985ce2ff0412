#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jroots {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static RationalMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix transpose() const;
  std::vector<Rational> column(std::size_t c) const;

  bool operator==(const RationalMatrix& rhs) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(RationalMatrix m);

/// Gauss-Jordan inverse; throws ContractError when singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Sylvester's criterion on the leading principal minors.
bool is_positive_definite(const RationalMatrix& m);

}  // namespace jroots
