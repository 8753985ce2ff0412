#include "jroots/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jroots/enumerate.hpp"
#include "jroots/errors.hpp"

namespace jroots {
namespace {

std::vector<Coord> pattern(std::initializer_list<std::pair<Coord, int>> runs, int n) {
  std::vector<Coord> x;
  for (const auto& [value, count] : runs) x.insert(x.end(), count, value);
  if (static_cast<int>(x.size()) > n) throw ContractError("pattern does not fit in n = " + std::to_string(n));
  x.resize(n, 0);
  return x;
}

void require_finite(const SystemParams& params) {
  if (!is_positive_definite(cartan_matrix(params).to_rational()))
    throw NotFiniteTypeError(to_string(params) + " is not of finite type");
}

char series_letter(AffineSeries s) {
  switch (s) {
    case AffineSeries::A0: case AffineSeries::A1: case AffineSeries::A2: case AffineSeries::A3: return 'A';
    case AffineSeries::B0: case AffineSeries::B1: case AffineSeries::B2: case AffineSeries::B3: return 'B';
    default: return 'C';
  }
}

int series_number(AffineSeries s) {
  switch (s) {
    case AffineSeries::A0: case AffineSeries::B0: case AffineSeries::C0: return 0;
    case AffineSeries::A1: case AffineSeries::B1: case AffineSeries::C1: return 1;
    case AffineSeries::A2: case AffineSeries::B2: case AffineSeries::C2: return 2;
    default: return 3;
  }
}

/// (k, n) of the natural affine subsystem behind a series.
SystemParams affine_subsystem(char letter) {
  switch (letter) {
    case 'A': return SystemParams(3, 9);
    case 'B': return SystemParams(6, 9);
    default: return SystemParams(4, 8);
  }
}

LatticeVector embed(LatticeVector v, const SystemParams& target) {
  while (v.params().k() < target.k()) v = extend(v, true);
  while (v.params().n() < target.n()) v = extend(v, false);
  if (v.params() != target) throw ContractError("cannot embed into " + to_string(target));
  return v;
}

}  // namespace

LatticeVector dualize(const LatticeVector& v) {
  const SystemParams& p = v.params();
  const Coord d = degree(v);
  std::vector<Coord> x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = checked_sub(d, v[v.size() - 1 - i]);
  return LatticeVector(SystemParams(p.n() - p.k(), p.n()), std::move(x));
}

LatticeVector extend(const LatticeVector& v, bool grow_k) {
  const SystemParams& p = v.params();
  std::vector<Coord> x;
  x.reserve(v.size() + 1);
  if (grow_k) {
    x.push_back(degree(v));
    x.insert(x.end(), v.coords().begin(), v.coords().end());
    return LatticeVector(SystemParams(p.k() + 1, p.n() + 1), std::move(x));
  }
  x.assign(v.coords().begin(), v.coords().end());
  x.push_back(0);
  return LatticeVector(SystemParams(p.k(), p.n() + 1), std::move(x));
}

MinimalSupport minimal_support(const LatticeVector& v) {
  const Coord d = degree(v);
  if (d < 1) throw ContractError("minimal support requires degree >= 1");
  if (!std::is_sorted(v.coords().begin(), v.coords().end(), std::greater<>()))
    throw ContractError("minimal support requires a non-increasing vector");
  if (v[v.size() - 1] < 0 || v[0] > d)
    throw ContractError("minimal support requires entries in [0, degree]");

  std::size_t end = v.size();
  while (end > 0 && v[end - 1] == 0) --end;
  std::size_t begin = 0;
  int k = v.params().k();
  while (k > 1 && begin < end && v[begin] == d) {
    ++begin;
    --k;
  }
  MinimalSupport out{k, static_cast<int>(end - begin), {}};
  out.core.assign(v.coords().begin() + begin, v.coords().begin() + end);
  return out;
}

LatticeVector gamma(Coord d, const SystemParams& params) {
  const int k = params.k();
  if (d < 2) throw ContractError("gamma_d requires d >= 2");
  if (k < 3) throw ContractError("gamma_d requires k >= 3");
  if (params.n() < k + 2 * d - 1) throw ContractError("gamma_d does not fit in " + to_string(params));
  return LatticeVector(params, pattern({{d, k - 3}, {d - 1, 1}, {1, static_cast<int>(2 * d + 1)}}, params.n()));
}

LatticeVector delta_family(Coord d, const SystemParams& params) {
  const int k = params.k();
  if (d < 2) throw ContractError("delta_d requires d >= 2");
  if (k < d + 1) throw ContractError("delta_d requires k >= d + 1");
  if (params.n() < k + d + 1) throw ContractError("delta_d does not fit in " + to_string(params));
  const int run = static_cast<int>(d + 1);
  return LatticeVector(params, pattern({{d, static_cast<int>(k - d - 1)}, {d - 1, run}, {1, run}}, params.n()));
}

LatticeVector affine_delta(const SystemParams& params) {
  if (params == SystemParams(3, 9) || params == SystemParams(4, 8))
    return LatticeVector(params, std::vector<Coord>(params.n(), 1));
  if (params == SystemParams(6, 9)) return LatticeVector(params, std::vector<Coord>(params.n(), 2));
  throw ParamError(to_string(params) + " is not one of the affine systems J(3,9), J(4,8), J(6,9)");
}

std::string to_string(AffineSeries s) { return std::string(1, series_letter(s)) + std::to_string(series_number(s)); }

std::optional<AffineSeries> parse_affine_series(const std::string& name) {
  static const std::pair<const char*, AffineSeries> table[] = {
      {"A0", AffineSeries::A0}, {"A1", AffineSeries::A1}, {"A2", AffineSeries::A2}, {"A3", AffineSeries::A3},
      {"B0", AffineSeries::B0}, {"B1", AffineSeries::B1}, {"B2", AffineSeries::B2}, {"B3", AffineSeries::B3},
      {"C0", AffineSeries::C0}, {"C1", AffineSeries::C1}, {"C2", AffineSeries::C2}};
  for (const auto& [text, series] : table)
    if (name == text) return series;
  return std::nullopt;
}

std::pair<int, int> affine_window(AffineSeries series, const SystemParams& params) {
  const SystemParams sub = affine_subsystem(series_letter(series));
  const int first = params.k() - sub.k() + 1;
  return {first, first + sub.n() - 1};
}

LatticeVector affine_family(AffineSeries series, int sign, Coord m, const SystemParams& params,
                            std::optional<std::pair<int, int>> positions) {
  if (sign != 1 && sign != -1) throw ContractError("sign must be +1 or -1");
  const char letter = series_letter(series);
  const int number = series_number(series);
  const SystemParams sub = affine_subsystem(letter);
  const int k = params.k();
  const int n = params.n();
  if (k < sub.k() || n - k < sub.n() - sub.k())
    throw ParamError(to_string(params) + " does not contain the natural " + to_string(sub) + " subsystem");

  std::vector<Coord> base;
  if (number == 0) {
    if (!positions) throw ContractError("series " + to_string(series) + " needs positions i > j");
    const auto [i, j] = *positions;
    const auto [lo, hi] = affine_window(series, params);
    if (!(lo <= j && j < i && i <= hi))
      throw ContractError("positions must satisfy " + std::to_string(lo) + " <= j < i <= " + std::to_string(hi));
    base.assign(n, 0);
    base[i - 1] = 1;
    base[j - 1] = -1;
  } else if (number == 1) {
    base = LatticeVector::beta(params).values();
  } else if (number == 2) {
    base = pattern({{2, k - 3}, {1, 6}}, n);
  } else if (letter == 'A') {
    base = pattern({{3, k - 3}, {2, 1}, {1, 7}}, n);
  } else {
    base = pattern({{3, k - 5}, {2, 7}, {1, 1}}, n);
  }
  const LatticeVector null_root = embed(affine_delta(sub), params);
  return LatticeVector(params, std::move(base)).scaled(sign) + null_root.scaled(m);
}

std::vector<WeightVector> fundamental_weights(const SystemParams& params) {
  const RationalMatrix cartan = cartan_matrix(params).to_rational();
  if (!is_positive_definite(cartan))
    throw NotFiniteTypeError("fundamental weights need a finite-type system; " + to_string(params) +
                             " has a Cartan matrix that is not positive definite");
  const RationalMatrix cartan_inv = inverse(cartan);
  const RationalMatrix in_e = basis_change(params) * cartan_inv;
  std::vector<WeightVector> out;
  for (int c = 0; c < params.n(); ++c) out.push_back({params, in_e.column(c), cartan_inv.column(c)});
  return out;
}

std::string format_scaled(const std::vector<Rational>& v) {
  BigInt common = 1;
  for (const Rational& r : v) {
    const BigInt den = boost::multiprecision::denominator(r);
    common = common / boost::multiprecision::gcd(common, den) * den;
  }
  std::ostringstream os;
  if (common != 1) os << "1/" << common;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational scaled = v[i] * common;
    os << (i ? "," : "") << boost::multiprecision::numerator(scaled);
  }
  os << ')';
  return os.str();
}

std::vector<LatticeVector> positive_roots(const SystemParams& params) {
  require_finite(params);
  std::vector<LatticeVector> out;
  for (int i = 1; i <= params.n(); ++i)
    for (int j = 1; j < i; ++j) {
      std::vector<Coord> x(params.n(), 0);
      x[i - 1] = 1;
      x[j - 1] = -1;
      out.emplace_back(params, std::move(x));
    }
  for (Coord d = 1;; ++d) {
    const std::vector<OrbitClass> orbits = enumerate_orbits(params, d);
    if (orbits.empty()) break;
    for (const OrbitClass& orbit : orbits) {
      if (orbit.kind != OrbitKind::Real) continue;
      std::vector<Coord> x = orbit.representative.values();
      std::sort(x.begin(), x.end());
      do {
        out.emplace_back(params, x);
      } while (std::next_permutation(x.begin(), x.end()));
    }
  }
  return out;
}

std::vector<Rational> sum_of_positive_roots(const SystemParams& params) {
  std::vector<Rational> total(params.n(), 0);
  for (const LatticeVector& root : positive_roots(params))
    for (int i = 0; i < params.n(); ++i) total[i] += root[i];
  return total;
}

std::vector<Rational> sum_of_fundamental_weights(const SystemParams& params) {
  std::vector<Rational> total(params.n(), 0);
  for (const WeightVector& w : fundamental_weights(params))
    for (int i = 0; i < params.n(); ++i) total[i] += w.coords[i];
  return total;
}

ManinVector to_manin(const LatticeVector& v) {
  if (v.params() != SystemParams(3, 8)) throw ParamError("Manin coordinates are defined for J(3,8) only");
  return {degree(v), v.values()};
}

}  // namespace jroots
