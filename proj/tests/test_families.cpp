#include <gtest/gtest.h>

#include "jroots/classify.hpp"
#include "jroots/errors.hpp"
#include "jroots/families.hpp"
#include "oracle.hpp"

using namespace jroots;

namespace {

LatticeVector vec(int k, int n, std::vector<Coord> x) { return LatticeVector(SystemParams(k, n), std::move(x)); }

std::vector<Rational> rationals(std::initializer_list<int> values, int denominator = 1) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v, denominator);
  return out;
}

}  // namespace

TEST(Dualize, Examples) {
  EXPECT_EQ(dualize(LatticeVector::beta(SystemParams(3, 9))), vec(6, 9, {1, 1, 1, 1, 1, 1, 0, 0, 0}));
  EXPECT_EQ(dualize(vec(3, 9, {1, 1, 1, 1, 1, 1, 1, 1, 1})), vec(6, 9, {2, 2, 2, 2, 2, 2, 2, 2, 2}));
  const auto x = vec(4, 11, {3, 2, 2, 2, 1, 1, 1, 1, 1, 0, -2});
  EXPECT_EQ(dualize(dualize(x)), x);
}

TEST(Extend, Examples) {
  EXPECT_EQ(extend(vec(3, 8, {2, 1, 1, 1, 1, 1, 1, 1}), true), vec(4, 9, {3, 2, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(extend(LatticeVector::beta(SystemParams(3, 6)), false), LatticeVector::beta(SystemParams(3, 7)));
}

TEST(MinimalSupport, Examples) {
  const auto g = minimal_support(vec(10, 20, {3, 3, 3, 3, 3, 3, 3, 2, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(g.k, 3);
  EXPECT_EQ(g.n, 8);
  EXPECT_EQ(g.core, (std::vector<Coord>{2, 1, 1, 1, 1, 1, 1, 1}));

  const auto b = minimal_support(LatticeVector::beta(SystemParams(4, 9)));
  EXPECT_EQ(b.k, 1);
  EXPECT_EQ(b.n, 1);
  EXPECT_EQ(b.core, std::vector<Coord>{1});

  const auto flat = minimal_support(vec(3, 7, {2, 2, 2, 0, 0, 0, 0}));
  EXPECT_EQ(flat.core, std::vector<Coord>{2});
  EXPECT_THROW(minimal_support(vec(3, 7, {0, 2, 2, 2, 0, 0, 0})), ContractError);
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma(2, SystemParams(3, 6)), vec(3, 6, {1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(gamma(3, SystemParams(3, 8)), vec(3, 8, {2, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(gamma(3, SystemParams(3, 7)), ContractError);
  const SystemParams big(8, 20);
  for (Coord d = 2; d <= 5; ++d)
    for (Coord e = 2; e <= 5; ++e) EXPECT_EQ(inner(gamma(d, big), gamma(e, big)), 2 - std::abs(d - e));
}

TEST(DeltaFamily, Examples) {
  EXPECT_EQ(delta_family(2, SystemParams(3, 6)), gamma(2, SystemParams(3, 6)));
  const SystemParams p48(4, 8);
  EXPECT_EQ(delta_family(3, p48), LatticeVector::beta(p48) + affine_delta(p48));
  const SystemParams big(9, 20);
  for (Coord d = 2; d <= 5; ++d) EXPECT_EQ(inner(gamma(d, big), delta_family(d, big)), d * (3 - d));
  EXPECT_EQ(inner(gamma(4, big), delta_family(4, big)), -4);
}

TEST(AffineDelta, Examples) {
  const auto d39 = affine_delta(SystemParams(3, 9));
  EXPECT_EQ(d39, vec(3, 9, {1, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(q(d39), 0);
  const auto d48 = affine_delta(SystemParams(4, 8));
  const auto rc = to_root_basis(d48);
  EXPECT_EQ(rc.m_beta, 2);
  EXPECT_EQ(rc.m, (std::vector<Coord>{1, 2, 3, 4, 3, 2, 1}));
  EXPECT_EQ(affine_delta(SystemParams(6, 9)), vec(6, 9, {2, 2, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_THROW(affine_delta(SystemParams(3, 8)), ParamError);
  // The null root spans the kernel of the Cartan matrix.
  for (auto [k, n] : {std::pair{3, 9}, {4, 8}, {6, 9}}) {
    const auto r = to_root_basis(affine_delta(SystemParams(k, n)));
    oracle::Vec m{r.m_beta};
    m.insert(m.end(), r.m.begin(), r.m.end());
    const auto a = oracle::cartan(k, n);
    for (int i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < n; ++j) s += a[i][j] * m[j];
      EXPECT_EQ(s, 0);
    }
  }
}

TEST(AffineFamily, Examples) {
  EXPECT_EQ(affine_family(AffineSeries::A1, 1, 0, SystemParams(3, 9)), LatticeVector::beta(SystemParams(3, 9)));
  const SystemParams p(4, 10);
  EXPECT_EQ(affine_family(AffineSeries::A1, -1, 1, p), vec(4, 10, {2, 0, 0, 0, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(affine_family(AffineSeries::A3, -1, 1, p), vec(4, 10, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(affine_family(AffineSeries::A0, 1, 1, p), ContractError);
  EXPECT_THROW(affine_family(AffineSeries::A1, 1, 1, SystemParams(3, 8)), ParamError);
  EXPECT_THROW(affine_family(AffineSeries::A1, 2, 1, p), ContractError);
  EXPECT_EQ(parse_affine_series("B2"), AffineSeries::B2);
  EXPECT_FALSE(parse_affine_series("D1"));
}

TEST(AffineFamily, AllSeriesGiveRealRoots) {
  const AffineSeries all[] = {AffineSeries::A1, AffineSeries::A2, AffineSeries::A3, AffineSeries::B1,
                              AffineSeries::B2, AffineSeries::B3, AffineSeries::C1, AffineSeries::C2};
  const SystemParams p(7, 14);
  for (AffineSeries s : all) {
    for (int sign : {1, -1}) {
      for (Coord m = 1; m <= 4; ++m) {
        const auto x = affine_family(s, sign, m, p);
        // -base + delta can land in degree 0 (e.g. A3- at m = 1).
        EXPECT_TRUE(is_real(classify(x).kind)) << to_string(s) << sign << " m=" << m;
        EXPECT_GE(degree(x), 0);
      }
    }
  }
  for (AffineSeries s : {AffineSeries::A0, AffineSeries::B0, AffineSeries::C0}) {
    const auto [lo, hi] = affine_window(s, p);
    for (int i = lo; i <= hi; ++i)
      for (int j = lo; j < i; ++j)
        for (int sign : {1, -1}) EXPECT_TRUE(is_real(classify(affine_family(s, sign, 2, p, std::pair{i, j})).kind));
  }
}

TEST(FundamentalWeights, PublishedRows) {
  EXPECT_EQ(fundamental_weights(SystemParams(3, 6))[0].coords, rationals({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(fundamental_weights(SystemParams(3, 6))[1].coords, rationals({-1, 2, 2, 2, 2, 2}, 3));
  EXPECT_EQ(format_scaled(fundamental_weights(SystemParams(3, 6))[1].coords), "1/3(-1,2,2,2,2,2)");
  EXPECT_EQ(fundamental_weights(SystemParams(3, 7))[0].coords, rationals({3, 3, 3, 3, 3, 3, 3}, 2));
  EXPECT_EQ(fundamental_weights(SystemParams(3, 8))[7].coords, rationals({1, 1, 1, 1, 1, 1, 1, 2}));
  for (int n = 4; n <= 9; ++n) {
    std::vector<Rational> half(n, Rational(1, 2));
    EXPECT_EQ(fundamental_weights(SystemParams(2, n))[0].coords, half);
  }
  EXPECT_THROW(fundamental_weights(SystemParams(3, 9)), NotFiniteTypeError);
}

TEST(FundamentalWeights, RootCoefficientsAreInverseCartanColumns) {
  for (auto [k, n] : {std::pair{3, 6}, {3, 7}, {3, 8}, {2, 6}, {1, 5}}) {
    const auto w = fundamental_weights(SystemParams(k, n));
    const auto a = oracle::cartan(k, n);
    for (int c = 0; c < n; ++c) EXPECT_EQ(w[c].root_coeffs, oracle::inverse_column(a, c));
  }
}

TEST(PositiveRoots, TotalsAndSums) {
  EXPECT_EQ(positive_roots(SystemParams(3, 6)).size(), 36u);
  EXPECT_EQ(positive_roots(SystemParams(3, 7)).size(), 63u);
  EXPECT_EQ(positive_roots(SystemParams(3, 8)).size(), 120u);
  EXPECT_EQ(positive_roots(SystemParams(2, 6)).size(), 30u);
  // The true sum is twice the Weyl vector.
  EXPECT_EQ(sum_of_positive_roots(SystemParams(3, 6)), rationals({6, 8, 10, 12, 14, 16}));
  EXPECT_EQ(sum_of_positive_roots(SystemParams(3, 7)), rationals({15, 17, 19, 21, 23, 25, 27}));
  EXPECT_EQ(sum_of_fundamental_weights(SystemParams(3, 6)), rationals({3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(sum_of_fundamental_weights(SystemParams(3, 8)), rationals({22, 23, 24, 25, 26, 27, 28, 29}));
  EXPECT_EQ(sum_of_fundamental_weights(SystemParams(2, 4)), rationals({0, 1, 2, 3}));
}

TEST(Manin, Examples) {
  const SystemParams e8(3, 8);
  EXPECT_EQ(to_manin(vec(3, 8, {1, 1, 1, 0, 0, 0, 0, 0})), (ManinVector{1, {1, 1, 1, 0, 0, 0, 0, 0}}));
  EXPECT_EQ(to_manin(gamma(3, e8)), (ManinVector{3, {2, 1, 1, 1, 1, 1, 1, 1}}));
  EXPECT_EQ(to_manin(LatticeVector::alpha(e8, 1)), (ManinVector{0, {-1, 1, 0, 0, 0, 0, 0, 0}}));
  EXPECT_THROW(to_manin(LatticeVector::beta(SystemParams(3, 7))), ParamError);
}
