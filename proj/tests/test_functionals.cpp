#include <cmath>

#include <gtest/gtest.h>

#include <schlicht/caratheodory.hpp>
#include <schlicht/functionals.hpp>
#include <schlicht/zoo.hpp>

#include "oracles.hpp"

namespace schlicht {
namespace {

NormalizedSeries identity_fn(int order) { return NormalizedSeries(TruncatedSeries::identity(order)); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::ParseError;
}

// Independent determinant by permutation expansion (q <= 6).
complex permutation_det(const std::vector<std::vector<complex>>& m) {
  const int q = static_cast<int>(m.size());
  std::vector<int> perm(q);
  for (int i = 0; i < q; ++i) perm[i] = i;
  complex det{};
  do {
    int inversions = 0;
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) inversions += perm[i] > perm[j];
    complex term = inversions % 2 ? -1.0 : 1.0;
    for (int i = 0; i < q; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

TEST(FeketeSzego, KoebeAtZero) {
  auto r = fekete_szego(koebe(8), 0.0);
  EXPECT_EQ(r.value, 3.0);
  EXPECT_EQ(*r.bound, 3.0);
  EXPECT_EQ(*r.margin, 0.0);
  EXPECT_FALSE(r.violated());
}

TEST(FeketeSzego, KoebeAtOne) {
  auto r = fekete_szego(koebe(8), 1.0);
  EXPECT_EQ(r.value, 1.0);
  EXPECT_EQ(*r.bound, 1.0);
  EXPECT_EQ(*r.margin, 0.0);
}

TEST(FeketeSzego, IdentityIsZero) {
  for (double a : {0.0, 0.3, 1.0}) EXPECT_EQ(fekete_szego(identity_fn(3), a).value, 0.0);
}

TEST(FeketeSzego, KoebeNeverExceedsBound) {
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    auto r = fekete_szego(koebe(4), a);
    EXPECT_NEAR(r.value, std::abs(3.0 - 4.0 * a), 1e-15);
    EXPECT_GE(*r.margin, -1e-12);
  }
}

TEST(FeketeSzego, BoundIsDecreasingAndContinuous) {
  double prev = fekete_szego_bound(0.0);
  for (int i = 1; i < 100; ++i) {
    const double b = fekete_szego_bound(i / 100.0);
    EXPECT_LE(b, prev);
    if (i <= 90) EXPECT_LT(b, prev);
    prev = b;
  }
  EXPECT_NEAR(fekete_szego_bound(1.0 - 1e-9), 1.0, 1e-12);
  EXPECT_EQ(kind_of([] { fekete_szego_bound(1.5); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { fekete_szego(koebe(2), 0.5); }), ErrorKind::OrderTooLow);
}

TEST(OddC5, Examples) {
  EXPECT_EQ(odd_c5(koebe(3)), complex(1.0));
  EXPECT_EQ(odd_c5(identity_fn(3)), complex(0.0));
  EXPECT_NEAR(odd_c5_bound(), 1.0134171190, 1e-9);
  EXPECT_EQ(kind_of([] { odd_c5(koebe(2)); }), ErrorKind::OrderTooLow);
}

TEST(OddC5, MatchesSquareRootTransform) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = oracle::random_normalized(rng, 6);
    EXPECT_NEAR(std::abs(odd_c5(f) - sqrt_even_transform(f)[5]), 0.0, 1e-10);
  }
}

TEST(OddC5, StarlikeSamplesRespectBound) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto f = from_starlike(sample(seed, 1 + seed % 8, 4));
    ASSERT_LE(std::abs(odd_c5(f)), odd_c5_bound() + 1e-9) << seed;
  }
}

TEST(Hankel, Examples) {
  EXPECT_EQ(hankel(koebe(3), 2, 1), complex(-1.0));
  EXPECT_EQ(hankel(identity_fn(3), 2, 1), complex(0.0));
  EXPECT_NEAR(std::abs(hankel(koebe(5), 3, 1)), 0.0, 1e-10);
}

TEST(Hankel, FirstOrderIsCoefficient) {
  std::mt19937_64 rng(103);
  auto f = oracle::random_normalized(rng, 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(hankel(f, 1, n), f[n]);
}

TEST(Hankel, SecondOrderIdentityIsExact) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = oracle::random_normalized(rng, 4);
    EXPECT_EQ(hankel(f, 2, 1), f[3] - f[2] * f[2]);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 prng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const complex c1 = std::polar(2.0 * u(prng), oracle::kTwoPi * u(prng));
    auto f = from_starlike(pommerenke_extremal(c1, std::polar(1.0, oracle::kTwoPi * u(prng)), 6));
    EXPECT_EQ(std::abs(hankel(f, 2, 1)), std::abs(f[3] - f[2] * f[2]));
  }
}

TEST(Hankel, AgreesWithPermutationExpansion) {
  std::mt19937_64 rng(109);
  for (int q = 1; q <= 6; ++q) {
    for (int n = 1; n <= 3; ++n) {
      auto f = oracle::random_normalized(rng, n + 2 * (q - 1));
      std::vector<std::vector<complex>> m(q, std::vector<complex>(q));
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m[i][j] = f[n + i + j];
      const complex ref = permutation_det(m);
      EXPECT_NEAR(std::abs(hankel(f, q, n) - ref), 0.0, 1e-10 * std::max(1.0, std::abs(ref))) << q << " " << n;
    }
  }
}

TEST(Hankel, Preconditions) {
  EXPECT_EQ(kind_of([] { hankel(koebe(8), 2, 0); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { hankel(koebe(8), 0, 1); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { hankel(koebe(4), 3, 1); }), ErrorKind::OrderTooLow);
}

TEST(Bieberbach, KoebeIsExtremalEverywhere) {
  auto r = bieberbach_check(koebe(20));
  ASSERT_EQ(r.per_index.size(), 19u);
  for (double m : r.per_index) EXPECT_EQ(m, 0.0);
  EXPECT_EQ(*r.margin, 0.0);
}

TEST(Bieberbach, IdentityHasSlack) {
  auto r = bieberbach_check(identity_fn(10));
  for (std::size_t i = 0; i < r.per_index.size(); ++i) EXPECT_EQ(r.per_index[i], i + 2.0);
  EXPECT_EQ(*r.margin, 2.0);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(*r.bound, 2.0);
}

TEST(Bieberbach, StarlikeSamples) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto r = bieberbach_check(from_starlike(sample(seed, 1 + seed % 8, 31)));
    ASSERT_GE(*r.margin, -1e-9);
    ASSERT_FALSE(r.violated());
  }
}

TEST(Bieberbach, ReportsViolation) {
  std::vector<complex> c{0.0, 1.0, 2.5, 1.0};
  auto r = bieberbach_check(NormalizedSeries(TruncatedSeries(c)));
  EXPECT_TRUE(r.violated());
  EXPECT_DOUBLE_EQ(*r.margin, -0.5);
  EXPECT_EQ(*r.bound, 2.0);
}

TEST(Covering, Examples) {
  auto r = covering_check(koebe(4), -0.25);
  EXPECT_NEAR(r.value, 2.0, 1e-9);
  EXPECT_NEAR(*r.margin, 0.0, 1e-9);
  auto id = covering_check(identity_fn(2), 2.0);
  EXPECT_EQ(id.value, 0.5);
  EXPECT_EQ(*id.margin, 1.5);
  EXPECT_EQ(kind_of([] { covering_check(koebe(4), 0.0); }), ErrorKind::InvalidParameter);
}

TEST(Covering, ContinuousInXi) {
  auto a = covering_check(koebe(4), complex(-0.3, 0.1)).value;
  auto b = covering_check(koebe(4), complex(-0.3 + 1e-9, 0.1)).value;
  EXPECT_NEAR(a, b, 1e-7);
}

}  // namespace
}  // namespace schlicht
