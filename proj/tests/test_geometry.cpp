#include <algorithm>
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include <schlicht/caratheodory.hpp>
#include <schlicht/geometry.hpp>
#include <schlicht/zoo.hpp>

#include "oracles.hpp"

namespace schlicht {
namespace {

AnalyticMap named(FunctionTag tag) { return AnalyticMap::from_named(named_function(tag, 64)); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::ParseError;
}

void expect_valid_bracket(const RadiusResult& r, const std::function<bool(double)>& pred, double tol) {
  EXPECT_GE(r.lo, 0.0);
  EXPECT_LE(r.lo, r.hi);
  EXPECT_LT(r.hi, 1.0);
  if (r.status == RadiusStatus::Bracketed) {
    EXPECT_LE(r.hi - r.lo, tol);
    EXPECT_TRUE(pred(r.lo));
    EXPECT_FALSE(pred(r.hi));
  }
}

TEST(Grid, Validation) {
  EXPECT_EQ(ProbeGrid::standard().radii().size(), 10u);
  EXPECT_EQ(ProbeGrid::standard().radii().back(), 0.95);
  EXPECT_EQ(ProbeGrid::standard().angles_per_circle(), 64);
  EXPECT_EQ(kind_of([] { ProbeGrid({0.5, 0.4}, 16); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { ProbeGrid({0.5, 1.0}, 16); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { ProbeGrid({0.0}, 16); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { ProbeGrid({0.5}, 4); }), ErrorKind::InvalidParameter);
}

TEST(MinRealPart, MoebiusCircle) {
  auto L = [](complex z) { return (1.0 + z) / (1.0 - z); };
  EXPECT_NEAR(min_real_part(L, 0.5, 64), 1.0 / 3.0, 1e-14);
  EXPECT_EQ(min_real_part([](complex) { return complex(1.0); }, 0.7, 16), 1.0);
}

TEST(MinRealPart, BoundedTurningExtremalApproachesZero) {
  auto f = named(FunctionTag::TheoremBExtremal);
  const double m = min_real_part([&](complex z) { return f.derivative(z); }, 0.999, 4096);
  EXPECT_GT(m, 0.0);
  EXPECT_LT(m, 1e-3);
}

TEST(MinRealPart, SingularityIsReported) {
  EXPECT_EQ(kind_of([] { min_real_part([](complex z) { return 1.0 / (z - 0.5); }, 0.5, 8); }),
            ErrorKind::EvaluationSingularity);
}

TEST(ClassPredicate, KoebeStarlikeEverywhere) {
  auto k = named(FunctionTag::Koebe);
  for (double r : {0.1, 0.5, 0.9, 0.99}) EXPECT_TRUE(class_predicate(ClassKind::Starlike, k, r, 256)) << r;
}

TEST(ClassPredicate, KoebeConvexOnlyNearCenter) {
  auto k = named(FunctionTag::Koebe);
  EXPECT_FALSE(class_predicate(ClassKind::Convex, k, 0.9, 256));
  EXPECT_TRUE(class_predicate(ClassKind::Convex, k, 0.2, 256));
}

TEST(ClassPredicate, RatioPositiveExtremal) {
  EXPECT_TRUE(class_predicate(ClassKind::RatioPositive, named(FunctionTag::TheoremAExtremal), 0.99, 1024));
  EXPECT_TRUE(class_predicate(ClassKind::BoundedTurning, named(FunctionTag::TheoremBExtremal), 0.99, 1024));
}

TEST(ClassPredicate, SeriesAndClosedFormAgree) {
  auto series = AnalyticMap::from_series(koebe(400));
  auto closed = named(FunctionTag::Koebe);
  auto qs = class_quantity(ClassKind::Convex, series);
  auto qc = class_quantity(ClassKind::Convex, closed);
  for (int j = 0; j < 8; ++j) {
    const complex z = std::polar(0.6, 0.8 * j);
    EXPECT_NEAR(std::abs(qs(z) - qc(z)), 0.0, 1e-9);
  }
}

TEST(ClassPredicate, ComparisonFunctionRequired) {
  auto k = named(FunctionTag::Koebe);
  EXPECT_EQ(kind_of([&] { class_quantity(ClassKind::CloseToConvex, k); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([&] { class_quantity(ClassKind::QuasiConvex, k); }), ErrorKind::InvalidParameter);
  for (auto kind : {ClassKind::BoundedTurning, ClassKind::Starlike, ClassKind::Convex, ClassKind::CloseToConvex,
                    ClassKind::RatioPositive, ClassKind::QuasiConvex}) {
    EXPECT_EQ(parse_class(class_name(kind)), kind);
  }
}

TEST(ClassPredicate, KoebeCloseToConvexWithHalfPlane) {
  auto k = named(FunctionTag::Koebe);
  auto g = AnalyticMap::from_closed_form([](complex z) { return z / (1.0 - z); },
                                         [](complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); },
                                         [](complex z) { return 2.0 / std::pow(1.0 - z, 3); });
  EXPECT_TRUE(class_predicate(ClassKind::CloseToConvex, k, 0.95, 256, &g));
  EXPECT_TRUE(class_predicate(ClassKind::QuasiConvex, AnalyticMap::from_series(half_plane_map(400)), 0.9, 256, &g));
}

TEST(InclusionChains, ConvexImpliesStarlikeImpliesCloseToConvex) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto s = from_starlike(sample(seed, 1 + seed % 8, 255));
    auto g = AnalyticMap::from_series(alexander_inverse(s));
    auto f = AnalyticMap::from_series(s);  // z g'
    for (double r : {0.3, 0.6, 0.9}) {
      const bool convex = class_predicate(ClassKind::Convex, g, r, 64);
      const bool starlike = class_predicate(ClassKind::Starlike, g, r, 64);
      const bool ctc = class_predicate(ClassKind::CloseToConvex, g, r, 64, &g);
      EXPECT_TRUE(convex) << seed << " " << r;
      if (convex) EXPECT_TRUE(starlike) << seed << " " << r;
      if (starlike) EXPECT_TRUE(ctc) << seed << " " << r;
      // Alexander: g convex exactly when z g' is starlike, and then z g' is close-to-convex relative to g.
      EXPECT_EQ(class_predicate(ClassKind::Starlike, f, r, 64), convex);
      EXPECT_EQ(class_predicate(ClassKind::CloseToConvex, f, r, 64, &g), convex);
    }
  }
}

TEST(PartialSum, Examples) {
  auto k = koebe(8);
  EXPECT_EQ(partial_sum(k, 8), k);
  std::vector<complex> s2{0.0, 1.0, 2.0};
  EXPECT_EQ(partial_sum(k, 2).series(), TruncatedSeries(s2));
  EXPECT_EQ(partial_sum(NormalizedSeries(named_function(FunctionTag::TheoremAExtremal, 8).series), 2).series(),
            TruncatedSeries(s2));
  EXPECT_EQ(kind_of([&] { partial_sum(k, 9); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([&] { partial_sum(k, 0); }), ErrorKind::InvalidParameter);
}

TEST(Winding, CountsZeros) {
  auto scan = winding_number([](complex z) { return (z - 0.3) * (z + complex(0, 0.4)); }, 0.5, 512);
  EXPECT_EQ(scan.winding, 2);
  EXPECT_EQ(winding_number([](complex z) { return z - 0.7; }, 0.5, 512).winding, 0);
  EXPECT_NEAR(winding_number([](complex z) { return z - 0.7; }, 0.5, 512).min_modulus, 0.2, 1e-12);
}

TEST(LocalUnivalence, TheoremAExtremal) {
  auto r = local_univalence_radius(named(FunctionTag::TheoremAExtremal), 1e-6);
  EXPECT_EQ(r.status, RadiusStatus::Bracketed);
  EXPECT_LE(r.lo, std::sqrt(2.0) - 1.0);
  EXPECT_GE(r.hi, std::sqrt(2.0) - 1.0);
  EXPECT_LE(r.hi - r.lo, 1e-6);
  EXPECT_EQ(r.predicate_name, "local-univalence");
  EXPECT_EQ(static_cast<int>(r.trace.size()), r.iterations + 2);
}

TEST(LocalUnivalence, IdentityIsCapped) {
  auto r = local_univalence_radius(named(FunctionTag::Identity), 1e-6);
  EXPECT_EQ(r.status, RadiusStatus::Capped);
  EXPECT_EQ(r.hi, kRadiusCap);
}

TEST(LocalUnivalence, SecondPartialSum) {
  auto s2 = partial_sum(NormalizedSeries(named_function(FunctionTag::TheoremAExtremal, 8).series), 2);
  auto r = local_univalence_radius(AnalyticMap::from_series(s2), 1e-6);
  EXPECT_LE(r.lo, 0.25);
  EXPECT_GE(r.hi, 0.25);
  EXPECT_LE(r.hi - r.lo, 1e-6);
}

TEST(LocalUnivalence, DilationScalesRadius) {
  auto base = local_univalence_radius(named(FunctionTag::TheoremAExtremal), 1e-7);
  const double r0 = 0.5 * (base.lo + base.hi);
  for (double s : {0.5, 0.8, 0.3}) {
    auto f = named_function(FunctionTag::TheoremAExtremal, 8);
    auto dilated = AnalyticMap::from_closed_form([f, s](complex z) { return f.value(s * z) / s; },
                                                 [f, s](complex z) { return f.derivative(s * z); },
                                                 [f, s](complex z) { return s * f.second_derivative(s * z); });
    auto r = local_univalence_radius(dilated, 1e-7);
    const double expected = std::min(r0 / s, kRadiusCap);
    EXPECT_NEAR(0.5 * (r.lo + r.hi), expected, 1e-6) << s;
  }
}

TEST(RadiusSolve, KoebeConvexityRadius) {
  auto k = named(FunctionTag::Koebe);
  auto pred = [&](double r) { return class_predicate(ClassKind::Convex, k, r, 4096); };
  auto res = radius_solve(pred, 1e-6, "convex");
  EXPECT_NEAR(0.5 * (res.lo + res.hi), 2.0 - std::sqrt(3.0), 1e-6);
  expect_valid_bracket(res, pred, 1e-6);
}

TEST(RadiusSolve, AlwaysTrueIsCapped) {
  auto res = radius_solve([](double) { return true; }, 1e-6);
  EXPECT_EQ(res.status, RadiusStatus::Capped);
  EXPECT_EQ(res.hi, kRadiusCap);
  auto ratio = radius_solve(
      [a = named(FunctionTag::TheoremAExtremal)](double r) {
        return class_predicate(ClassKind::RatioPositive, a, r, 512);
      },
      1e-6);
  EXPECT_EQ(ratio.status, RadiusStatus::Capped);
}

TEST(RadiusSolve, AlwaysFalseIsDegenerate) {
  auto res = radius_solve([](double) { return false; }, 1e-6);
  EXPECT_EQ(res.status, RadiusStatus::Degenerate);
  EXPECT_EQ(res.lo, 0.0);
  EXPECT_EQ(res.hi, 0.0);
  EXPECT_EQ(kind_of([] { radius_solve([](double) { return true; }, 0.0); }), ErrorKind::InvalidParameter);
}

TEST(RadiusSolve, BracketIsValidForThresholds) {
  for (double t : {0.01, 0.123456, 0.5, 0.77, 0.998}) {
    auto pred = [t](double r) { return r < t; };
    auto res = radius_solve(pred, 1e-8);
    expect_valid_bracket(res, pred, 1e-8);
    EXPECT_LE(res.lo, t);
    EXPECT_GE(res.hi, t);
    ASSERT_FALSE(res.trace.empty());
    for (const auto& [r, ok] : res.trace) EXPECT_EQ(ok, r < t);
  }
}

TEST(Injectivity, Examples) {
  EXPECT_TRUE(injectivity_probe(named(FunctionTag::Koebe), 0.9, 1024));
  auto square = AnalyticMap::from_closed_form([](complex z) { return z * z; }, [](complex z) { return 2.0 * z; },
                                              [](complex) { return complex(2.0); });
  EXPECT_FALSE(injectivity_probe(square, 0.5, 256));
  EXPECT_FALSE(injectivity_probe(square, 0.5, 255));
  EXPECT_FALSE(injectivity_probe(named(FunctionTag::TheoremAExtremal), 0.6, 1024));
  EXPECT_TRUE(injectivity_probe(named(FunctionTag::TheoremAExtremal), 0.3, 1024));
  EXPECT_EQ(kind_of([] { injectivity_probe(named(FunctionTag::Koebe), 0.5, 5000); }), ErrorKind::InvalidParameter);
}

TEST(Boundary, CsvFormat) {
  auto curve = boundary_curve(named(FunctionTag::Identity), 0.5, 4);
  ASSERT_EQ(curve.size(), 4u);
  EXPECT_NEAR(std::abs(curve[1].w - complex(0.0, 0.5)), 0.0, 1e-15);
  const std::string csv = boundary_csv(curve);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,re,im");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 2);
  }
  EXPECT_EQ(rows, 4);
}

}  // namespace
}  // namespace schlicht
