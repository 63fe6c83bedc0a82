#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schlicht/grid.hpp"
#include "schlicht/series.hpp"
#include "schlicht/zoo.hpp"

namespace schlicht {

// Every predicate here samples finite grids: it can refute a property but
// never certify it on the continuum.

/// Strictness threshold for "positive real part" and "nonvanishing".
inline constexpr double kPositivityTolerance = 1e-9;
/// Largest radius any probe or solver looks at.
inline constexpr double kRadiusCap = 0.999;

/// Something that can be evaluated with two derivatives: either a series
/// (derivatives by term-wise differentiation) or a closed form.
class AnalyticMap {
 public:
  static AnalyticMap from_series(const TruncatedSeries& s);
  static AnalyticMap from_named(const NamedFunction& f);
  static AnalyticMap from_closed_form(ComplexMap value, ComplexMap derivative, ComplexMap second_derivative);

  complex value(complex z) const { return value_(z); }
  complex derivative(complex z) const { return d1_(z); }
  complex second_derivative(complex z) const { return d2_(z); }

 private:
  ComplexMap value_, d1_, d2_;
};

/// min over n_angles equispaced points of |z| = r of Re F(z). Throws
/// EvaluationSingularity when F is not finite at a sample.
double min_real_part(const ComplexMap& F, double r, int n_angles);

enum class ClassKind { BoundedTurning, Starlike, Convex, CloseToConvex, RatioPositive, QuasiConvex };

std::string_view class_name(ClassKind kind) noexcept;
std::optional<ClassKind> parse_class(std::string_view name) noexcept;

/// The quantity whose real part defines the class: f', z f'/f, 1 + z f''/f',
/// f'/g', f/z, (z f')'/g'. CloseToConvex and QuasiConvex need g.
ComplexMap class_quantity(ClassKind kind, const AnalyticMap& f, const AnalyticMap* g = nullptr);

/// min Re of class_quantity on |z| = r exceeds kPositivityTolerance.
bool class_predicate(ClassKind kind, const AnalyticMap& f, double r, int n_angles, const AnalyticMap* g = nullptr);

/// s_k = z + a_2 z^2 + ... + a_k z^k, 1 <= k <= order.
NormalizedSeries partial_sum(const NormalizedSeries& f, int k);

struct WindingScan {
  int winding;         ///< net turns of F(re^{i theta}) around 0
  double min_modulus;  ///< min |F| over the samples
};

/// Argument-principle scan of F on |z| = r: the winding equals the number of
/// zeros inside (for analytic F) when the curve is resolved by the sampling.
WindingScan winding_number(const ComplexMap& F, double r, int n_angles);

enum class RadiusStatus { Bracketed, Capped, Degenerate };

struct RadiusResult {
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  std::string predicate_name;
  RadiusStatus status = RadiusStatus::Bracketed;
  /// Every probed radius with the predicate outcome, in evaluation order.
  std::vector<std::pair<double, bool>> trace;
};

std::string_view status_name(RadiusStatus s) noexcept;

/// Bisection for the transition radius of a predicate assumed monotone in r
/// (true near 0). Capped when the predicate holds at kRadiusCap, Degenerate
/// (lo = hi = 0) when it fails at r = 1e-3. At most 64 iterations.
RadiusResult radius_solve(const std::function<bool(double)>& predicate, double tol, std::string name = "predicate");

/// Largest r with f' zero-free on |z| <= r (winding of f' is 0 and
/// min |f'| > kPositivityTolerance, 2048 angles per circle). Status Capped
/// means no zero was found up to kRadiusCap.
RadiusResult local_univalence_radius(const AnalyticMap& f, double tol);

/// Necessary check for injectivity on |z| = r: boundary samples pairwise
/// distinct beyond 1e-9 and the sampled image polygon has no crossings.
/// n_angles <= 4096.
bool injectivity_probe(const AnalyticMap& f, double r, int n_angles);

struct BoundaryPoint {
  double theta;
  complex w;
};

std::vector<BoundaryPoint> boundary_curve(const AnalyticMap& f, double r, int n_angles);
/// "theta,re,im" header plus one row per sample.
std::string boundary_csv(const std::vector<BoundaryPoint>& curve);

}  // namespace schlicht
