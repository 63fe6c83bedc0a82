#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "schlicht/grid.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

/// Uniform threshold for reporting an inequality as violated.
inline constexpr double kViolationTolerance = 1e-9;

/// Discrete probability measure on [0, 2pi) feeding the Herglotz kernel.
class HerglotzMeasure {
 public:
  struct Atom {
    double angle;
    double weight;
  };

  /// Validates nonnegative weights summing to 1 (within 1e-12) and wraps
  /// angles into [0, 2pi). Throws InvalidMeasure.
  explicit HerglotzMeasure(std::vector<Atom> atoms);

  static HerglotzMeasure point_mass(double angle);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

 private:
  std::vector<Atom> atoms_;
};

/// Series with c_0 = 0 exactly. The unit bound itself is verified by
/// schwarz_checks, never assumed at construction.
class SchwarzFunction {
 public:
  explicit SchwarzFunction(TruncatedSeries s);

  const TruncatedSeries& series() const noexcept { return series_; }
  int order() const noexcept { return series_.order(); }

 private:
  TruncatedSeries series_;
};

/// (a, b) with -1 <= b < a <= 1.
class JanowskiParams {
 public:
  JanowskiParams(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double a_;
  double b_;
};

/// c_0 = 1, c_k = 2 sum_j mu_j exp(-i k t_j).
TruncatedSeries herglotz_to_series(const HerglotzMeasure& m, int order);

/// (1 + theta) / (1 - theta).
TruncatedSeries schwarz_to_h(const SchwarzFunction& theta);
/// (h - 1) / (h + 1); requires h_0 = 1.
SchwarzFunction h_to_schwarz(const TruncatedSeries& h);

/// (1 + a theta) / (1 + b theta).
TruncatedSeries janowski(const SchwarzFunction& theta, const JanowskiParams& p);

/// The six Caratheodory-preserving maps:
///   I    g(e^{it} z), t real
///   II   g(t z), t in [-1, 1]
///   III  g((z + t)/(1 + conj(t) z)) / g(t), |t| < 1 (t complex)
///   IV   (g + i t) / (1 + i t g), t real
///   V    g^t, t in [-1, 1]
///   VI   g^t h^tau, t, tau, t + tau in [0, 1]
enum class PreserveKind { I, II, III, IV, V, VI };

/// t is complex only for kind III; elsewhere a nonzero imaginary part is
/// rejected. The result has constant term exactly 1 (checked to 1e-12).
TruncatedSeries preserve(PreserveKind kind, const TruncatedSeries& g, const TruncatedSeries* h, complex t,
                         double tau = 0.0);

/// Deterministic sample: spacings of sorted uniforms for the weights, uniform
/// angles, both drawn from one 64-bit seeded stream.
HerglotzMeasure sample_measure(std::uint64_t seed, int n_atoms);
TruncatedSeries sample(std::uint64_t seed, int n_atoms, int order);

struct CoefficientBoundReport {
  /// margins[k-1] = 2 - |c_k|
  std::vector<double> margins;
  double worst_margin = 2.0;
  int worst_index = 0;
  std::vector<int> violations;
};

struct PommerenkeReport {
  double value = 0.0;  ///< |c_2 - c_1^2/2|
  double bound = 2.0;  ///< 2 - |c_1|^2/2
  double margin = 2.0;
  bool violated = false;
};

CoefficientBoundReport check_coefficient_bound(const TruncatedSeries& h);
PommerenkeReport check_pommerenke(const TruncatedSeries& h);

/// Equality case of the Pommerenke inequality:
///   (1 + (c1 + eps conj(c1))/2 z + eps z^2) / (1 - (c1 - eps conj(c1))/2 z - eps z^2)
TruncatedSeries pommerenke_extremal(complex c1, complex eps, int order);

struct SchwarzReport {
  double max_modulus_excess;      ///< max |theta(z)| - |z|
  double max_derivative_excess;   ///< max |theta'(z)| - (1 - |theta|^2)/(1 - |z|^2)
  bool ok(double tol = kViolationTolerance) const noexcept {
    return max_modulus_excess <= tol && max_derivative_excess <= tol;
  }
};

SchwarzReport schwarz_checks(const SchwarzFunction& theta, const ProbeGrid& grid);

}  // namespace schlicht
