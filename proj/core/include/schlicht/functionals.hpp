#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schlicht/series.hpp"

namespace schlicht {

/// A nonnegative coefficient functional, optionally against a sharp bound.
/// margin = bound - value whenever a bound is present.
struct FunctionalReport {
  std::string name;
  double value = 0.0;
  std::optional<double> bound;
  std::optional<double> margin;
  /// Per-index margins for functionals that scan the whole series
  /// (bieberbach: entry k-2 holds k - |a_k|).
  std::vector<double> per_index;

  bool violated(double tol = 1e-9) const noexcept { return margin && *margin < -tol; }
};

/// 1 + 2 exp(-2 alpha / (1 - alpha)) on [0, 1), continued by its limit 1 at alpha = 1.
double fekete_szego_bound(double alpha);

/// |a_3 - alpha a_2^2| against fekete_szego_bound. order >= 3, alpha in [0, 1].
FunctionalReport fekete_szego(const NormalizedSeries& f, double alpha);

/// Fifth coefficient of sqrt(f(z^2)): (a_3 - a_2^2/4) / 2.
complex odd_c5(const NormalizedSeries& f);

/// 1/2 + e^{-2/3}, the odd-function bound for the fifth coefficient.
double odd_c5_bound();

/// det[a_{n+i+j}]_{i,j<q}. Cofactor expansion for q <= 4, partial-pivot LU
/// beyond. Requires q >= 1, n >= 1 and order >= n + 2(q - 1).
complex hankel(const NormalizedSeries& f, int q, int n);

/// Worst |a_k| against k over 2 <= k <= order; value/bound are taken at the
/// index with the smallest margin.
FunctionalReport bieberbach_check(const NormalizedSeries& f);

/// |a_2 + 1/xi| against 2. xi != 0, order >= 2.
FunctionalReport covering_check(const NormalizedSeries& f, complex xi);

}  // namespace schlicht
