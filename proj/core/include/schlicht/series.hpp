#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "schlicht/error.hpp"

namespace schlicht {

using complex = std::complex<double>;

/// Working truncation order used when a caller does not pick one.
inline constexpr int kDefaultOrder = 64;

/// Threshold below which a constant term counts as zero (divide, log, power).
inline constexpr double kNonzeroTolerance = 1e-12;

/// Taylor coefficients c_0..c_N about the origin.
///
/// The coefficient vector always has exactly order()+1 entries; terms past
/// the order are unknown, never implicitly zero. Values are immutable once
/// built; every operation returns a new series of a documented order.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(int order = 0);
  explicit TruncatedSeries(std::vector<complex> coeffs);

  static TruncatedSeries constant(complex value, int order);
  /// The series z (order >= 1).
  static TruncatedSeries identity(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const complex& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const complex> coefficients() const noexcept { return coeffs_; }

  /// Same coefficients cut (or zero-padded) to the new order.
  TruncatedSeries truncated(int order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(complex s, const TruncatedSeries& a);
/// Adds a scalar to the constant term.
TruncatedSeries operator+(const TruncatedSeries& a, complex s);

/// A series with c_0 = 0 and c_1 = 1 exactly (the class S normalization).
class NormalizedSeries {
 public:
  /// Throws NotNormalized unless c_0 == 0 and c_1 == 1 bit-exactly.
  explicit NormalizedSeries(TruncatedSeries s);

  /// Accepts |c_0| <= tol and |c_1 - 1| <= tol, then snaps both to exact values.
  static NormalizedSeries renormalized(TruncatedSeries s, double tol);

  int order() const noexcept { return series_.order(); }
  const complex& operator[](std::size_t k) const { return series_[k]; }
  std::span<const complex> coefficients() const noexcept { return series_.coefficients(); }
  const TruncatedSeries& series() const noexcept { return series_; }
  operator const TruncatedSeries&() const noexcept { return series_; }

  friend bool operator==(const NormalizedSeries&, const NormalizedSeries&) = default;

 private:
  TruncatedSeries series_;
};

/// Cauchy product; order min(a, b).
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Series quotient a/b; order min(a, b). Throws DivisionBySingularSeries if
/// |b_0| <= kNonzeroTolerance.
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

/// outer(inner(z)) by Horner nesting; order min(outer, inner).
/// Requires inner_0 == 0 exactly.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Order N-1 (order 0 input gives the zero series of order 0).
TruncatedSeries differentiate(const TruncatedSeries& a);
/// Antiderivative vanishing at 0; order N+1.
TruncatedSeries integrate_from_zero(const TruncatedSeries& a);

/// Principal logarithm, branch fixed by c_0. Throws BranchPointAtOrigin when
/// c_0 lies on the closed negative real axis (including 0).
TruncatedSeries principal_log(const TruncatedSeries& a);
/// exp(t log a) via the recurrence a g' = t g a'. Same precondition as log.
TruncatedSeries principal_power(const TruncatedSeries& a, double t);

/// g with g(z)^2 = f(z^2) and g_1 = 1. Odd by construction; order 2N-1.
NormalizedSeries sqrt_even_transform(const NormalizedSeries& f);

/// Coefficients of w -> a(center + w), treating a as the polynomial it stores.
TruncatedSeries taylor_shift(const TruncatedSeries& a, complex center);

complex evaluate(const TruncatedSeries& a, complex z);
/// Value and first derivative in one Horner pass.
std::pair<complex, complex> evaluate_with_derivative(const TruncatedSeries& a, complex z);

}  // namespace schlicht
