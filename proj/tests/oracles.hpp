#pragma once

// Independent reference computations for the test suites. Nothing here may
// call into the coefficient recurrences or maps it is used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include <schlicht/series.hpp>

namespace schlicht::oracle {

using cvec = std::vector<complex>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Scatter-style Cauchy product: every pair (i, j) lands in slot i + j.
inline cvec naive_product(const cvec& a, const cvec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  cvec c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// outer(inner) as sum_j outer_j inner^j with explicit powers.
inline cvec naive_compose(const cvec& outer, const cvec& inner) {
  const std::size_t n = std::min(outer.size(), inner.size());
  cvec result(n), power(n);
  power[0] = 1.0;
  const cvec in(inner.begin(), inner.begin() + n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) result[k] += outer[j] * power[k];
    power = naive_product(power, in);
  }
  return result;
}

inline cvec coeffs(const TruncatedSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }

/// Taylor coefficients 0..order of F recovered from M samples on |z| = rho by
/// a discrete Fourier transform. Exact for polynomials of degree < M.
inline cvec dft_coefficients(const std::function<complex(complex)>& F, int order, double rho = 0.5, int M = 64) {
  cvec samples(M);
  for (int j = 0; j < M; ++j) samples[j] = F(std::polar(rho, kTwoPi * j / M));
  cvec c(order + 1);
  for (int k = 0; k <= order; ++k) {
    complex acc{};
    for (int j = 0; j < M; ++j) acc += samples[j] * std::polar(1.0, -kTwoPi * j * k / M);
    c[k] = acc / (M * std::pow(rho, k));
  }
  return c;
}

/// int_0^1 s^{p-1} G(s) ds via s = u^2 so that integer and half-integer
/// weights give polynomial integrands: 2 int_0^1 u^{2p-1} G(u^2) du.
inline complex weighted_integral(double p, const std::function<complex(double)>& G) {
  using boost::math::quadrature::gauss;
  auto re = [&](double u) { return 2.0 * std::pow(u, 2.0 * p - 1.0) * G(u * u).real(); };
  auto im = [&](double u) { return 2.0 * std::pow(u, 2.0 * p - 1.0) * G(u * u).imag(); };
  return {gauss<double, 30>::integrate(re, 0.0, 1.0), gauss<double, 30>::integrate(im, 0.0, 1.0)};
}

/// (c / z^c) int_0^z t^{c-1} F(t) dt along the ray, i.e. c int_0^1 s^{c-1} F(s z) ds.
inline std::function<complex(complex)> weighted_mean(double c, std::function<complex(complex)> F) {
  return [c, F = std::move(F)](complex z) {
    return c * weighted_integral(c, [&](double s) { return F(s * z); });
  };
}

/// Deterministic random complex series with |c_k| <= scale.
inline TruncatedSeries random_series(std::mt19937_64& rng, int order, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  cvec c(order + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return TruncatedSeries(std::move(c));
}

inline NormalizedSeries random_normalized(std::mt19937_64& rng, int order, double scale = 1.0) {
  cvec c = coeffs(random_series(rng, order, scale));
  c[0] = 0.0;
  c[1] = 1.0;
  return NormalizedSeries(TruncatedSeries(std::move(c)));
}

/// Herglotz integral for a discrete measure, evaluated pointwise.
template <class Measure>
complex herglotz_value(const Measure& m, complex z) {
  complex acc{};
  for (const auto& a : m.atoms()) {
    const complex e = std::polar(1.0, a.angle);
    acc += a.weight * (e + z) / (e - z);
  }
  return acc;
}

inline double max_abs_diff(const cvec& a, const cvec& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace schlicht::oracle
