#include "schlicht/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace schlicht {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionBySingularSeries: return "DivisionBySingularSeries";
    case ErrorKind::CompositionRequiresVanishingConstant: return "CompositionRequiresVanishingConstant";
    case ErrorKind::BranchPointAtOrigin: return "BranchPointAtOrigin";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotCaratheodoryNormalized: return "NotCaratheodoryNormalized";
    case ErrorKind::ConstantDenominatorZero: return "ConstantDenominatorZero";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InvalidMeasure: return "InvalidMeasure";
    case ErrorKind::OmittedValueAttained: return "OmittedValueAttained";
    case ErrorKind::OrderTooLow: return "OrderTooLow";
    case ErrorKind::EvaluationSingularity: return "EvaluationSingularity";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidParameter, "series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, complex{});
}

TruncatedSeries::TruncatedSeries(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidParameter, "series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(complex value, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  if (order < 1) throw Error(ErrorKind::InvalidParameter, "identity series needs order >= 1");
  TruncatedSeries s(order);
  s.coeffs_[1] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0) throw Error(ErrorKind::InvalidParameter, "series order must be >= 0");
  std::vector<complex> c(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), order + 1));
  c.resize(static_cast<std::size_t>(order) + 1);
  return TruncatedSeries(std::move(c));
}

namespace {

int common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

void require_branch(complex c0) {
  if (std::abs(c0) <= kNonzeroTolerance || (c0.real() < 0.0 && c0.imag() == 0.0)) {
    throw Error(ErrorKind::BranchPointAtOrigin, "constant term on the closed negative real axis");
  }
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = common_order(a, b);
  std::vector<complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = common_order(a, b);
  std::vector<complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  std::vector<complex> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x = -x;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(complex s, const TruncatedSeries& a) {
  std::vector<complex> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x *= s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, complex s) {
  std::vector<complex> c(a.coefficients().begin(), a.coefficients().end());
  c[0] += s;
  return TruncatedSeries(std::move(c));
}

NormalizedSeries::NormalizedSeries(TruncatedSeries s) : series_(std::move(s)) {
  if (series_.order() < 1 || series_[0] != complex{0.0, 0.0} || series_[1] != complex{1.0, 0.0}) {
    throw Error(ErrorKind::NotNormalized, "expected c0 = 0 and c1 = 1");
  }
}

NormalizedSeries NormalizedSeries::renormalized(TruncatedSeries s, double tol) {
  if (s.order() < 1 || std::abs(s[0]) > tol || std::abs(s[1] - 1.0) > tol) {
    throw Error(ErrorKind::NotNormalized, "series is not normalized within tolerance");
  }
  std::vector<complex> c(s.coefficients().begin(), s.coefficients().end());
  c[0] = 0.0;
  c[1] = 1.0;
  return NormalizedSeries(TruncatedSeries(std::move(c)));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = common_order(a, b);
  std::vector<complex> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    complex acc{};
    for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    c[k] = acc;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (std::abs(b[0]) <= kNonzeroTolerance) {
    throw Error(ErrorKind::DivisionBySingularSeries, "divisor has vanishing constant term");
  }
  const int n = common_order(a, b);
  std::vector<complex> q(n + 1);
  for (int k = 0; k <= n; ++k) {
    complex acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != complex{0.0, 0.0}) {
    throw Error(ErrorKind::CompositionRequiresVanishingConstant, "inner series must vanish at 0");
  }
  const int n = common_order(outer, inner);
  const TruncatedSeries in = inner.truncated(n);
  TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = multiply(acc, in) + outer[k];
  }
  return acc;
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
  const int n = a.order();
  if (n == 0) return TruncatedSeries(0);
  std::vector<complex> c(n);
  for (int k = 1; k <= n; ++k) c[k - 1] = static_cast<double>(k) * a[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate_from_zero(const TruncatedSeries& a) {
  const int n = a.order();
  std::vector<complex> c(n + 2);
  for (int k = 0; k <= n; ++k) c[k + 1] = a[k] / static_cast<double>(k + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries principal_log(const TruncatedSeries& a) {
  require_branch(a[0]);
  const int n = a.order();
  // L' = a'/a  =>  k a_0 L_k = k a_k - sum_{j=1}^{k-1} j L_j a_{k-j}
  std::vector<complex> L(n + 1);
  L[0] = std::log(a[0]);
  for (int k = 1; k <= n; ++k) {
    complex acc = static_cast<double>(k) * a[k];
    for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * L[j] * a[k - j];
    L[k] = acc / (static_cast<double>(k) * a[0]);
  }
  return TruncatedSeries(std::move(L));
}

TruncatedSeries principal_power(const TruncatedSeries& a, double t) {
  require_branch(a[0]);
  const int n = a.order();
  // a g' = t a' g  =>  k a_0 g_k = sum_{j=1}^{k} ((t+1) j - k) a_j g_{k-j}
  std::vector<complex> g(n + 1);
  g[0] = std::exp(t * std::log(a[0]));
  for (int k = 1; k <= n; ++k) {
    complex acc{};
    for (int j = 1; j <= k; ++j) acc += ((t + 1.0) * j - k) * a[j] * g[k - j];
    g[k] = acc / (static_cast<double>(k) * a[0]);
  }
  return TruncatedSeries(std::move(g));
}

NormalizedSeries sqrt_even_transform(const NormalizedSeries& f) {
  const int n = f.order();
  // f(w)/w = 1 + a_2 w + ..., known through w^{n-1}
  std::vector<complex> q(f.coefficients().begin() + 1, f.coefficients().end());
  const TruncatedSeries root = principal_power(TruncatedSeries(std::move(q)), 0.5);
  std::vector<complex> g(2 * n);
  for (int m = 0; m < n; ++m) g[2 * m + 1] = root[m];
  g[1] = 1.0;
  return NormalizedSeries(TruncatedSeries(std::move(g)));
}

TruncatedSeries taylor_shift(const TruncatedSeries& a, complex center) {
  // Repeated synthetic division: each pass peels one derivative coefficient.
  std::vector<complex> c(a.coefficients().begin(), a.coefficients().end());
  const int n = a.order();
  for (int i = 0; i < n; ++i) {
    for (int k = n - 1; k >= i; --k) c[k] += center * c[k + 1];
  }
  return TruncatedSeries(std::move(c));
}

complex evaluate(const TruncatedSeries& a, complex z) {
  complex acc{};
  for (int k = a.order(); k >= 0; --k) acc = acc * z + a[k];
  return acc;
}

std::pair<complex, complex> evaluate_with_derivative(const TruncatedSeries& a, complex z) {
  complex value{};
  complex deriv{};
  for (int k = a.order(); k >= 0; --k) {
    deriv = deriv * z + value;
    value = value * z + a[k];
  }
  return {value, deriv};
}

}  // namespace schlicht
