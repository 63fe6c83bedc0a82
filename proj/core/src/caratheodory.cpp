#include "schlicht/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace schlicht {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_unit_constant(const TruncatedSeries& h, const char* what) {
  if (std::abs(h[0] - 1.0) > kNonzeroTolerance) {
    throw Error(ErrorKind::NotCaratheodoryNormalized, std::string(what) + " must have constant term 1");
  }
}

TruncatedSeries with_unit_constant(const TruncatedSeries& p) {
  if (std::abs(p[0] - 1.0) > kNonzeroTolerance) {
    throw Error(ErrorKind::NotCaratheodoryNormalized, "transformed series lost p(0) = 1");
  }
  std::vector<complex> c(p.coefficients().begin(), p.coefficients().end());
  c[0] = 1.0;
  return TruncatedSeries(std::move(c));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_real(complex t) {
  if (t.imag() != 0.0) throw Error(ErrorKind::InvalidParameter, "parameter t must be real for this kind");
}

}  // namespace

HerglotzMeasure::HerglotzMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw Error(ErrorKind::InvalidMeasure, "measure needs at least one atom");
  double total = 0.0;
  for (auto& a : atoms_) {
    if (!std::isfinite(a.angle) || !std::isfinite(a.weight) || a.weight < 0.0) {
      throw Error(ErrorKind::InvalidMeasure, "weights must be finite and nonnegative");
    }
    a.angle = std::fmod(a.angle, kTwoPi);
    if (a.angle < 0.0) a.angle += kTwoPi;
    if (a.angle >= kTwoPi) a.angle = 0.0;
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidMeasure, "weights must sum to 1, got " + std::to_string(total));
  }
}

HerglotzMeasure HerglotzMeasure::point_mass(double angle) { return HerglotzMeasure({{angle, 1.0}}); }

SchwarzFunction::SchwarzFunction(TruncatedSeries s) : series_(std::move(s)) {
  if (series_[0] != complex{0.0, 0.0}) {
    throw Error(ErrorKind::InvalidParameter, "Schwarz function must vanish at the origin");
  }
}

JanowskiParams::JanowskiParams(double a, double b) : a_(a), b_(b) {
  if (!(-1.0 <= b && b < a && a <= 1.0)) {
    throw Error(ErrorKind::InvalidParameter, "Janowski parameters need -1 <= b < a <= 1");
  }
}

TruncatedSeries herglotz_to_series(const HerglotzMeasure& m, int order) {
  std::vector<complex> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    complex acc{};
    for (const auto& a : m.atoms()) acc += a.weight * std::polar(1.0, -k * a.angle);
    c[k] = 2.0 * acc;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries schwarz_to_h(const SchwarzFunction& theta) {
  const auto& s = theta.series();
  return divide(s + 1.0, (-s) + 1.0);
}

SchwarzFunction h_to_schwarz(const TruncatedSeries& h) {
  require_unit_constant(h, "h");
  const TruncatedSeries den = h + 1.0;
  if (std::abs(den[0]) <= kNonzeroTolerance) {
    throw Error(ErrorKind::ConstantDenominatorZero, "h(0) + 1 vanishes");
  }
  std::vector<complex> c = [&] {
    const TruncatedSeries q = divide(h + complex{-1.0}, den);
    return std::vector<complex>(q.coefficients().begin(), q.coefficients().end());
  }();
  c[0] = 0.0;
  return SchwarzFunction(TruncatedSeries(std::move(c)));
}

TruncatedSeries janowski(const SchwarzFunction& theta, const JanowskiParams& p) {
  const auto& s = theta.series();
  return divide(p.a() * s + 1.0, p.b() * s + 1.0);
}

TruncatedSeries preserve(PreserveKind kind, const TruncatedSeries& g, const TruncatedSeries* h, complex t,
                         double tau) {
  require_unit_constant(g, "g");
  const int n = g.order();
  switch (kind) {
    case PreserveKind::I: {
      require_real(t);
      std::vector<complex> c(g.coefficients().begin(), g.coefficients().end());
      for (int k = 1; k <= n; ++k) c[k] *= std::polar(1.0, k * t.real());
      return with_unit_constant(TruncatedSeries(std::move(c)));
    }
    case PreserveKind::II: {
      require_real(t);
      if (std::abs(t.real()) > 1.0) throw Error(ErrorKind::InvalidParameter, "kind II needs t in [-1, 1]");
      std::vector<complex> c(g.coefficients().begin(), g.coefficients().end());
      double scale = 1.0;
      for (int k = 1; k <= n; ++k) {
        scale *= t.real();
        c[k] *= scale;
      }
      return with_unit_constant(TruncatedSeries(std::move(c)));
    }
    case PreserveKind::III: {
      if (std::abs(t) >= 1.0) throw Error(ErrorKind::InvalidParameter, "kind III needs |t| < 1");
      // (z + t)/(1 + conj(t) z) - t = z (1 - |t|^2) / (1 + conj(t) z)
      std::vector<complex> w(static_cast<std::size_t>(n) + 1);
      const complex ratio = -std::conj(t);
      complex term = 1.0 - std::norm(t);
      for (int k = 1; k <= n; ++k) {
        w[k] = term;
        term *= ratio;
      }
      const TruncatedSeries shifted = taylor_shift(g, t);
      if (std::abs(shifted[0]) <= kNonzeroTolerance) {
        throw Error(ErrorKind::ConstantDenominatorZero, "g(t) vanishes");
      }
      const TruncatedSeries moved = compose(shifted, TruncatedSeries(std::move(w)));
      return with_unit_constant((1.0 / shifted[0]) * moved);
    }
    case PreserveKind::IV: {
      require_real(t);
      const complex it{0.0, t.real()};
      return with_unit_constant(divide(g + it, it * g + 1.0));
    }
    case PreserveKind::V: {
      require_real(t);
      if (std::abs(t.real()) > 1.0) throw Error(ErrorKind::InvalidParameter, "kind V needs t in [-1, 1]");
      return with_unit_constant(principal_power(g, t.real()));
    }
    case PreserveKind::VI: {
      require_real(t);
      if (h == nullptr) throw Error(ErrorKind::InvalidParameter, "kind VI needs a second function h");
      require_unit_constant(*h, "h");
      const double s = t.real();
      if (s < 0.0 || s > 1.0 || tau < 0.0 || tau > 1.0 || s + tau > 1.0) {
        throw Error(ErrorKind::InvalidParameter, "kind VI needs t, tau, t + tau in [0, 1]");
      }
      return with_unit_constant(multiply(principal_power(g, s), principal_power(*h, tau)));
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown transformation kind");
}

HerglotzMeasure sample_measure(std::uint64_t seed, int n_atoms) {
  if (n_atoms < 1) throw Error(ErrorKind::InvalidParameter, "n_atoms must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> cuts(static_cast<std::size_t>(n_atoms) - 1);
  for (auto& c : cuts) c = uniform01(rng);
  std::sort(cuts.begin(), cuts.end());
  std::vector<HerglotzMeasure::Atom> atoms(n_atoms);
  double prev = 0.0;
  for (int j = 0; j < n_atoms; ++j) {
    const double next = j + 1 < n_atoms ? cuts[j] : 1.0;
    atoms[j].weight = next - prev;
    prev = next;
  }
  for (auto& a : atoms) a.angle = kTwoPi * uniform01(rng);
  return HerglotzMeasure(std::move(atoms));
}

TruncatedSeries sample(std::uint64_t seed, int n_atoms, int order) {
  return herglotz_to_series(sample_measure(seed, n_atoms), order);
}

CoefficientBoundReport check_coefficient_bound(const TruncatedSeries& h) {
  require_unit_constant(h, "h");
  CoefficientBoundReport r;
  r.margins.reserve(h.order());
  for (int k = 1; k <= h.order(); ++k) {
    const double m = 2.0 - std::abs(h[k]);
    r.margins.push_back(m);
    if (r.worst_index == 0 || m < r.worst_margin) {
      r.worst_margin = m;
      r.worst_index = k;
    }
    if (m < -kViolationTolerance) r.violations.push_back(k);
  }
  return r;
}

PommerenkeReport check_pommerenke(const TruncatedSeries& h) {
  require_unit_constant(h, "h");
  if (h.order() < 2) throw Error(ErrorKind::OrderTooLow, "Pommerenke check needs order >= 2");
  PommerenkeReport r;
  r.value = std::abs(h[2] - h[1] * h[1] / 2.0);
  r.bound = 2.0 - std::norm(h[1]) / 2.0;
  r.margin = r.bound - r.value;
  r.violated = r.margin < -kViolationTolerance;
  return r;
}

TruncatedSeries pommerenke_extremal(complex c1, complex eps, int order) {
  if (std::abs(c1) > 2.0 + kNonzeroTolerance) throw Error(ErrorKind::InvalidParameter, "need |c1| <= 2");
  if (std::abs(std::abs(eps) - 1.0) > 1e-12) throw Error(ErrorKind::InvalidParameter, "need |eps| = 1");
  if (order < 0) throw Error(ErrorKind::InvalidParameter, "order must be >= 0");
  const int n = std::max(order, 2);
  std::vector<complex> num(n + 1), den(n + 1);
  num[0] = den[0] = 1.0;
  num[1] = 0.5 * (c1 + eps * std::conj(c1));
  den[1] = -0.5 * (c1 - eps * std::conj(c1));
  num[2] = eps;
  den[2] = -eps;
  return divide(TruncatedSeries(std::move(num)), TruncatedSeries(std::move(den))).truncated(order);
}

SchwarzReport schwarz_checks(const SchwarzFunction& theta, const ProbeGrid& grid) {
  constexpr double kLowest = -std::numeric_limits<double>::infinity();
  SchwarzReport rep{kLowest, kLowest};
  const int m = grid.angles_per_circle();
  for (double r : grid.radii()) {
    for (int j = 0; j < m; ++j) {
      const complex z = std::polar(r, kTwoPi * j / m);
      const auto [v, dv] = evaluate_with_derivative(theta.series(), z);
      rep.max_modulus_excess = std::max(rep.max_modulus_excess, std::abs(v) - r);
      rep.max_derivative_excess =
          std::max(rep.max_derivative_excess, std::abs(dv) - (1.0 - std::norm(v)) / (1.0 - r * r));
    }
  }
  return rep;
}

}  // namespace schlicht
