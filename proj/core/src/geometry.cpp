#include "schlicht/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

namespace schlicht {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

complex circle_point(double r, int j, int n) { return std::polar(r, kTwoPi * j / n); }

double cross(complex a, complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

bool on_segment(complex p, complex a, complex b) {
  return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
         std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(complex p1, complex p2, complex q1, complex q2) {
  const int d1 = sign_of(cross(q2 - q1, p1 - q1));
  const int d2 = sign_of(cross(q2 - q1, p2 - q1));
  const int d3 = sign_of(cross(p2 - p1, q1 - p1));
  const int d4 = sign_of(cross(p2 - p1, q2 - p1));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(p1, q1, q2)) return true;
  if (d2 == 0 && on_segment(p2, q1, q2)) return true;
  if (d3 == 0 && on_segment(q1, p1, p2)) return true;
  if (d4 == 0 && on_segment(q2, p1, p2)) return true;
  return false;
}

}  // namespace

ProbeGrid::ProbeGrid(std::vector<double> radii, int angles_per_circle)
    : radii_(std::move(radii)), angles_(angles_per_circle) {
  if (radii_.empty()) throw Error(ErrorKind::InvalidParameter, "probe grid needs at least one radius");
  if (angles_ < 8) throw Error(ErrorKind::InvalidParameter, "probe grid needs >= 8 angles per circle");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!(radii_[i] > 0.0 && radii_[i] < 1.0)) {
      throw Error(ErrorKind::InvalidParameter, "probe radii must lie in (0, 1)");
    }
    if (i > 0 && !(radii_[i] > radii_[i - 1])) {
      throw Error(ErrorKind::InvalidParameter, "probe radii must be strictly increasing");
    }
  }
}

ProbeGrid ProbeGrid::standard() {
  return ProbeGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95}, 64);
}

ProbeGrid ProbeGrid::circle(double r, int angles_per_circle) { return ProbeGrid({r}, angles_per_circle); }

AnalyticMap AnalyticMap::from_series(const TruncatedSeries& s) {
  auto f = std::make_shared<const TruncatedSeries>(s);
  auto d1 = std::make_shared<const TruncatedSeries>(differentiate(s));
  auto d2 = std::make_shared<const TruncatedSeries>(differentiate(*d1));
  return from_closed_form([f](complex z) { return evaluate(*f, z); },
                          [d1](complex z) { return evaluate(*d1, z); },
                          [d2](complex z) { return evaluate(*d2, z); });
}

AnalyticMap AnalyticMap::from_named(const NamedFunction& f) {
  return from_closed_form(f.value, f.derivative, f.second_derivative);
}

AnalyticMap AnalyticMap::from_closed_form(ComplexMap value, ComplexMap derivative, ComplexMap second_derivative) {
  AnalyticMap m;
  m.value_ = std::move(value);
  m.d1_ = std::move(derivative);
  m.d2_ = std::move(second_derivative);
  return m;
}

double min_real_part(const ComplexMap& F, double r, int n_angles) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidParameter, "radius must lie in (0, 1)");
  if (n_angles < 1) throw Error(ErrorKind::InvalidParameter, "need at least one angle");
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n_angles; ++j) {
    const complex w = F(circle_point(r, j, n_angles));
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw Error(ErrorKind::EvaluationSingularity, "quantity is singular on |z| = " + std::to_string(r));
    }
    best = std::min(best, w.real());
  }
  return best;
}

std::string_view class_name(ClassKind kind) noexcept {
  switch (kind) {
    case ClassKind::BoundedTurning: return "bounded-turning";
    case ClassKind::Starlike: return "starlike";
    case ClassKind::Convex: return "convex";
    case ClassKind::CloseToConvex: return "close-to-convex";
    case ClassKind::RatioPositive: return "ratio-positive";
    case ClassKind::QuasiConvex: return "quasi-convex";
  }
  return "unknown";
}

std::optional<ClassKind> parse_class(std::string_view name) noexcept {
  for (auto k : {ClassKind::BoundedTurning, ClassKind::Starlike, ClassKind::Convex, ClassKind::CloseToConvex,
                 ClassKind::RatioPositive, ClassKind::QuasiConvex}) {
    if (class_name(k) == name) return k;
  }
  return std::nullopt;
}

ComplexMap class_quantity(ClassKind kind, const AnalyticMap& f, const AnalyticMap* g) {
  if ((kind == ClassKind::CloseToConvex || kind == ClassKind::QuasiConvex) && g == nullptr) {
    throw Error(ErrorKind::InvalidParameter, std::string(class_name(kind)) + " needs a comparison function g");
  }
  switch (kind) {
    case ClassKind::BoundedTurning:
      return [f](complex z) { return f.derivative(z); };
    case ClassKind::Starlike:
      return [f](complex z) { return z * f.derivative(z) / f.value(z); };
    case ClassKind::Convex:
      return [f](complex z) { return 1.0 + z * f.second_derivative(z) / f.derivative(z); };
    case ClassKind::CloseToConvex:
      return [f, g = *g](complex z) { return f.derivative(z) / g.derivative(z); };
    case ClassKind::RatioPositive:
      return [f](complex z) { return f.value(z) / z; };
    case ClassKind::QuasiConvex:
      return [f, g = *g](complex z) { return (f.derivative(z) + z * f.second_derivative(z)) / g.derivative(z); };
  }
  throw Error(ErrorKind::InvalidParameter, "unknown class");
}

bool class_predicate(ClassKind kind, const AnalyticMap& f, double r, int n_angles, const AnalyticMap* g) {
  return min_real_part(class_quantity(kind, f, g), r, n_angles) > kPositivityTolerance;
}

NormalizedSeries partial_sum(const NormalizedSeries& f, int k) {
  if (k < 1 || k > f.order()) throw Error(ErrorKind::InvalidParameter, "partial sum index must be in [1, order]");
  return NormalizedSeries(f.series().truncated(k));
}

WindingScan winding_number(const ComplexMap& F, double r, int n_angles) {
  if (n_angles < 3) throw Error(ErrorKind::InvalidParameter, "winding scan needs >= 3 angles");
  WindingScan scan{0, std::numeric_limits<double>::infinity()};
  const complex first = F(circle_point(r, 0, n_angles));
  complex prev = first;
  double turn = 0.0;
  for (int j = 1; j <= n_angles; ++j) {
    const complex cur = j == n_angles ? first : F(circle_point(r, j, n_angles));
    scan.min_modulus = std::min(scan.min_modulus, std::abs(cur));
    if (prev != complex{} && cur != complex{}) turn += std::arg(cur / prev);
    prev = cur;
  }
  if (!std::isfinite(turn) || !std::isfinite(scan.min_modulus)) {
    throw Error(ErrorKind::EvaluationSingularity, "winding scan hit a singular sample");
  }
  scan.winding = static_cast<int>(std::lround(turn / kTwoPi));
  return scan;
}

std::string_view status_name(RadiusStatus s) noexcept {
  switch (s) {
    case RadiusStatus::Bracketed: return "bracketed";
    case RadiusStatus::Capped: return "capped";
    case RadiusStatus::Degenerate: return "degenerate";
  }
  return "unknown";
}

RadiusResult radius_solve(const std::function<bool(double)>& predicate, double tol, std::string name) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidParameter, "tolerance must be positive");
  constexpr double kInner = 1e-3;
  RadiusResult res;
  res.predicate_name = std::move(name);
  auto probe = [&](double r) {
    const bool ok = predicate(r);
    res.trace.emplace_back(r, ok);
    return ok;
  };
  if (!probe(kInner)) {
    res.status = RadiusStatus::Degenerate;
    return res;
  }
  if (probe(kRadiusCap)) {
    res.lo = res.hi = kRadiusCap;
    res.status = RadiusStatus::Capped;
    return res;
  }
  double lo = kInner;
  double hi = kRadiusCap;
  while (hi - lo > tol && res.iterations < 64) {
    const double mid = 0.5 * (lo + hi);
    (probe(mid) ? lo : hi) = mid;
    ++res.iterations;
  }
  res.lo = lo;
  res.hi = hi;
  return res;
}

RadiusResult local_univalence_radius(const AnalyticMap& f, double tol) {
  constexpr int kAngles = 2048;
  auto zero_free = [&f](double r) {
    const auto scan = winding_number([&f](complex z) { return f.derivative(z); }, r, kAngles);
    return scan.winding == 0 && scan.min_modulus > kPositivityTolerance;
  };
  return radius_solve(zero_free, tol, "local-univalence");
}

bool injectivity_probe(const AnalyticMap& f, double r, int n_angles) {
  if (n_angles < 3 || n_angles > 4096) throw Error(ErrorKind::InvalidParameter, "n_angles must be in [3, 4096]");
  std::vector<complex> w(n_angles);
  for (int j = 0; j < n_angles; ++j) w[j] = f.value(circle_point(r, j, n_angles));
  for (int i = 0; i < n_angles; ++i) {
    for (int j = i + 1; j < n_angles; ++j) {
      if (std::abs(w[i] - w[j]) <= kPositivityTolerance) return false;
    }
  }
  // Edge i joins w[i] and w[i+1]; neighbours share an endpoint and are skipped.
  for (int i = 0; i < n_angles; ++i) {
    const complex a = w[i], b = w[(i + 1) % n_angles];
    for (int j = i + 2; j < n_angles; ++j) {
      if (i == 0 && j == n_angles - 1) continue;
      if (segments_intersect(a, b, w[j], w[(j + 1) % n_angles])) return false;
    }
  }
  return true;
}

std::vector<BoundaryPoint> boundary_curve(const AnalyticMap& f, double r, int n_angles) {
  if (n_angles < 1) throw Error(ErrorKind::InvalidParameter, "need at least one angle");
  std::vector<BoundaryPoint> curve(n_angles);
  for (int j = 0; j < n_angles; ++j) {
    curve[j].theta = kTwoPi * j / n_angles;
    curve[j].w = f.value(std::polar(r, curve[j].theta));
  }
  return curve;
}

std::string boundary_csv(const std::vector<BoundaryPoint>& curve) {
  std::ostringstream out;
  out.precision(17);
  out << "theta,re,im\n";
  for (const auto& p : curve) out << p.theta << ',' << p.w.real() << ',' << p.w.imag() << '\n';
  return out.str();
}

}  // namespace schlicht
