#include "schlicht/transforms.hpp"

#include <cmath>
#include <numbers>

#include "schlicht/geometry.hpp"

namespace schlicht {

namespace {

constexpr double kRenormTolerance = 1e-10;

void require_caratheodory(const TruncatedSeries& p) {
  if (std::abs(p[0] - 1.0) > kNonzeroTolerance) {
    throw Error(ErrorKind::NotCaratheodoryNormalized, "p must have constant term 1");
  }
}

template <class F>
NormalizedSeries coefficient_map(const NormalizedSeries& f, F&& factor) {
  std::vector<complex> a(f.coefficients().begin(), f.coefficients().end());
  for (int k = 2; k <= f.order(); ++k) a[k] *= factor(k);
  return NormalizedSeries(TruncatedSeries(std::move(a)));
}

NormalizedSeries automorphism(const NormalizedSeries& f, complex sigma) {
  const int n = f.order();
  const double shrink = 1.0 - std::norm(sigma);
  // (z + sigma)/(1 + conj(sigma) z) - sigma = shrink * z / (1 + conj(sigma) z)
  std::vector<complex> w(n + 1);
  complex term = shrink;
  for (int k = 1; k <= n; ++k) {
    w[k] = term;
    term *= -std::conj(sigma);
  }
  const TruncatedSeries around = taylor_shift(f, sigma);  // f(sigma + w)
  if (std::abs(around[1]) <= kNonzeroTolerance) {
    throw Error(ErrorKind::InvalidParameter, "f'(sigma) vanishes; automorphism undefined");
  }
  const TruncatedSeries moved = compose(around, TruncatedSeries(std::move(w)));
  const TruncatedSeries shifted = moved + (-around[0]);
  return NormalizedSeries::renormalized((1.0 / (shrink * around[1])) * shifted, kRenormTolerance);
}

NormalizedSeries omitted_value(const NormalizedSeries& f, complex xi, const ProbeGrid& grid) {
  const auto& s = f.series();
  auto shifted = [&](complex z) { return evaluate(s, z) - xi; };
  for (double r : grid.radii()) {
    const auto scan = winding_number(shifted, r, grid.angles_per_circle());
    if (scan.min_modulus <= kPositivityTolerance || scan.winding != 0) {
      throw Error(ErrorKind::OmittedValueAttained, "f attains xi inside |z| < " + std::to_string(r));
    }
  }
  return NormalizedSeries::renormalized(divide(xi * s, (-s) + xi), kRenormTolerance);
}

}  // namespace

double omitted_value_scan_radius(const NormalizedSeries& f) {
  const double last = std::abs(f[f.order()]);
  for (int i = 19; i > 1; --i) {
    const double r = 0.05 * i;
    if (last * std::pow(r, f.order()) <= 1e-6) return r;
  }
  return 0.05;
}

TransformSpec TransformSpec::conjugation() { return TransformSpec(Conjugation{}); }

TransformSpec TransformSpec::rotation(double theta) {
  if (!std::isfinite(theta)) throw Error(ErrorKind::InvalidParameter, "rotation angle must be finite");
  return TransformSpec(Rotation{theta});
}

TransformSpec TransformSpec::dilation(double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidParameter, "dilation needs r in (0, 1)");
  return TransformSpec(Dilation{r});
}

TransformSpec TransformSpec::disk_automorphism(complex sigma) {
  if (!(std::abs(sigma) < 1.0)) throw Error(ErrorKind::InvalidParameter, "automorphism needs |sigma| < 1");
  return TransformSpec(DiskAutomorphism{sigma});
}

TransformSpec TransformSpec::omitted_value(complex xi) {
  if (xi == complex{} || !std::isfinite(xi.real()) || !std::isfinite(xi.imag())) {
    throw Error(ErrorKind::InvalidParameter, "omitted value must be finite and nonzero");
  }
  return TransformSpec(OmittedValue{xi});
}

TransformSpec TransformSpec::square_root() { return TransformSpec(SquareRoot{}); }

TransformSpec TransformSpec::range_compose(NormalizedSeries phi) {
  return TransformSpec(RangeCompose{std::make_shared<const NormalizedSeries>(std::move(phi))});
}

TransformSpec TransformSpec::libera() { return TransformSpec(Libera{}); }

TransformSpec TransformSpec::bernardi(double gamma) {
  if (!(gamma > -1.0)) throw Error(ErrorKind::InvalidParameter, "Bernardi transform needs gamma > -1");
  return TransformSpec(Bernardi{gamma});
}

TransformSpec TransformSpec::linear_sum(double t, NormalizedSeries other) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::InvalidParameter, "linear sum needs t in [0, 1]");
  return TransformSpec(LinearSum{t, std::make_shared<const NormalizedSeries>(std::move(other))});
}

std::string TransformSpec::name() const {
  struct Namer {
    std::string operator()(const Conjugation&) const { return "conjugation"; }
    std::string operator()(const Rotation&) const { return "rotation"; }
    std::string operator()(const Dilation&) const { return "dilation"; }
    std::string operator()(const DiskAutomorphism&) const { return "disk_automorphism"; }
    std::string operator()(const OmittedValue&) const { return "omitted_value"; }
    std::string operator()(const SquareRoot&) const { return "square_root"; }
    std::string operator()(const RangeCompose&) const { return "range_compose"; }
    std::string operator()(const Libera&) const { return "libera"; }
    std::string operator()(const Bernardi&) const { return "bernardi"; }
    std::string operator()(const LinearSum&) const { return "linear_sum"; }
  };
  return std::visit(Namer{}, kind_);
}

NormalizedSeries apply(const TransformSpec& spec, const NormalizedSeries& f,
                       const std::optional<ProbeGrid>& omit_grid) {
  struct Visitor {
    const NormalizedSeries& f;
    const ProbeGrid& grid;

    NormalizedSeries operator()(const TransformSpec::Conjugation&) const {
      std::vector<complex> a(f.coefficients().begin(), f.coefficients().end());
      for (auto& x : a) x = std::conj(x);
      return NormalizedSeries(TruncatedSeries(std::move(a)));
    }
    NormalizedSeries operator()(const TransformSpec::Rotation& r) const {
      return coefficient_map(f, [&](int k) { return std::polar(1.0, (k - 1) * r.theta); });
    }
    NormalizedSeries operator()(const TransformSpec::Dilation& d) const {
      return coefficient_map(f, [&](int k) { return complex{std::pow(d.r, k - 1)}; });
    }
    NormalizedSeries operator()(const TransformSpec::DiskAutomorphism& a) const { return automorphism(f, a.sigma); }
    NormalizedSeries operator()(const TransformSpec::OmittedValue& o) const { return omitted_value(f, o.xi, grid); }
    NormalizedSeries operator()(const TransformSpec::SquareRoot&) const {
      return NormalizedSeries(sqrt_even_transform(f).series().truncated(f.order()));
    }
    NormalizedSeries operator()(const TransformSpec::RangeCompose& c) const {
      return NormalizedSeries::renormalized(compose(*c.phi, f), kRenormTolerance);
    }
    NormalizedSeries operator()(const TransformSpec::Libera&) const { return libera(f); }
    NormalizedSeries operator()(const TransformSpec::Bernardi& b) const { return bernardi(f, b.gamma); }
    NormalizedSeries operator()(const TransformSpec::LinearSum& s) const {
      return NormalizedSeries::renormalized(linear_sum(f, *s.other, s.t), kRenormTolerance);
    }
  };
  if (omit_grid) return std::visit(Visitor{f, *omit_grid}, spec.kind());
  const ProbeGrid scan = ProbeGrid::circle(omitted_value_scan_radius(f), 2048);
  return std::visit(Visitor{f, scan}, spec.kind());
}

NormalizedSeries libera(const NormalizedSeries& f) {
  return coefficient_map(f, [](int k) { return complex{2.0 / (k + 1.0)}; });
}

NormalizedSeries bernardi(const NormalizedSeries& f, double gamma) {
  if (!(gamma > -1.0)) throw Error(ErrorKind::InvalidParameter, "Bernardi transform needs gamma > -1");
  return coefficient_map(f, [&](int k) { return complex{(1.0 + gamma) / (k + gamma)}; });
}

NormalizedSeries libera_kernel(int order) {
  if (order < 1) throw Error(ErrorKind::InvalidParameter, "kernel order must be >= 1");
  std::vector<complex> g(order + 1);
  g[1] = 1.0;
  for (int k = 2; k <= order; ++k) g[k] = 2.0 / (k + 1.0);
  return NormalizedSeries(TruncatedSeries(std::move(g)));
}

TruncatedSeries convolve(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = f[k] * g[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries linear_sum(const TruncatedSeries& phi, const TruncatedSeries& psi, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::InvalidParameter, "linear sum needs t in [0, 1]");
  const int n = std::min(phi.order(), psi.order());
  std::vector<complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = (1.0 - t) * phi[k] + t * psi[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries iterate_alpha(const TruncatedSeries& p, double alpha, int n) {
  if (!(alpha > 0.0) || n < 0) throw Error(ErrorKind::InvalidParameter, "iterate_alpha needs alpha > 0, n >= 0");
  require_caratheodory(p);
  std::vector<complex> c(p.coefficients().begin(), p.coefficients().end());
  for (int stage = 0; stage < n; ++stage) {
    for (int k = 1; k <= p.order(); ++k) c[k] *= alpha / (alpha + k);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries iterate_sigma(const TruncatedSeries& p, double sigma, int n) {
  if (n < 0 || !(sigma > n - 1.0)) {
    throw Error(ErrorKind::InvalidParameter, "iterate_sigma needs n >= 0 and sigma > n - 1");
  }
  require_caratheodory(p);
  std::vector<complex> c(p.coefficients().begin(), p.coefficients().end());
  for (int m = 1; m <= n; ++m) {
    const double s = sigma - m + 1.0;
    for (int k = 1; k <= p.order(); ++k) c[k] *= s / (s + k);
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace schlicht
