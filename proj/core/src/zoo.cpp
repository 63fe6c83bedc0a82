#include "schlicht/zoo.hpp"

#include <cmath>
#include <string>

#include "schlicht/caratheodory.hpp"

namespace schlicht {

namespace {

void require_caratheodory(const TruncatedSeries& h) {
  if (std::abs(h[0] - 1.0) > kNonzeroTolerance) {
    throw Error(ErrorKind::NotCaratheodoryNormalized, "h must have constant term 1");
  }
}

void require_order(int order, int minimum) {
  if (order < minimum) {
    throw Error(ErrorKind::InvalidParameter, "order must be >= " + std::to_string(minimum));
  }
}

}  // namespace

std::string_view tag_name(FunctionTag tag) noexcept {
  switch (tag) {
    case FunctionTag::Koebe: return "koebe";
    case FunctionTag::Moebius: return "moebius";
    case FunctionTag::Identity: return "identity";
    case FunctionTag::TheoremAExtremal: return "thmA";
    case FunctionTag::TheoremBExtremal: return "thmB";
    case FunctionTag::PommerenkeExtremal: return "pommerenke";
  }
  return "unknown";
}

std::optional<FunctionTag> parse_tag(std::string_view name) noexcept {
  for (auto tag : {FunctionTag::Koebe, FunctionTag::Moebius, FunctionTag::Identity, FunctionTag::TheoremAExtremal,
                   FunctionTag::TheoremBExtremal, FunctionTag::PommerenkeExtremal}) {
    if (tag_name(tag) == name) return tag;
  }
  return std::nullopt;
}

NormalizedSeries koebe(int order) {
  require_order(order, 1);
  std::vector<complex> c(order + 1);
  for (int k = 1; k <= order; ++k) c[k] = static_cast<double>(k);
  return NormalizedSeries(TruncatedSeries(std::move(c)));
}

TruncatedSeries moebius(int order) {
  require_order(order, 0);
  std::vector<complex> c(order + 1, complex{2.0});
  c[0] = 1.0;
  return TruncatedSeries(std::move(c));
}

NormalizedSeries half_plane_map(int order) {
  require_order(order, 1);
  std::vector<complex> c(order + 1, complex{1.0});
  c[0] = 0.0;
  return NormalizedSeries(TruncatedSeries(std::move(c)));
}

NamedFunction named_function(FunctionTag tag, int order) {
  switch (tag) {
    case FunctionTag::Koebe:
      return {tag, koebe(order),
              [](complex z) { return z / ((1.0 - z) * (1.0 - z)); },
              [](complex z) { return (1.0 + z) / std::pow(1.0 - z, 3); },
              [](complex z) { return (2.0 * z + 4.0) / std::pow(1.0 - z, 4); }};
    case FunctionTag::Moebius:
      return {tag, moebius(order),
              [](complex z) { return (1.0 + z) / (1.0 - z); },
              [](complex z) { return 2.0 / ((1.0 - z) * (1.0 - z)); },
              [](complex z) { return 4.0 / std::pow(1.0 - z, 3); }};
    case FunctionTag::Identity:
      return {tag, TruncatedSeries::identity(std::max(order, 1)),
              [](complex z) { return z; },
              [](complex) { return complex{1.0}; },
              [](complex) { return complex{0.0}; }};
    case FunctionTag::TheoremAExtremal:
      return {tag, from_ratio_positive(moebius(order - 1)),
              [](complex z) { return z * (1.0 + z) / (1.0 - z); },
              [](complex z) { return (1.0 + 2.0 * z - z * z) / ((1.0 - z) * (1.0 - z)); },
              [](complex z) { return 4.0 / std::pow(1.0 - z, 3); }};
    case FunctionTag::TheoremBExtremal:
      return {tag, from_bounded_turning(moebius(order - 1)),
              [](complex z) { return -2.0 * std::log(1.0 - z) - z; },
              [](complex z) { return (1.0 + z) / (1.0 - z); },
              [](complex z) { return 2.0 / ((1.0 - z) * (1.0 - z)); }};
    case FunctionTag::PommerenkeExtremal:
      return pommerenke_function(2.0, 1.0, order);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown function tag");
}

NamedFunction pommerenke_function(complex c1, complex eps, int order) {
  const complex p = 0.5 * (c1 + eps * std::conj(c1));
  const complex q = -0.5 * (c1 - eps * std::conj(c1));
  // h = N/D with N = 1 + p z + eps z^2, D = 1 + q z - eps z^2
  auto value = [=](complex z) { return (1.0 + p * z + eps * z * z) / (1.0 + q * z - eps * z * z); };
  auto derivative = [=](complex z) {
    const complex n = 1.0 + p * z + eps * z * z;
    const complex d = 1.0 + q * z - eps * z * z;
    return ((p + 2.0 * eps * z) * d - n * (q - 2.0 * eps * z)) / (d * d);
  };
  auto second = [=](complex z) {
    const complex n = 1.0 + p * z + eps * z * z;
    const complex d = 1.0 + q * z - eps * z * z;
    const complex n1 = p + 2.0 * eps * z;
    const complex d1 = q - 2.0 * eps * z;
    const complex n2 = 2.0 * eps;
    const complex d2 = -2.0 * eps;
    return (n2 * d - n * d2) / (d * d) - 2.0 * d1 * (n1 * d - n * d1) / (d * d * d);
  };
  return {FunctionTag::PommerenkeExtremal, pommerenke_extremal(c1, eps, order), value, derivative, second};
}

NormalizedSeries from_ratio_positive(const TruncatedSeries& h) {
  require_caratheodory(h);
  std::vector<complex> a(h.order() + 2);
  for (int k = 0; k <= h.order(); ++k) a[k + 1] = h[k];
  a[1] = 1.0;
  return NormalizedSeries(TruncatedSeries(std::move(a)));
}

NormalizedSeries from_bounded_turning(const TruncatedSeries& h) {
  require_caratheodory(h);
  std::vector<complex> a(h.order() + 2);
  a[1] = 1.0;
  for (int k = 2; k <= h.order() + 1; ++k) a[k] = h[k - 1] / static_cast<double>(k);
  return NormalizedSeries(TruncatedSeries(std::move(a)));
}

NormalizedSeries from_starlike(const TruncatedSeries& h) {
  require_caratheodory(h);
  const int n = h.order() + 1;
  std::vector<complex> a(n + 1);
  a[1] = 1.0;
  for (int k = 2; k <= n; ++k) {
    complex acc{};
    for (int j = 1; j < k; ++j) acc += a[j] * h[k - j];
    a[k] = acc / static_cast<double>(k - 1);
  }
  return NormalizedSeries(TruncatedSeries(std::move(a)));
}

NormalizedSeries from_close_to_convex(const TruncatedSeries& h, const NormalizedSeries& g) {
  require_caratheodory(h);
  const int n = std::min(g.order(), h.order() + 1);
  std::vector<complex> a(n + 1);
  a[1] = 1.0;
  for (int k = 2; k <= n; ++k) {
    complex acc{};
    for (int j = 1; j < k; ++j) acc += static_cast<double>(j) * g[j] * h[k - j];
    a[k] = g[k] + acc / static_cast<double>(k);
  }
  return NormalizedSeries(TruncatedSeries(std::move(a)));
}

NormalizedSeries alexander_forward(const NormalizedSeries& f) {
  std::vector<complex> a(f.coefficients().begin(), f.coefficients().end());
  for (int k = 2; k <= f.order(); ++k) a[k] *= static_cast<double>(k);
  return NormalizedSeries(TruncatedSeries(std::move(a)));
}

NormalizedSeries alexander_inverse(const NormalizedSeries& f) {
  std::vector<complex> a(f.coefficients().begin(), f.coefficients().end());
  for (int k = 2; k <= f.order(); ++k) a[k] /= static_cast<double>(k);
  return NormalizedSeries(TruncatedSeries(std::move(a)));
}

}  // namespace schlicht
