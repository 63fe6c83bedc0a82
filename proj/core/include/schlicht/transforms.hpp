#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "schlicht/grid.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

/// A univalence-preserving transformation of a normalized function, with its
/// parameter validated at construction (InvalidParameter otherwise).
class TransformSpec {
 public:
  struct Conjugation {};
  struct Rotation { double theta; };
  struct Dilation { double r; };
  struct DiskAutomorphism { complex sigma; };
  struct OmittedValue { complex xi; };
  struct SquareRoot {};
  struct RangeCompose { std::shared_ptr<const NormalizedSeries> phi; };
  struct Libera {};
  struct Bernardi { double gamma; };
  struct LinearSum { double t; std::shared_ptr<const NormalizedSeries> other; };

  using Kind = std::variant<Conjugation, Rotation, Dilation, DiskAutomorphism, OmittedValue, SquareRoot,
                            RangeCompose, Libera, Bernardi, LinearSum>;

  static TransformSpec conjugation();
  static TransformSpec rotation(double theta);
  /// r in (0, 1).
  static TransformSpec dilation(double r);
  /// |sigma| < 1.
  static TransformSpec disk_automorphism(complex sigma);
  /// xi != 0.
  static TransformSpec omitted_value(complex xi);
  static TransformSpec square_root();
  static TransformSpec range_compose(NormalizedSeries phi);
  static TransformSpec libera();
  /// gamma > -1.
  static TransformSpec bernardi(double gamma);
  /// (1 - t) f + t other, t in [0, 1].
  static TransformSpec linear_sum(double t, NormalizedSeries other);

  const Kind& kind() const noexcept { return kind_; }
  std::string name() const;

 private:
  explicit TransformSpec(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// Applies the transformation with its built-in normalization; output order
/// equals input order (RangeCompose and LinearSum: min with the partner).
/// OmittedValue runs a best-effort argument-principle scan of f - xi over
/// `omit_grid` and throws OmittedValueAttained if a zero is detected. Without
/// a grid the scan uses one circle of 2048 angles at the largest radius in
/// {0.05, 0.10, ..., 0.95} where the last coefficient term |a_N| r^N is at
/// most 1e-6.
NormalizedSeries apply(const TransformSpec& spec, const NormalizedSeries& f,
                       const std::optional<ProbeGrid>& omit_grid = std::nullopt);

/// Radius used by the default omitted-value scan.
double omitted_value_scan_radius(const NormalizedSeries& f);

/// (2/z) int_0^z f: a_k -> 2 a_k / (k + 1).
NormalizedSeries libera(const NormalizedSeries& f);
/// ((1+gamma)/z^gamma) int_0^z t^{gamma-1} f: a_k -> (1 + gamma) a_k / (k + gamma).
NormalizedSeries bernardi(const NormalizedSeries& f, double gamma);
/// z + sum 2/(k+1) z^k; libera(f) == convolve(libera_kernel, f).
NormalizedSeries libera_kernel(int order = kDefaultOrder);

/// Hadamard product a_k b_k over every index; order min.
TruncatedSeries convolve(const TruncatedSeries& f, const TruncatedSeries& g);

/// (1 - t) phi + t psi, t in [0, 1]; order min.
TruncatedSeries linear_sum(const TruncatedSeries& phi, const TruncatedSeries& psi, double t);

/// n-fold p -> (alpha/z^alpha) int_0^z t^{alpha-1} p, i.e. c_k -> (alpha/(alpha+k))^n c_k,
/// applied one stage at a time. alpha > 0, n >= 0, p_0 = 1.
TruncatedSeries iterate_alpha(const TruncatedSeries& p, double alpha, int n);

/// Stage m multiplies c_k by s/(s + k) with s = sigma - m + 1, m = 1..n.
/// Requires sigma > n - 1 so every stage exponent is positive.
TruncatedSeries iterate_sigma(const TruncatedSeries& p, double sigma, int n);

}  // namespace schlicht
