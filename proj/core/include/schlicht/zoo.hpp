#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "schlicht/series.hpp"

namespace schlicht {

enum class FunctionTag { Koebe, Moebius, Identity, TheoremAExtremal, TheoremBExtremal, PommerenkeExtremal };

/// Stable CLI identifier ("koebe", "moebius", "identity", "thmA", "thmB", "pommerenke").
std::string_view tag_name(FunctionTag tag) noexcept;
/// Inverse of tag_name for the CLI identifiers; nullopt when unknown.
std::optional<FunctionTag> parse_tag(std::string_view name) noexcept;

using ComplexMap = std::function<complex(complex)>;

/// A canonical function: its truncated series plus closed forms for value
/// and the first two derivatives, used for cross-checks and probing.
struct NamedFunction {
  FunctionTag tag;
  TruncatedSeries series;
  ComplexMap value;
  ComplexMap derivative;
  ComplexMap second_derivative;
};

/// koebe, moebius, identity, thmA, thmB at the given order. For the
/// Pommerenke extremal use pommerenke_function.
NamedFunction named_function(FunctionTag tag, int order = kDefaultOrder);
NamedFunction pommerenke_function(complex c1, complex eps, int order = kDefaultOrder);

/// z/(1-z)^2: a_n = n.
NormalizedSeries koebe(int order = kDefaultOrder);
/// (1+z)/(1-z): 1, 2, 2, ...
TruncatedSeries moebius(int order = kDefaultOrder);
/// z/(1-z): a_n = 1, the normalized convex extremal and the Hadamard unit.
NormalizedSeries half_plane_map(int order = kDefaultOrder);

// The constructors below read a Caratheodory series h (h_0 = 1, checked to
// 1e-12, else NotCaratheodoryNormalized) and return a normalized f of order
// h.order() + 1, so no coefficient of h is discarded.

/// f(z)/z = h.
NormalizedSeries from_ratio_positive(const TruncatedSeries& h);
/// f' = h.
NormalizedSeries from_bounded_turning(const TruncatedSeries& h);
/// z f'/f = h, via (k-1) a_k = sum_{j=1}^{k-1} a_j c_{k-j}.
NormalizedSeries from_starlike(const TruncatedSeries& h);
/// f'/g' = h, via k a_k = k b_k + sum_{j=1}^{k-1} j b_j c_{k-j}. Convexity of
/// g is the caller's obligation. Order min(g.order(), h.order() + 1).
NormalizedSeries from_close_to_convex(const TruncatedSeries& h, const NormalizedSeries& g);

/// z f': a_k -> k a_k.
NormalizedSeries alexander_forward(const NormalizedSeries& f);
/// a_k -> a_k / k.
NormalizedSeries alexander_inverse(const NormalizedSeries& f);

}  // namespace schlicht
