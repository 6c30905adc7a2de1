#pragma once

// Bringing weights given in u⁻¹ form to level-p polynomial form.
//
// Multiplying every component by one series f(u) ∈ 1 + u⁻¹Q[[u⁻¹]] twists the
// module by an automorphism and does not change finite-dimensionality, so any
// tuple of rational components can be normalized to monic polynomials of a
// common degree p.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "yhw/exact/series.hpp"
#include "yhw/hw/weight.hpp"

namespace yhw {

/// (1 + n₁u⁻¹ + … + n_d u⁻ᵈ) / (1 + d₁u⁻¹ + … + d_e u⁻ᵉ); both lists start with 1.
struct InverseRatio {
    std::vector<Rat> num{Rat(1)};
    std::vector<Rat> den{Rat(1)};
};

/// A component is either an explicit ratio or a truncated series whose
/// rational form is reconstructed from its coefficients.
using WeightComponent = std::variant<InverseRatio, TruncatedSeries>;

/// The component ∏(1 + r u⁻¹) for the given roots.
InverseRatio inverse_form(const MonicPoly& p);

struct Normalized {
    HighestWeight weight;
    /// The twist is f(u) = u^{-deg} twist(u) = ∏(1 + r u⁻¹) over its roots.
    MonicPoly twist;
};

/// Throws NonRationalComponent for a series with no rational form of total
/// degree below its truncation order, InputError for a constant term ≠ 1, and
/// NonRationalRoot when a numerator or denominator does not split over Q.
Normalized normalize_twist(std::span<const WeightComponent> components);

/// Padé-style reconstruction of a truncated series c₀ = 1, …, c_N: the ratio
/// of smallest total degree d + e ≤ N − 1 that reproduces every coefficient.
std::optional<InverseRatio> rational_form(const TruncatedSeries& series);

}  // namespace yhw
