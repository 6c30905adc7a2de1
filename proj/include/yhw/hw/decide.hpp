#pragma once

// Finite-dimensionality of irreducible highest-weight modules L(λ(u)) for an
// arbitrary parity sequence: reflect to the standard sequence, then look for
// Drinfeld polynomials at the even pairs.

#include <optional>
#include <utility>
#include <vector>

#include "yhw/hw/reflection.hpp"

namespace yhw {

/// A monic P with P(u+1)/P(u) = f, if one exists.
///
/// Roots of num and den are grouped by class modulo Z; inside a class both
/// sides are sorted descending and paired positionally.  Every pair (a, b)
/// must satisfy a − b ∈ Z_{≥1} and contributes the string
/// (u+b)(u+b+1)···(u+a−1) to P.
std::optional<MonicPoly> is_P_shift_ratio(const RationalFn& f);

/// λ_i/λ_{i+1} for an even 00 pair or λ_{i+1}/λ_i for an odd-odd 11 pair,
/// reduced; this is the ratio that must have the form P(u+1)/P(u).
RationalFn even_pair_ratio(const ParitySeq& parity, const HighestWeight& weight, std::size_t pos);

/// First 1-based position with σ_i = σ_{i+1} whose even-pair ratio has no
/// Drinfeld polynomial, evaluated on (σ, λ) as given.
std::optional<std::size_t> necessary_condition_failure(const ParitySeq& parity, const HighestWeight& weight);

enum class Verdict { finite_dim, infinite_dim };

inline const char* to_string(Verdict v) { return v == Verdict::finite_dim ? "FiniteDim" : "InfiniteDim"; }

struct DrinfeldData {
    std::vector<std::pair<std::size_t, MonicPoly>> polys;  // (1-based position, P_i)
    /// Qbar/Q at the boundary position m; absent when m = 0 or n = 0.
    std::optional<RationalFn> boundary;
};

struct FailureWitness {
    std::size_t position = 0;
    RationalFn ratio;  // the oriented, reduced ratio that admits no P
};

struct Decision {
    Verdict verdict;
    ParitySeq final_parity;
    HighestWeight final_weight;
    std::vector<ReflectionStep> trail;
    std::optional<DrinfeldData> certificate;
    std::optional<FailureWitness> failure;
};

enum class ReflectionOrder { smallest_first, largest_first };

/// Runs the inductive rule: while σ is not standard reflect at a 10 pair
/// (direction plus), then check the standard-sequence criterion.
Decision decide_finite_dimensional(const ParitySeq& parity, const HighestWeight& weight,
                                   ReflectionOrder order = ReflectionOrder::smallest_first);

/// Re-checks a decision from its final (σ, λ) and certificate alone.
bool validate_certificate(const Decision& decision);

}  // namespace yhw
