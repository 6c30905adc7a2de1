#pragma once

// Odd reflections of highest weights across an adjacent 01/10 pair.

#include <string>
#include <vector>

#include "yhw/hw/weight.hpp"

namespace yhw {

/// Maximal cancellation of the roots of two degree-p polynomials.
struct CommonRootSplit {
    std::size_t k = 0;          // |a_distinct| = |b_distinct|
    RootMultiset a_distinct;    // sorted descending, satisfies the anti-string order
    RootMultiset b_distinct;
    RootMultiset shared;        // multiset intersection
};

/// Splits a and b into shared roots and non-shared remainders.  Throws
/// InputError when deg a ≠ deg b.
CommonRootSplit partition_common_roots(const MonicPoly& a, const MonicPoly& b);

enum class Direction { plus, minus };

inline const char* to_string(Direction d) { return d == Direction::plus ? "plus" : "minus"; }

/// Audit record of a single reflection at the 1-based position `index`.
struct ReflectionStep {
    std::size_t index = 0;
    Direction direction = Direction::plus;
    std::size_t k = 0;
    RootMultiset shared;
    RootMultiset moved_i;   // shifted roots placed into component i
    RootMultiset moved_i1;  // shifted roots placed into component i+1

    friend bool operator==(const ReflectionStep&, const ReflectionStep&) = default;
};

struct Reflected {
    ParitySeq parity;
    HighestWeight weight;
    ReflectionStep step;
};

/// Reflects (σ, λ) at position i: 10 → 01 shifts the non-shared roots by +1,
/// 01 → 10 by −1, and the non-shared parts trade places.  Throws InputError
/// "not an odd position" when σ_i = σ_{i+1}.
Reflected odd_reflect(const ParitySeq& parity, const HighestWeight& weight, std::size_t pos);

/// Positions visited by bubbling σ to the standard sequence, always taking
/// the smallest position with σ_iσ_{i+1} = 10.
std::vector<std::size_t> chain_to_standard(const ParitySeq& parity);

}  // namespace yhw
