#pragma once

// Highest-weight structure of a representation with a distinguished vector ξ.

#include <stdexcept>

#include "yhw/rep/yangian_rep.hpp"

namespace yhw {

/// ξ is not a highest vector: T_ij(u) ξ has a nonzero u^power coefficient
/// for i < j, or ξ is not an eigenvector of T_ii(u) (then i = j).
class NotSingular : public std::runtime_error {
public:
    NotSingular(std::size_t i, std::size_t j, std::size_t power);
    std::size_t i, j, power;  // 0-based indices
};

struct HighestModule {
    std::vector<Vec> basis;  // homogeneous vectors spanning Y·ξ, basis[0] = ξ
    HighestWeight weight;
    YangianRep module;       // action restricted to the span, ξ = first basis vector
};

/// Reads λ(u) off ξ, throwing NotSingular when ξ is not a highest vector.
HighestWeight read_highest_weight(const YangianRep& r);

/// Restricts r to the cyclic span of its ξ.  Throws NotSingular as above and
/// DimensionCapExceeded never (the span is no larger than r).
HighestModule cyclic_highest_module(const YangianRep& r);

/// The irreducible quotient L(λ) of the cyclic span of ξ: the quotient by
/// the largest submodule missing ξ, computed as the dual of the span of
/// ξ* under right multiplication, where ξ* is the functional picking the
/// ξ-coordinate in the weight decomposition.
YangianRep irreducible_quotient(const YangianRep& r);

}  // namespace yhw
