#pragma once

// Exact check of the defining relations in denominator-cleared form
//
//   (u − v) [T_ij(u), T_kl(v)]_± = s (T_kj(u) T_il(v) − T_kj(v) T_il(u)),
//
// with supercommutator sign (−1)^{(ī+j̄)(k̄+l̄)} and s = (−1)^{īj̄ + īk̄ + j̄k̄},
// compared coefficient by coefficient in independent variables u, v.

#include <optional>
#include <string>

#include "yhw/rep/yangian_rep.hpp"

namespace yhw {

struct RelationViolation {
    std::size_t i, j, k, l;  // 0-based
    std::size_t u_power, v_power;
    std::size_t row, col;
    Rat lhs, rhs;

    std::string str() const;
};

struct RelationReport {
    bool ok = true;
    std::size_t equations_checked = 0;
    std::optional<RelationViolation> violation;  // the first one found
};

RelationReport check_defining_relations(const YangianRep& r);

}  // namespace yhw
