#pragma once

// Level-p matrix representations of the super Yangian: for each pair of
// indices a matrix polynomial T_ij(u) = δ_ij u^p + t_ij^(1) u^{p−1} + … + t_ij^(p)
// acting on a Z/2-graded space.  Indices i, j are 0-based throughout.

#include <cstdint>
#include <optional>
#include <vector>

#include "yhw/hw/weight.hpp"
#include "yhw/rep/poly_matrix.hpp"

namespace yhw {

struct SuperVec {
    std::vector<std::uint8_t> parities;
    std::size_t dim() const { return parities.size(); }
};

/// One coefficient matrix t_ij^(r), 1 ≤ r ≤ p, with its parity ī + j̄.
struct Generator {
    std::size_t i, j, r;
    std::uint8_t parity;
    const Matrix* matrix;
};

class YangianRep {
public:
    /// Validates monic normalization, degree ≤ level and parity consistency
    /// (entry (r, c) of T_ij vanishes unless ī + j̄ = |r| + |c| mod 2).
    YangianRep(ParitySeq sigma, std::size_t level, SuperVec space, std::vector<PolyMatrix> t,
               std::optional<Vec> xi = std::nullopt);

    const ParitySeq& parity_seq() const { return sigma_; }
    std::size_t level() const { return level_; }
    std::size_t size() const { return sigma_.size(); }
    std::size_t dim() const { return space_.dim(); }
    const SuperVec& space() const { return space_; }
    const PolyMatrix& T(std::size_t i, std::size_t j) const { return t_[i * size() + j]; }
    const std::vector<PolyMatrix>& all_T() const { return t_; }
    const std::optional<Vec>& xi() const { return xi_; }

    YangianRep with_xi(Vec xi) const;

    /// t_ij^(r) = coefficient of u^{p−r} in T_ij(u) for r = 1..p.
    Matrix t(std::size_t i, std::size_t j, std::size_t r) const;
    /// Every t_ij^(r); the matrices are owned by this rep.
    std::vector<Generator> generators() const;

    /// Parity of a nonzero homogeneous vector, nullopt if not homogeneous.
    std::optional<std::uint8_t> vector_parity(const Vec& v) const;

private:
    ParitySeq sigma_;
    std::size_t level_;
    SuperVec space_;
    std::vector<PolyMatrix> t_;
    std::optional<Vec> xi_;
};

}  // namespace yhw
