#pragma once

// Concrete representations: evaluation modules, graded tensor products and
// the re-labelling and spectral-negation isomorphisms.

#include "yhw/rep/yangian_rep.hpp"

namespace yhw {

inline constexpr std::size_t kDefaultMaxDim = 256;

/// Vector module on Q^{m|n} shifted by u ↦ u − a:
/// T_ij(u) = δ_ij (u − a) + (−1)^{ī} e_ij, with ξ = e₁.
YangianRep build_vector_module(const ParitySeq& sigma, const Rat& a);

/// Kac module of gl(1|1) with highest weight (a₁, a₂) on basis v, w = E₂₁v
/// (v even), shifted by u ↦ u − a; σ must be 01 or 10.  When a₁ + a₂ = 0
/// the module is reducible and `quotient` selects its 1-dimensional top.
YangianRep build_kac_module(const ParitySeq& sigma, const Rat& a1, const Rat& a2, const Rat& a, bool quotient = true);

/// One-dimensional module T_ij(u) = δ_ij (u − a).
YangianRep build_trivial_module(const ParitySeq& sigma, const Rat& a);

/// Coproduct action T_ij(u) = Σ_k T¹_ik(u) ⊗ T²_kj(u) on the graded tensor
/// product, with (x ⊗ y)(v ⊗ w) = (−1)^{|y||v|} xv ⊗ yw.
YangianRep tensor_modules(const YangianRep& r1, const YangianRep& r2, std::size_t max_dim = kDefaultMaxDim);

/// Twist by T_ab(u) ↦ T_{s(a)s(b)}(u) for the transposition s = (pos, pos+1)
/// (pos 1-based); the result lives over σ with those entries swapped.
YangianRep relabel(const YangianRep& r, std::size_t pos, std::optional<Vec> xi = std::nullopt);

/// For a sequence of length two: the module over the complementary sequence
/// (01 ↔ 10, 00 ↔ 11) given by T'(u) = (−1)^p T(−u).  Weight roots negate.
YangianRep negate_spectral(const YangianRep& r);

}  // namespace yhw
