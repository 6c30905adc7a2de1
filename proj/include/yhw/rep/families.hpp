#pragma once

// Seeded random instance families run by the CLI `verify` command and the
// acceptance suite.  Instance k of a run draws from a generator seeded with
// (seed, k), so single instances can be reproduced in isolation.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "yhw/rep/modules.hpp"
#include "yhw/rep/verify.hpp"

namespace yhw {

enum class Family { rtt, prop42, reflection, berezinian };

std::optional<Family> parse_family(std::string_view name);
const char* to_string(Family f);

/// Uniform draw from {−5, …, 5} ∪ {±1/2, ±3/2}.
Rat random_root(std::mt19937_64& rng);

/// Tensor of `factors` evaluation modules with random shifts: vector
/// modules, mixed with random typical Kac modules when σ is 01 or 10.
YangianRep random_eval_tensor(std::mt19937_64& rng, const ParitySeq& sigma, std::size_t factors,
                              std::size_t max_dim = kDefaultMaxDim);

/// Tensor of p typical Kac modules over σ ∈ {01, 10} whose weight pairs
/// (α_r, β_r) satisfy α_r ≠ β_r; with probability 1/2 a root of λ₂ is copied
/// from another factor's λ₁ so that λ₁ and λ₂ share roots.
YangianRep random_kac_tensor(std::mt19937_64& rng, const ParitySeq& sigma, std::size_t p,
                             std::size_t max_dim = kDefaultMaxDim);

/// Tensor of Kac modules over σ = 01 with highest weight (∏(u+α_r), ∏(u+β_r)).
YangianRep kac_tensor_for(const std::vector<Rat>& alpha, const std::vector<Rat>& beta,
                          std::size_t max_dim = kDefaultMaxDim);

struct FamilyParams {
    Family family = Family::rtt;
    std::optional<ParitySeq> parity;   // family default when absent
    std::optional<std::size_t> level;  // level p, the number of tensor factors
    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::optional<std::size_t> order;  // Berezinian truncation, default 2p+2
    std::size_t max_dim = kDefaultMaxDim;
};

struct InstanceOutcome {
    std::size_t index = 0;
    bool passed = false;
    std::string parity;
    std::size_t level = 0;
    std::size_t dim = 0;
    std::string weight;
    std::vector<CheckResult> checks{};
};

struct FamilyRun {
    std::vector<InstanceOutcome> instances;
    std::size_t passed = 0;
};

/// Throws InputError for parameters outside the family's hypotheses and
/// DimensionCapExceeded when an instance would exceed max_dim.
FamilyRun run_family(const FamilyParams& params);

}  // namespace yhw
