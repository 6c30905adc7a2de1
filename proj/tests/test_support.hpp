#pragma once

// Seeded generators shared by the unit tests.

#include <random>
#include <vector>

#include "yhw/exact/poly.hpp"
#include "yhw/hw/reflection.hpp"

namespace yhw::testing {

inline Rat random_root(std::mt19937_64& rng) {
    static const std::vector<Rat> pool = [] {
        std::vector<Rat> v;
        for (int k = -5; k <= 5; ++k) v.emplace_back(k);
        for (int k : {-3, -1, 1, 3}) v.emplace_back(k, 2);
        return v;
    }();
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

inline MonicPoly random_poly(std::mt19937_64& rng, std::size_t degree) {
    std::vector<Rat> roots;
    for (std::size_t i = 0; i < degree; ++i) roots.push_back(random_root(rng));
    return MonicPoly(RootMultiset(std::move(roots)));
}

inline HighestWeight random_weight(std::mt19937_64& rng, std::size_t size, std::size_t level) {
    std::vector<MonicPoly> comps;
    for (std::size_t j = 0; j < size; ++j) comps.push_back(random_poly(rng, level));
    return HighestWeight(level, std::move(comps));
}

inline ParitySeq random_parity(std::mt19937_64& rng, std::size_t size) {
    std::vector<std::uint8_t> bits;
    for (std::size_t j = 0; j < size; ++j) bits.push_back(static_cast<std::uint8_t>(rng() % 2));
    return ParitySeq(std::move(bits));
}

/// A weight for the standard sequence 0^m 1^n satisfying the Drinfeld
/// conditions: built from p tuples whose even neighbours differ by
/// nonnegative integers (odd block in the negated-root frame).
inline HighestWeight standard_finite_weight(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t level) {
    std::vector<std::vector<Rat>> roots(m + n);
    for (std::size_t r = 0; r < level; ++r) {
        if (m > 0) {
            roots[m - 1].push_back(random_root(rng));
            for (std::size_t i = m - 1; i-- > 0;) roots[i].push_back(roots[i + 1].back() + Rat(static_cast<int>(rng() % 3)));
        }
        if (n > 0) {
            roots[m].push_back(random_root(rng));
            for (std::size_t i = m + 1; i < m + n; ++i) roots[i].push_back(roots[i - 1].back() + Rat(static_cast<int>(rng() % 3)));
        }
    }
    std::vector<MonicPoly> comps;
    for (auto& r : roots) comps.emplace_back(RootMultiset(r));
    return HighestWeight(level, std::move(comps));
}

/// Carries a standard-sequence weight to `target` by minus reflections along
/// the reversed chain; the result has the same verdict as the input.
inline HighestWeight transport_from_standard(const ParitySeq& target, HighestWeight weight) {
    const auto chain = chain_to_standard(target);
    ParitySeq sigma = ParitySeq::standard(target.m(), target.n());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        auto r = odd_reflect(sigma, weight, *it);
        sigma = r.parity;
        weight = r.weight;
    }
    return weight;
}

}  // namespace yhw::testing
