#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "yhw/exact/poly.hpp"

namespace yhw {

/// A 0/1 word of length m+n; the zeros are the even indices.
///
/// Element access is 0-based.  "Positions" that name an adjacent pair
/// (i, i+1) are 1-based everywhere in the public API, matching the usual
/// mathematical numbering: position 1 is the first pair.
class ParitySeq {
public:
    explicit ParitySeq(std::vector<std::uint8_t> bits);
    static ParitySeq parse(std::string_view text);
    static ParitySeq standard(std::size_t m, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    std::size_t m() const;
    std::size_t n() const { return size() - m(); }
    std::uint8_t operator[](std::size_t idx) const { return bits_[idx]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    bool is_standard() const;
    bool is_odd_position(std::size_t pos) const;
    /// Swaps the entries at 1-based positions pos and pos+1.
    ParitySeq swapped(std::size_t pos) const;

    std::string str() const;
    friend bool operator==(const ParitySeq&, const ParitySeq&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Level-p highest weight: m+n monic polynomials of degree exactly p,
/// λ_j(u) = (u + λ_j^(1))···(u + λ_j^(p)).  Components are 0-based.
class HighestWeight {
public:
    HighestWeight(std::size_t level, std::vector<MonicPoly> components);
    static HighestWeight from_roots(const std::vector<std::vector<Rat>>& roots);

    std::size_t level() const { return level_; }
    std::size_t size() const { return components_.size(); }
    const MonicPoly& operator[](std::size_t idx) const { return components_[idx]; }
    const std::vector<MonicPoly>& components() const { return components_; }

    /// Appends the root 0 to every component (p → p+1).
    HighestWeight stabilized() const;
    /// Component-wise product (weights of a tensor product multiply).
    friend HighestWeight operator*(const HighestWeight& a, const HighestWeight& b);

    std::string str() const;
    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

private:
    std::size_t level_;
    std::vector<MonicPoly> components_;
};

}  // namespace yhw
