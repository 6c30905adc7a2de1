#include "yhw/hw/weight.hpp"

#include <algorithm>

#include "yhw/errors.hpp"

namespace yhw {

ParitySeq::ParitySeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw InputError("parity sequence must be nonempty");
    for (auto b : bits_)
        if (b > 1) throw InputError("parity sequence entries must be 0 or 1");
}

ParitySeq ParitySeq::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c != '0' && c != '1') throw InputError("parity sequence must be a string of '0'/'1'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return ParitySeq(std::move(bits));
}

ParitySeq ParitySeq::standard(std::size_t m, std::size_t n) {
    std::vector<std::uint8_t> bits(m, 0);
    bits.insert(bits.end(), n, 1);
    return ParitySeq(std::move(bits));
}

std::size_t ParitySeq::m() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 0)); }

bool ParitySeq::is_standard() const { return std::is_sorted(bits_.begin(), bits_.end()); }

bool ParitySeq::is_odd_position(std::size_t pos) const {
    return pos >= 1 && pos < bits_.size() && bits_[pos - 1] != bits_[pos];
}

ParitySeq ParitySeq::swapped(std::size_t pos) const {
    if (pos < 1 || pos >= bits_.size()) throw InputError("position out of range");
    auto bits = bits_;
    std::swap(bits[pos - 1], bits[pos]);
    return ParitySeq(std::move(bits));
}

std::string ParitySeq::str() const {
    std::string s;
    for (auto b : bits_) s += static_cast<char>('0' + b);
    return s;
}

HighestWeight::HighestWeight(std::size_t level, std::vector<MonicPoly> components)
    : level_(level), components_(std::move(components)) {
    for (std::size_t j = 0; j < components_.size(); ++j)
        if (components_[j].degree() != level_)
            throw InputError("weight component " + std::to_string(j + 1) + " has degree " +
                             std::to_string(components_[j].degree()) + ", expected level " + std::to_string(level_));
}

HighestWeight HighestWeight::from_roots(const std::vector<std::vector<Rat>>& roots) {
    if (roots.empty()) throw InputError("highest weight needs at least one component");
    std::vector<MonicPoly> comps;
    for (const auto& r : roots) comps.emplace_back(RootMultiset(r));
    const std::size_t level = comps.front().degree();
    return HighestWeight(level, std::move(comps));
}

HighestWeight HighestWeight::stabilized() const {
    std::vector<MonicPoly> comps;
    for (const auto& c : components_) comps.push_back(c * MonicPoly{Rat(0)});
    return HighestWeight(level_ + 1, std::move(comps));
}

HighestWeight operator*(const HighestWeight& a, const HighestWeight& b) {
    if (a.size() != b.size()) throw InputError("weights of different rank");
    std::vector<MonicPoly> comps;
    for (std::size_t j = 0; j < a.size(); ++j) comps.push_back(a[j] * b[j]);
    return HighestWeight(a.level_ + b.level_, std::move(comps));
}

std::string HighestWeight::str() const {
    std::string s = "(";
    for (std::size_t j = 0; j < components_.size(); ++j) {
        if (j) s += ", ";
        s += components_[j].str();
    }
    return s + ")";
}

}  // namespace yhw
