#include "yhw/hw/reflection.hpp"

#include "yhw/errors.hpp"

namespace yhw {

CommonRootSplit partition_common_roots(const MonicPoly& a, const MonicPoly& b) {
    if (a.degree() != b.degree()) throw InputError("partition_common_roots: degree mismatch");
    CommonRootSplit split;
    split.shared = common(a.roots(), b.roots());
    split.a_distinct = minus(a.roots(), split.shared);
    split.b_distinct = minus(b.roots(), split.shared);
    split.k = split.a_distinct.size();
    return split;
}

Reflected odd_reflect(const ParitySeq& parity, const HighestWeight& weight, std::size_t pos) {
    if (weight.size() != parity.size()) throw InputError("weight and parity sequence have different lengths");
    if (pos < 1 || pos >= parity.size()) throw InputError("position out of range");
    if (!parity.is_odd_position(pos)) throw InputError("not an odd position");

    const std::size_t i = pos - 1;
    const auto split = partition_common_roots(weight[i], weight[i + 1]);
    const Direction dir = parity[i] == 1 ? Direction::plus : Direction::minus;
    const Rat shift(dir == Direction::plus ? 1 : -1);

    ReflectionStep step;
    step.index = pos;
    step.direction = dir;
    step.k = split.k;
    step.shared = split.shared;
    step.moved_i = split.b_distinct.shifted(shift);
    step.moved_i1 = split.a_distinct.shifted(shift);

    auto comps = weight.components();
    comps[i] = MonicPoly(merge(step.moved_i, split.shared));
    comps[i + 1] = MonicPoly(merge(step.moved_i1, split.shared));
    return Reflected{parity.swapped(pos), HighestWeight(weight.level(), std::move(comps)), std::move(step)};
}

std::vector<std::size_t> chain_to_standard(const ParitySeq& parity) {
    std::vector<std::size_t> chain;
    ParitySeq s = parity;
    for (;;) {
        std::size_t pos = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i - 1] == 1 && s[i] == 0) {
                pos = i;
                break;
            }
        }
        if (pos == 0) return chain;
        chain.push_back(pos);
        s = s.swapped(pos);
    }
}

}  // namespace yhw
