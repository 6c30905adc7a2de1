#include "yhw/rep/families.hpp"

#include <gtest/gtest.h>

#include "yhw/errors.hpp"

namespace yhw {
namespace {

FamilyRun run(Family f, std::optional<const char*> parity, std::optional<std::size_t> level, std::size_t count,
              std::uint64_t seed) {
    FamilyParams params;
    params.family = f;
    if (parity) params.parity = ParitySeq::parse(*parity);
    params.level = level;
    params.count = count;
    params.seed = seed;
    return run_family(params);
}

void expect_all_pass(const FamilyRun& r) {
    EXPECT_EQ(r.passed, r.instances.size());
    for (const auto& inst : r.instances)
        for (const auto& c : inst.checks) EXPECT_TRUE(c.passed) << inst.index << " " << inst.weight << " " << c.name << ": " << c.detail;
}

TEST(Families, RttSigma101TwoFactors) {
    const auto r = run(Family::rtt, "101", 2, 5, 1);
    EXPECT_EQ(r.instances.size(), 5u);
    expect_all_pass(r);
    EXPECT_EQ(r.instances[0].dim, 9u);
}

TEST(Families, KeyRelationsLevelTwo) { expect_all_pass(run(Family::prop42, std::nullopt, 2, 20, 7)); }

TEST(Families, KeyRelationsSigma10) { expect_all_pass(run(Family::prop42, "10", std::nullopt, 10, 3)); }

TEST(Families, ReflectionSigma101LevelTwo) { expect_all_pass(run(Family::reflection, "101", 2, 5, 11)); }

TEST(Families, ReflectionDefaults) { expect_all_pass(run(Family::reflection, std::nullopt, std::nullopt, 10, 13)); }

TEST(Families, Berezinian) { expect_all_pass(run(Family::berezinian, std::nullopt, std::nullopt, 8, 17)); }

TEST(Families, DeterministicPerSeed) {
    const auto a = run(Family::reflection, std::nullopt, std::nullopt, 4, 99);
    const auto b = run(Family::reflection, std::nullopt, std::nullopt, 4, 99);
    ASSERT_EQ(a.instances.size(), b.instances.size());
    for (std::size_t k = 0; k < a.instances.size(); ++k) {
        EXPECT_EQ(a.instances[k].weight, b.instances[k].weight);
        EXPECT_EQ(a.instances[k].parity, b.instances[k].parity);
    }
    // instance k does not depend on count
    const auto c = run(Family::reflection, std::nullopt, std::nullopt, 2, 99);
    EXPECT_EQ(c.instances[1].weight, a.instances[1].weight);
}

TEST(Families, RejectsBadParameters) {
    EXPECT_THROW(run(Family::prop42, "011", 1, 1, 0), InputError);
    EXPECT_THROW(run(Family::berezinian, "10", 1, 1, 0), InputError);
    EXPECT_THROW(run(Family::reflection, "000", 1, 1, 0), InputError);
    FamilyParams params;
    params.family = Family::rtt;
    params.parity = ParitySeq::parse("011");
    params.level = 3;
    params.max_dim = 10;
    EXPECT_THROW(run_family(params), DimensionCapExceeded);
}

TEST(Families, ParseNames) {
    EXPECT_EQ(parse_family("prop42"), Family::prop42);
    EXPECT_FALSE(parse_family("bogus"));
    EXPECT_STREQ(to_string(Family::berezinian), "berezinian");
}

}  // namespace
}  // namespace yhw
