#include "yhw/rep/verify.hpp"

#include <gtest/gtest.h>

#include "rep/rep_support.hpp"
#include "yhw/rep/highest.hpp"

namespace yhw {
namespace {

using testing::weight_of;

const CheckResult* find(const std::vector<CheckResult>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

TEST(KeyRelations, LevelOneDistinctRoots) {
    // λ = (u+α, u+β): ζ = T₂₁(−α)ξ with T₁₁ζ = (u+α−1)ζ, T₂₂ζ = (u+β−1)ζ
    const auto r = irreducible_quotient(testing::kac_tensor({Rat(3)}, {Rat(-1, 2)}));
    const auto rep = verify_key_relations(r);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.k, 1u);
    for (const char* name : {"anni", "idep", "divisibility", "zeta_nonzero", "too", "ttt", "tto", "veze"})
        EXPECT_TRUE(find(rep.checks, name) && find(rep.checks, name)->passed) << name;
    const auto low = lowering_vector(r, rep.weight, 1);
    EXPECT_EQ(low.zeta, r.T(1, 0).evaluate(Rat(-3)).apply(*r.xi()));
}

TEST(KeyRelations, EqualComponentsGiveXi) {
    const auto r = irreducible_quotient(testing::kac_tensor({Rat(2)}, {Rat(2)}));
    const auto rep = verify_key_relations(r);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.k, 0u);
    EXPECT_EQ(lowering_vector(r, rep.weight, 1).zeta, *r.xi());
    EXPECT_EQ(find(rep.checks, "veze"), nullptr);
}

TEST(KeyRelations, RandomKacTensors) {
    std::mt19937_64 rng(71);
    int partial = 0;
    for (int t = 0; t < 30; ++t) {
        const std::size_t p = 1 + t % 3;
        std::vector<Rat> alpha, beta;
        for (std::size_t r = 0; r < p; ++r) {
            alpha.push_back(testing::random_root(rng));
            do beta.push_back(testing::random_root(rng));
            while (beta.back() == alpha.back() && (beta.pop_back(), true));
        }
        if (p > 1 && rng() % 2) {
            beta[1] = alpha[0];
            if (beta[1] == alpha[1]) beta[1] += Rat(1, 3);
        }
        const auto r = irreducible_quotient(testing::kac_tensor(alpha, beta));
        const auto rep = verify_key_relations(r);
        partial += rep.k < p;
        EXPECT_TRUE(rep.ok) << rep.weight.str();
        for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    }
    EXPECT_GT(partial, 3);
}

TEST(KeyRelations, Sigma10ViaNegation) {
    const auto sigma = ParitySeq::parse("10");
    const auto r = irreducible_quotient(
        tensor_modules(build_kac_module(sigma, Rat(1), Rat(2), Rat(0)), build_kac_module(sigma, Rat(-1, 2), Rat(3), Rat(1))));
    const auto rep = verify_key_relations(r);
    EXPECT_TRUE(rep.via_negation);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.k, 2u);
}

TEST(KeyRelations, DetectsBrokenModule) {
    // Dropping the irreducible quotient leaves T₂₁ not divisible by γ when λ₁, λ₂ share a root.
    const auto r = cyclic_highest_module(build_kac_module(ParitySeq::parse("01"), Rat(2), Rat(-2), Rat(0), false)).module;
    const auto rep = verify_key_relations(r);
    EXPECT_FALSE(rep.ok);
    EXPECT_FALSE(find(rep.checks, "divisibility")->passed);
}

TEST(OddReflection, VectorModuleSigma01) {
    const auto r = build_vector_module(ParitySeq::parse("01"), Rat(0));
    const auto rep = verify_odd_reflection(r, 1);
    ASSERT_TRUE(rep.ok);
    EXPECT_EQ(rep.reflected_parity.str(), "10");
    EXPECT_EQ(rep.expected, weight_of({{-1}, {0}}));
    EXPECT_EQ(*rep.observed, rep.expected);
}

TEST(OddReflection, EqualComponentsUnchanged) {
    const auto r = irreducible_quotient(testing::kac_tensor({Rat(1), Rat(4)}, {Rat(1), Rat(4)}));
    const auto rep = verify_odd_reflection(r, 1);
    ASSERT_TRUE(rep.ok);
    EXPECT_EQ(rep.k, 0u);
    EXPECT_EQ(*rep.observed, rep.weight);
}

TEST(OddReflection, Sigma101TensorOfVectors) {
    for (const auto& shifts : std::vector<std::vector<Rat>>{{Rat(0)}, {Rat(0), Rat(5, 2)}, {Rat(1), Rat(-1)}, {Rat(2), Rat(1)}}) {
        const auto r = irreducible_quotient(testing::vector_tensor(ParitySeq::parse("101"), shifts));
        for (std::size_t pos : {1u, 2u}) {
            const auto rep = verify_odd_reflection(r, pos);
            EXPECT_TRUE(rep.ok) << pos;
            for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
            ASSERT_TRUE(rep.reflected);
            const auto back = verify_odd_reflection(*rep.reflected, pos);
            EXPECT_TRUE(back.ok);
            EXPECT_EQ(back.reflected_parity, r.parity_seq());
            EXPECT_EQ(*back.observed, rep.weight);
        }
    }
}

TEST(Berezinian, KacModuleIsCentralAndScalar) {
    const auto r = build_kac_module(ParitySeq::parse("01"), Rat(1), Rat(0), Rat(0));
    const auto b = berezinian_action(r, 4);
    EXPECT_TRUE(b.central);
    EXPECT_TRUE(b.scalar_match);
    EXPECT_EQ(b.b_coeffs.size(), 5u);
}

TEST(Berezinian, NaiveRatioIsNotCentral) {
    const auto r = build_kac_module(ParitySeq::parse("01"), Rat(1), Rat(0), Rat(0));
    const auto b = berezinian_action(r, 4, BerezinianVariant::naive_ratio);
    EXPECT_FALSE(b.central);
}

TEST(Berezinian, ScalarSeriesOfOneDimensionalWeight) {
    // (1 + b u⁻¹)/(1 + a u⁻¹) = 1 + Σ_{k≥1} (b − a)(−a)^{k−1} u^{−k}
    const Rat a(3), b(-1, 2);
    const auto s = expand_series(reduce_ratio(MonicPoly{b}, MonicPoly{a}), 6);
    Rat pw(1);
    EXPECT_EQ(s[0], Rat(1));
    for (std::size_t k = 1; k <= 6; ++k) {
        EXPECT_EQ(s[k], (b - a) * pw);
        pw *= -a;
    }
    const auto r = build_kac_module(ParitySeq::parse("01"), a, -a, Rat(0));
    const auto rep = berezinian_action(r, 6);
    EXPECT_TRUE(rep.central);
    EXPECT_TRUE(rep.scalar_match);
    EXPECT_EQ(rep.scalar_series, TruncatedSeries::one(6));
}

TEST(Berezinian, RandomTensors) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 10; ++t) {
        const std::size_t p = 1 + t % 3;
        std::vector<Rat> alpha, beta;
        for (std::size_t r = 0; r < p; ++r) {
            alpha.push_back(testing::random_root(rng));
            beta.push_back(testing::random_root(rng));
        }
        const auto r = testing::kac_tensor(alpha, beta);
        const auto rep = berezinian_action(r, default_order(p));
        EXPECT_TRUE(rep.central);
        EXPECT_TRUE(rep.scalar_match);
    }
}

}  // namespace
}  // namespace yhw
