#include <gtest/gtest.h>

#include "support.hpp"

using namespace bwtvar;
using namespace testing_support;

TEST(SplitMix64, ReferenceSequence) {
    // Reference outputs of SplitMix64 for seed 0.
    SplitMix64 r(0);
    EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(r.next(), 0x06C45D188009454FULL);
    EXPECT_THROW(r.uniform(0), ArgumentError);
}

TEST(Synth, Deterministic) {
    GenSpec g;
    g.seed = 99;
    g.mutation_rate = 0.1;
    g.suffix_bias = 0.5;
    g.min_length = 5;
    g.max_length = 30;
    g.ancestor_length = 60;
    auto a = generate(g);
    auto b = generate(g);
    EXPECT_EQ(a, b);
    g.seed = 100;
    EXPECT_NE(generate(g), a);
}

TEST(Synth, ShapeAndIds) {
    GenSpec g;
    g.k = 7;
    g.min_length = 3;
    g.max_length = 9;
    g.alphabet = "GT";
    auto c = generate(g);
    ASSERT_EQ(c.k(), 7u);
    EXPECT_EQ(c[0].id, "synth_1");
    EXPECT_EQ(c[6].id, "synth_7");
    for (const auto& s : c.sequences()) {
        EXPECT_GE(s.size(), 3u);
        EXPECT_LE(s.size(), 9u);
        EXPECT_EQ(s.find_first_not_of("GT"), std::string::npos);
    }
}

TEST(Synth, NoMutationFullWindowGivesCopies) {
    GenSpec g;
    g.k = 5;
    auto c = generate(g);
    for (std::size_t i = 1; i < c.k(); ++i) EXPECT_EQ(c.seq(i), c.seq(0));
}

TEST(Synth, ValidationMessages) {
    GenSpec g;
    g.k = 0;
    g.min_length = 5;
    g.max_length = 4;
    g.alphabet = "AA$";
    g.mutation_rate = 1.5;
    auto errs = validate(g);
    EXPECT_GE(errs.size(), 5u);
    EXPECT_THROW(generate(g), ArgumentError);

    GenSpec one;
    one.alphabet = "A";
    one.mutation_rate = 0.2;
    EXPECT_EQ(validate(one).size(), 1u);
    GenSpec anc;
    anc.ancestor_length = 5;
    EXPECT_EQ(validate(anc).size(), 1u);
    EXPECT_TRUE(validate(GenSpec{}).empty());
}

TEST(SynthProperty, OutputIsValidCollection) {
    for (const auto& c : synth_corpus(300, 21)) EXPECT_TRUE(validate(c).empty());
}

TEST(SynthProperty, SuffixBiasRaisesIntervalFraction) {
    std::size_t higher = 0, seeds = 30;
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
        GenSpec g;
        g.seed = seed;
        g.k = 40;
        g.min_length = 20;
        g.max_length = 40;
        g.ancestor_length = 400;
        g.mutation_rate = 0.05;
        auto plain = interesting_intervals(generate(g)).total_length;
        g.suffix_bias = 0.8;
        g.suffix_mean_length = 10;
        auto biased = interesting_intervals(generate(g)).total_length;
        if (biased > plain) ++higher;
    }
    EXPECT_GE(higher * 4, seeds * 3);
}
