#include <gtest/gtest.h>

#include <random>

#include "matrix_fixtures.hpp"
#include "support.hpp"

using namespace bwtvar;
using namespace testing_support;

TEST(Runs, Examples) {
    EXPECT_EQ(rle_encode(std::string_view("nnbaaa")).r, 3u);
    EXPECT_EQ(rle_encode(std::string_view("A")).r, 1u);
    EXPECT_EQ(rle_encode(parse_symbols("AAAAAAAAACACACACACACAC$$GTGTGT$$AC$$GT$$")).r, 28u);
    EXPECT_EQ(rle_encode(parse_symbols("AAAAAAAAAAAACCCCAACCAC$$GGTTGT$$AC$$GT$$")).r, 18u);
    EXPECT_THROW(rle_encode(std::string_view("")), ArgumentError);
}

TEST(Runs, ToyVariants) {
    auto c = toy();
    EXPECT_EQ(count_runs(ebwt(c)).r, 11u);
    EXPECT_EQ(count_runs(dol_ebwt(c)).r, 14u);
    EXPECT_EQ(count_runs(mdol_bwt(c)).r, 17u);
    EXPECT_EQ(count_runs(build(Variant::ConcBwt, c)).r, 15u);
    EXPECT_EQ(count_runs(colex_bwt(c)).r, 14u);
    for (auto v : kCollectionVariants) {
        auto t = build(v, c);
        EXPECT_EQ(count_runs(t).r, runs_by_scan(t.text())) << variant_name(v);
    }
}

TEST(Runs, EightStringsColexAndMdol) {
    auto c = eight_strings();
    EXPECT_EQ(mdol_bwt(c).text(), "AAAAAAAAACACACACACACAC$$GTGTGT$$AC$$GT$$");
    EXPECT_EQ(colex_bwt(c).text(), "AAAAAAAAAAAACCCCAACCAC$$GGTTGT$$AC$$GT$$");
    EXPECT_EQ(count_runs(mdol_bwt(c)).r, 28u);
    EXPECT_EQ(count_runs(colex_bwt(c)).r, 18u);
}

TEST(Runs, ThreeStringsColex) { EXPECT_EQ(count_runs(colex_bwt(three_strings())).r, 7u); }

TEST(Rle, EncodeDecodeFormat) {
    auto s = rle_encode(std::string_view("AAAB"));
    ASSERT_EQ(s.rle.size(), 2u);
    EXPECT_EQ(s.rle[0], (bwtvar::Run{'A', 3}));
    EXPECT_EQ(s.rle[1], (bwtvar::Run{'B', 1}));
    EXPECT_EQ(s.mean_run_length(), "2.000");
    EXPECT_EQ(format_rle(s.rle), "A\t3\nB\t1\n");
    EXPECT_EQ(rle_decode(parse_rle("A\t3\nB\t1\n")), "AAAB");
    EXPECT_THROW(rle_decode({{'A', 0}}), InputError);
    EXPECT_THROW(rle_decode({{'A', 1}, {'A', 2}}), InputError);
    EXPECT_THROW(parse_rle("A 3\n"), InputError);
    EXPECT_THROW(parse_rle("A\tx\n"), InputError);
}

TEST(Rle, SeparatorGlyphRoundTrip) {
    auto t = mdol_bwt(toy());
    auto s = count_runs(t);
    EXPECT_EQ(s.mean_run_length(), "1.353");
    EXPECT_EQ(rle_decode(parse_rle(format_rle(s.rle))), t.symbols);
}

TEST(OptimalOrder, Toy) {
    auto c = toy();
    auto res = optimal_order(c);
    EXPECT_EQ(res.r_opt, 12u);
    EXPECT_EQ(res.permutation.to_string(), "25431");
    EXPECT_EQ(count_runs(mdol_bwt(c.permuted(res.order))).r, 12u);
    auto m = naive_rotation_sort(Variant::MdolBwt, c.permuted(res.order)).matrix;
    EXPECT_EQ(fixture_rows(m), kOptimumMatrix);
    ASSERT_EQ(res.arrangements.size(), 4u);
    EXPECT_EQ(res.arrangements[0].b, 1u);
    EXPECT_EQ(res.arrangements[0].e, 5u);
    EXPECT_EQ(render_symbols(res.arrangements[0].symbols), "AG");
}

TEST(OptimalOrder, BruteForceAgreesOnToy) {
    auto bf = brute_force_optimal_runs(toy());
    EXPECT_EQ(bf.min_runs, 12u);
}

TEST(OptimalOrder, NoIntervalsKeepsRunsFixed) {
    // identical strings share every suffix but never differ in what precedes it
    auto c = Collection::from_sequences({"GATTACA", "GATTACA", "GATTACA"});
    auto res = optimal_order(c);
    EXPECT_TRUE(res.arrangements.empty());
    EXPECT_EQ(res.r_opt, count_runs(mdol_bwt(c)).r);
}

TEST(OptimalOrder, SingleString) {
    auto c = Collection::from_sequences({"GATTACA"});
    EXPECT_EQ(optimal_order(c).r_opt, count_runs(mdol_bwt(c)).r);
    EXPECT_EQ(optimal_order(c).permutation.to_string(), "1");
}

TEST(ColexGap, Toy) {
    auto g = colex_gap(toy());
    EXPECT_EQ(g.runs_colex, 14u);
    EXPECT_EQ(g.r_opt, 12u);
    EXPECT_EQ(g.c_m, 4u);
    EXPECT_TRUE(g.bound_holds);
}

// ---------------------------------------------------------------------------

TEST(RunMetricsProperty, OptimalMatchesExhaustiveSearch) {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 250; ++iter) {
        auto c = iter % 2 ? random_suffix_heavy(rng, 6, 6, 3) : random_collection(rng, 6, 5, 2);
        auto res = optimal_order(c);
        auto bf = brute_force_optimal_runs(c);
        ASSERT_EQ(res.r_opt, bf.min_runs) << to_lines(c);
        EXPECT_EQ(count_runs(mdol_bwt(c.permuted(res.order))).r, res.r_opt) << to_lines(c);
    }
}

TEST(RunMetricsProperty, OptimumBelowSeparatorVariants) {
    for (const auto& c : synth_corpus(200, 5)) {
        auto r = optimal_order(c).r_opt;
        for (auto v : kSeparatorVariants) EXPECT_LE(r, count_runs(build(v, c)).r) << variant_name(v) << "\n" << to_lines(c);
        EXPECT_TRUE(colex_gap(c).bound_holds) << to_lines(c);
    }
}

TEST(RunMetricsProperty, ArrangementsCoverEachIntervalOnce) {
    for (const auto& c : synth_corpus(150, 9)) {
        auto res = optimal_order(c);
        auto iv = interesting_intervals(c);
        ASSERT_EQ(res.arrangements.size(), iv.count);
        auto t = mdol_bwt(c.permuted(res.order));
        for (std::size_t x = 0; x < iv.count; ++x) {
            const auto& a = res.arrangements[x];
            EXPECT_EQ(a.b, iv.intervals[x].b);
            EXPECT_EQ(a.e, iv.intervals[x].e);
            EXPECT_EQ(a.symbols.size(), iv.intervals[x].parikh.size());
            // the realized block has exactly one run per distinct symbol
            auto block = t.symbols.substr(a.b - 1, a.e - a.b + 1);
            EXPECT_EQ(runs_by_scan(block), a.symbols.size()) << to_lines(c);
            EXPECT_EQ(block.front(), a.symbols.front());
            EXPECT_EQ(block.back(), a.symbols.back());
        }
    }
}

TEST(RunMetricsProperty, ColexAgreesWithMdolOutsideIntervals) {
    // Reordering the input only permutes symbols inside interesting intervals.
    for (const auto& c : synth_corpus(200, 13)) {
        auto iv = interesting_intervals(c);
        auto colex = colex_bwt(c).symbols;
        auto mdol = mdol_bwt(c).symbols;
        std::vector<bool> inside(colex.size(), false);
        for (const auto& i : iv.intervals) {
            for (auto p = i.b; p <= i.e; ++p) inside[p - 1] = true;
        }
        for (std::size_t p = 0; p < colex.size(); ++p) {
            if (!inside[p]) {
                EXPECT_EQ(colex[p], mdol[p]) << to_lines(c);
            }
        }
    }
}
