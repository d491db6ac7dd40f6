#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "support.hpp"

using namespace bwtvar;
using namespace testing_support;

namespace {

Perm P(const char* s) { return Perm::parse(s); }

std::vector<std::size_t> iota1(std::size_t k) {
    std::vector<std::size_t> v(k);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

/// Distinct random strings of the given alphabet size.
Collection random_set(std::mt19937_64& rng, std::size_t k_max, std::size_t len_max, std::size_t sigma) {
    for (;;) {
        auto c = random_collection(rng, k_max, len_max, sigma);
        auto s = c.sequences();
        std::set<std::string> uniq(s.begin(), s.end());
        if (uniq.size() == s.size()) return c;
    }
}

}  // namespace

TEST(Perm, ParseFormatAndValidation) {
    EXPECT_EQ(P("25134").to_string(), "25134");
    EXPECT_EQ(Perm::parse("2,1,3").to_string(), "213");
    EXPECT_EQ(Perm::parse("10,1,2,3,4,5,6,7,8,9").to_string(), "10,1,2,3,4,5,6,7,8,9");
    EXPECT_THROW(P("113"), ArgumentError);
    EXPECT_THROW(P("124"), ArgumentError);
    EXPECT_THROW(P("1a"), ArgumentError);
    EXPECT_EQ(P("25134").inverse().to_string(), "31452");
    EXPECT_EQ(P("25134")(2), 5u);
}

TEST(InputRank, Examples) {
    EXPECT_EQ(input_rank_permutation(toy()).to_string(), "25134");
    EXPECT_EQ(input_rank_permutation(Collection::from_sequences({"A", "B", "C"})), Perm::identity(3));
    EXPECT_EQ(input_rank_permutation(Collection::from_sequences({"D", "C", "B", "A"})).to_string(), "4321");
    // equal strings are ranked by input position
    EXPECT_EQ(input_rank_permutation(Collection::from_sequences({"B", "A", "B"})).to_string(), "213");
}

TEST(LinkingPermutation, Examples) {
    EXPECT_EQ(linking_permutation(Perm::identity(3)).to_string(), "231");
    auto phi = linking_permutation(P("25134"));
    EXPECT_EQ(phi(2), 5u);
    EXPECT_EQ(phi(5), 1u);
    EXPECT_EQ(phi(1), 3u);
    EXPECT_EQ(phi(3), 4u);
    EXPECT_EQ(phi(4), 2u);
}

TEST(LinkingPermutation, IsSingleCycle) {
    auto v = iota1(6);
    do {
        auto phi = linking_permutation(Perm(v));
        std::size_t x = 1, len = 0;
        do {
            x = phi(x);
            ++len;
        } while (x != 1);
        EXPECT_EQ(len, 6u);
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST(PiConc, ThreeStringTable) {
    const std::map<std::string, std::string> table{{"123", "312"}, {"132", "231"}, {"312", "231"},
                                                   {"213", "321"}, {"231", "132"}, {"321", "123"}};
    for (const auto& [rho, pi] : table) EXPECT_EQ(pi_conc(P(rho.c_str())).to_string(), pi) << rho;
}

TEST(PiConc, Examples) {
    EXPECT_EQ(pi_conc(P("25134")).to_string(), "45132");
    EXPECT_EQ(pi_conc(P("54321")), Perm::identity(5));
    EXPECT_THROW(pi_conc(Perm::identity(1)), ArgumentError);
}

TEST(Gamma, Examples) {
    EXPECT_EQ(gamma(three_strings()).to_string(), "213");
    EXPECT_EQ(gamma(Collection::from_sequences({"AA", "CC", "GG"})), Perm::identity(3));
    EXPECT_EQ(gamma(toy()).to_string(), "34512");
}

TEST(Profile, Toy) {
    auto p = permutation_profile(toy());
    EXPECT_EQ(p.rho.to_string(), "25134");
    EXPECT_EQ(p.pi_md, p.rho);
    EXPECT_EQ(p.pi_de, p.rho.inverse());
    EXPECT_EQ(p.pi_conc.to_string(), "45132");
    EXPECT_EQ(p.gamma.to_string(), "34512");
}

TEST(Feasible, TableValues) {
    const std::vector<std::pair<std::uint64_t, std::string>> expected{
        {5, "83.33"}, {18, "75.0"}, {82, "68.33"}, {460, "63.89"}, {3030, "60.12"}, {23100, "57.29"}};
    for (std::size_t k = 3; k <= 8; ++k) {
        auto f = enumerate_feasible(k);
        EXPECT_EQ(f.feasible, expected[k - 3].first) << k;
        EXPECT_EQ(f.total, detail::factorial(k));
        EXPECT_EQ(f.percentage(), expected[k - 3].second) << k;
    }
    EXPECT_THROW(enumerate_feasible(11), ArgumentError);
    EXPECT_THROW(enumerate_feasible(1), ArgumentError);
}

TEST(Feasible, IsFeasibleExamples) {
    EXPECT_FALSE(is_feasible(P("213")).has_value());
    auto id = is_feasible(Perm::identity(5));
    ASSERT_TRUE(id.has_value());
    EXPECT_EQ(id->to_string(), "54321");
    auto w = is_feasible(P("312"));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->to_string(), "123");
}

TEST(Feasible, ColexOrderOfThreeStringsIsInfeasible) { EXPECT_FALSE(is_feasible(gamma(three_strings())).has_value()); }

TEST(Feasible, LehmerRankIsBijective) {
    auto v = iota1(5);
    std::set<std::uint64_t> seen;
    do {
        auto r = detail::lehmer_rank(v);
        EXPECT_LT(r, 120u);
        seen.insert(r);
    } while (std::next_permutation(v.begin(), v.end()));
    EXPECT_EQ(seen.size(), 120u);
}

// ---------------------------------------------------------------------------

TEST(PermutationProperty, IsFeasibleAgreesWithImageEnumeration) {
    for (std::size_t k = 2; k <= 6; ++k) {
        std::map<std::vector<std::size_t>, std::vector<std::size_t>> least_preimage;
        auto rho = iota1(k);
        do {
            auto pi = pi_conc(Perm(rho)).values();
            if (!least_preimage.count(pi)) least_preimage[pi] = rho;  // next_permutation is increasing
        } while (std::next_permutation(rho.begin(), rho.end()));
        EXPECT_EQ(least_preimage.size(), enumerate_feasible(k).feasible);
        auto pi = iota1(k);
        do {
            auto w = is_feasible(Perm(pi));
            auto it = least_preimage.find(pi);
            ASSERT_EQ(w.has_value(), it != least_preimage.end());
            if (w) {
                EXPECT_EQ(w->values(), it->second);
            }
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
}

TEST(PermutationProperty, PiConcStartsWithLastRank) {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 500; ++iter) {
        auto v = iota1(2 + iter % 9);
        std::shuffle(v.begin(), v.end(), rng);
        Perm rho(v);
        auto pi = pi_conc(rho);
        EXPECT_EQ(pi(1), rho(rho.size()));
        EXPECT_NE(pi, rho);
    }
}

TEST(PermutationProperty, DollarPrefixes) {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 300; ++iter) {
        auto c = random_set(rng, 7, 6, 4);
        if (c.k() < 2) continue;
        auto p = permutation_profile(c);
        auto sorted = c.sequences();
        std::sort(sorted.begin(), sorted.end());
        auto last_of_rank = [&](std::size_t r) { return sorted[r - 1].back(); };
        const auto k = c.k();
        std::string md, de, conc, colex;
        for (std::size_t q = 1; q <= k; ++q) {
            md.push_back(last_of_rank(p.pi_md(q)));
            de.push_back(c.seq(p.pi_de(q) - 1).back());
            conc.push_back(last_of_rank(p.pi_conc(q)));
            colex.push_back(last_of_rank(p.gamma(q)));
        }
        EXPECT_EQ(mdol_bwt(c).symbols.substr(0, k), md) << to_lines(c);
        EXPECT_EQ(dol_ebwt(c).symbols.substr(0, k), de) << to_lines(c);
        EXPECT_EQ(build(Variant::ConcBwt, c).symbols.substr(0, k), conc) << to_lines(c);
        EXPECT_EQ(colex_bwt(c).symbols.substr(0, k), colex) << to_lines(c);
    }
}
