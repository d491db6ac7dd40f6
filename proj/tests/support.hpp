#pragma once

// Shared helpers for the unit and acceptance tests: small fixed collections,
// hand-rolled random generators, and reference implementations written
// independently of the library code they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bwtvar/bwtvar.hpp"

namespace testing_support {

using bwtvar::Collection;

inline Collection toy() { return Collection::from_sequences({"ATATG", "TGA", "ACG", "ATCA", "GGA"}); }

inline Collection eight_strings() {
    return Collection::from_sequences({"AAAA", "AGCA", "GCAA", "GTCA", "CAAA", "CGCA", "TCAA", "TTCA"});
}

inline Collection three_strings() { return Collection::from_sequences({"GAA", "ACA", "TGA"}); }

// ---------------------------------------------------------------------------
// Generators

/// Uniform random collection over the first `sigma` letters of "ACGT".
inline Collection random_collection(std::mt19937_64& rng, std::size_t k_max, std::size_t len_max, std::size_t sigma) {
    static const std::string letters = "ACGT";
    std::uniform_int_distribution<std::size_t> kd(1, k_max), ld(1, len_max), sd(0, sigma - 1);
    std::vector<std::string> seqs(kd(rng));
    for (auto& s : seqs) {
        s.resize(ld(rng));
        for (auto& ch : s) ch = letters[sd(rng)];
    }
    return Collection::from_sequences(seqs);
}

/// Random collection biased toward shared suffixes: later strings often
/// reuse the tail of an earlier one, so interesting intervals are common.
inline Collection random_suffix_heavy(std::mt19937_64& rng, std::size_t k_max, std::size_t len_max, std::size_t sigma) {
    auto base = random_collection(rng, k_max, len_max, sigma).sequences();
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t i = 1; i < base.size(); ++i) {
        if (!coin(rng)) continue;
        const auto& other = base[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
        auto l = std::uniform_int_distribution<std::size_t>(1, std::min(base[i].size(), other.size()))(rng);
        base[i].replace(base[i].size() - l, l, other, other.size() - l, l);
    }
    return Collection::from_sequences(base);
}

/// Property corpus drawn from the synthetic generator: k <= 8, N <= 200,
/// alphabet size <= 4, a mix of mutation and suffix-sharing regimes.
inline std::vector<Collection> synth_corpus(std::size_t count, std::uint64_t seed0 = 1) {
    static const std::string alphabets[] = {"A", "AC", "ACG", "ACGT", "GT", "CGT"};
    std::vector<Collection> out;
    out.reserve(count);
    std::mt19937_64 pick(seed0);
    for (std::size_t i = 0; i < count; ++i) {
        bwtvar::GenSpec g;
        g.seed = seed0 * 1000003 + i;
        g.k = 1 + pick() % 8;
        const std::size_t cap = std::min<std::size_t>(24, 200 / g.k);
        g.max_length = 1 + pick() % cap;
        g.min_length = 1 + pick() % g.max_length;
        g.alphabet = alphabets[pick() % 6];
        g.mutation_rate = g.alphabet.size() > 1 ? static_cast<double>(pick() % 5) / 10.0 : 0.0;
        g.suffix_bias = static_cast<double>(pick() % 3) / 2.0;
        g.suffix_mean_length = 1.0 + static_cast<double>(pick() % 6);
        out.push_back(bwtvar::generate(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reference implementations

/// Run count by direct scan; every '$' is the same symbol.
inline std::size_t runs_by_scan(const std::string& s) {
    std::size_t r = 0;
    char prev = 0;
    bool first = true;
    for (char ch : s) {
        if (first || ch != prev) ++r;
        prev = ch;
        first = false;
    }
    return r;
}

/// Levenshtein distance by memoized recursion.
inline std::size_t edit_recursive(const std::string& a, const std::string& b) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
    auto go = [&](auto&& self, std::size_t i, std::size_t j) -> std::size_t {
        if (i == a.size()) return b.size() - j;
        if (j == b.size()) return a.size() - i;
        auto key = std::pair{i, j};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::size_t best = self(self, i + 1, j + 1) + (a[i] != b[j]);
        best = std::min(best, self(self, i + 1, j) + 1);
        best = std::min(best, self(self, i, j + 1) + 1);
        return memo[key] = best;
    };
    return go(go, 0, 0);
}

/// Compares the infinite powers by expanding both to a generous length, then
/// falls back to the exponent rule for equal roots.
inline int omega_by_expansion(const std::string& u, const std::string& v) {
    const auto len = 4 * (u.size() + v.size());
    std::string pu, pv;
    while (pu.size() < len) pu += u;
    while (pv.size() < len) pv += v;
    pu.resize(len);
    pv.resize(len);
    if (pu != pv) return pu < pv ? -1 : 1;
    if (u.size() == v.size()) return 0;
    return u.size() < v.size() ? -1 : 1;
}

/// Classic BWT: sort all rotations of s as std::string and read the last column.
inline std::string bwt_by_rotations(const std::string& s) {
    std::vector<std::string> rot;
    for (std::size_t i = 0; i < s.size(); ++i) rot.push_back(s.substr(i) + s.substr(0, i));
    std::sort(rot.begin(), rot.end());
    std::string out;
    for (const auto& r : rot) out.push_back(r.back());
    return out;
}

inline std::string reversed(std::string s) {
    std::reverse(s.begin(), s.end());
    return s;
}

/// Interesting intervals found without the suffix trie: for every suffix U
/// shared by at least two strings, collect the ranks of the rotations of the
/// explicit multidollar matrix that begin with U followed by a separator.
struct BruteInterval {
    std::size_t b, e;
    std::string suffix;
    std::map<unsigned char, std::size_t> parikh;
    bool operator==(const BruteInterval&) const = default;
};

inline std::vector<BruteInterval> brute_intervals(const Collection& c) {
    auto m = bwtvar::naive_rotation_sort(bwtvar::Variant::MdolBwt, c).matrix;
    std::set<std::string> suffixes;
    for (const auto& s : c.sequences()) {
        for (std::size_t l = 0; l <= s.size(); ++l) suffixes.insert(s.substr(s.size() - l));
    }
    std::vector<BruteInterval> out;
    for (const auto& u : suffixes) {
        std::vector<std::size_t> ranks;
        std::map<unsigned char, std::size_t> parikh;
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            const auto& rot = m.rows[r].rotation;
            if (rot.size() <= u.size()) continue;
            bool match = bwtvar::ext_is_sep(rot[u.size()]);
            for (std::size_t i = 0; match && i < u.size(); ++i) match = rot[i] == bwtvar::ext_byte(static_cast<unsigned char>(u[i]));
            if (!match) continue;
            ranks.push_back(r + 1);
            ++parikh[bwtvar::ext_to_byte(m.rows[r].last)];
        }
        if (ranks.size() < 2 || parikh.size() < 2) continue;
        out.push_back({ranks.front(), ranks.back(), u, parikh});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.b < y.b; });
    return out;
}

}  // namespace testing_support
