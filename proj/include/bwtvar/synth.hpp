#pragma once

// Deterministic synthetic collections.
//
// Generator: SplitMix64.
//   next():        state += 0x9E3779B97F4A7C15;
//                  z = state;
//                  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//                  z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
//                  return z ^ (z >> 31);
//   uniform(n):    next() % n
//   bernoulli(p):  (next() >> 11) * 2^-53 < p
//   split():       a new generator seeded with next()
//
// Collection, drawing from one generator seeded with `seed`:
//   1. ancestor: ancestor_length symbols (max_length when 0), each
//      alphabet[uniform(|alphabet|)].
//   2. per read i, using the generator r_i = split() taken in order:
//      len    = min_length + r_i.uniform(max_length - min_length + 1)
//      start  = r_i.uniform(|ancestor| - len + 1)
//      read   = ancestor[start, start + len)
//      for each position: if r_i.bernoulli(mutation_rate), replace the symbol
//      by alphabet[(idx + 1 + r_i.uniform(|alphabet| - 1)) % |alphabet|]
//      where idx is the current symbol's index (always a different symbol).
//      if i > 0 and r_i.bernoulli(suffix_bias):
//        j = r_i.uniform(i); L = 1; while L < cap and !r_i.bernoulli(1 / suffix_mean_length): ++L
//        with cap = min(len, |read_j|); the last L symbols of read i become
//        the last L symbols of read j.
//   3. record ids are "synth_<i>" with i starting at 1.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "collection.hpp"
#include "error.hpp"
#include "symbols.hpp"

namespace bwtvar {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t uniform(std::uint64_t n) {
        if (n == 0) throw ArgumentError("SplitMix64::uniform: empty range");
        return next() % n;
    }

    bool bernoulli(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

struct GenSpec {
    std::uint64_t seed = 1;
    std::size_t k = 10;
    std::size_t min_length = 20;
    std::size_t max_length = 20;
    std::string alphabet = "ACGT";
    double mutation_rate = 0.0;
    double suffix_bias = 0.0;
    double suffix_mean_length = 8.0;
    std::size_t ancestor_length = 0;  // 0: max_length
};

/// Human-readable problems with the settings; empty when they are usable.
inline std::vector<std::string> validate(const GenSpec& g) {
    std::vector<std::string> errs;
    if (g.k == 0) errs.emplace_back("k must be at least 1");
    if (g.min_length == 0) errs.emplace_back("min_length must be at least 1");
    if (g.min_length > g.max_length) errs.emplace_back("min_length exceeds max_length");
    if (g.alphabet.empty()) errs.emplace_back("alphabet is empty");
    std::string sorted = g.alphabet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) errs.emplace_back("alphabet repeats a symbol");
    for (unsigned char b : g.alphabet) {
        if (is_reserved_byte(b)) errs.push_back("alphabet contains reserved byte " + symbol_label(b));
    }
    if (!(g.mutation_rate >= 0.0 && g.mutation_rate <= 1.0)) errs.emplace_back("mutation_rate must lie in [0,1]");
    if (!(g.suffix_bias >= 0.0 && g.suffix_bias <= 1.0)) errs.emplace_back("suffix_bias must lie in [0,1]");
    if (!(g.suffix_mean_length >= 1.0)) errs.emplace_back("suffix_mean_length must be at least 1");
    if (g.mutation_rate > 0.0 && g.alphabet.size() < 2) errs.emplace_back("mutation needs at least two symbols");
    if (g.ancestor_length != 0 && g.ancestor_length < g.max_length) errs.emplace_back("ancestor_length is shorter than max_length");
    return errs;
}

inline Collection generate(const GenSpec& g) {
    if (auto errs = validate(g); !errs.empty()) {
        std::string msg = "invalid generator settings:";
        for (const auto& e : errs) msg += " " + e + ";";
        msg.pop_back();
        throw ArgumentError(msg);
    }
    SplitMix64 rng(g.seed);
    const auto sigma = g.alphabet.size();
    const auto anc_len = g.ancestor_length == 0 ? g.max_length : g.ancestor_length;
    std::string ancestor(anc_len, '\0');
    for (auto& ch : ancestor) ch = g.alphabet[rng.uniform(sigma)];

    std::vector<SeqRecord> records;
    records.reserve(g.k);
    for (std::size_t i = 0; i < g.k; ++i) {
        auto r = rng.split();
        auto len = g.min_length + r.uniform(g.max_length - g.min_length + 1);
        auto start = r.uniform(anc_len - len + 1);
        std::string read = ancestor.substr(start, len);
        for (auto& ch : read) {
            if (!r.bernoulli(g.mutation_rate)) continue;
            auto idx = g.alphabet.find(ch);
            ch = g.alphabet[(idx + 1 + r.uniform(sigma - 1)) % sigma];
        }
        if (i > 0 && r.bernoulli(g.suffix_bias)) {
            auto j = r.uniform(i);
            const auto& other = records[j].seq;
            auto cap = std::min(read.size(), other.size());
            std::size_t l = 1;
            while (l < cap && !r.bernoulli(1.0 / g.suffix_mean_length)) ++l;
            read.replace(read.size() - l, l, other, other.size() - l, l);
        }
        records.push_back({"synth_" + std::to_string(i + 1), std::move(read)});
    }
    return Collection(std::move(records));
}

}  // namespace bwtvar
