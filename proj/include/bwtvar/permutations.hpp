#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collection.hpp"
#include "decimal.hpp"
#include "error.hpp"
#include "transforms.hpp"

namespace bwtvar {

/// Bijection on {1..k}, stored 1-based: perm(i) for i in 1..k.
class Perm {
public:
    Perm() = default;

    explicit Perm(std::vector<std::size_t> mapping) : map_(std::move(mapping)) {
        std::vector<bool> seen(map_.size() + 1, false);
        for (auto v : map_) {
            if (v < 1 || v > map_.size() || seen[v]) throw ArgumentError("Perm: not a bijection on {1..k}");
            seen[v] = true;
        }
    }

    static Perm identity(std::size_t k) {
        std::vector<std::size_t> m(k);
        std::iota(m.begin(), m.end(), 1);
        return Perm(std::move(m));
    }

    /// Accepts "25134" (k <= 9) or comma-separated values.
    static Perm parse(std::string_view text) {
        std::vector<std::size_t> m;
        if (text.find(',') == std::string_view::npos) {
            for (char ch : text) {
                if (ch < '1' || ch > '9') throw ArgumentError("Perm: bad digit in '" + std::string(text) + "'");
                m.push_back(static_cast<std::size_t>(ch - '0'));
            }
        } else {
            std::size_t start = 0;
            while (start <= text.size()) {
                auto comma = text.find(',', start);
                auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
                if (tok.empty()) throw ArgumentError("Perm: empty entry");
                m.push_back(std::stoul(std::string(tok)));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
        }
        return Perm(std::move(m));
    }

    std::size_t size() const noexcept { return map_.size(); }
    std::size_t operator()(std::size_t i) const { return map_.at(i - 1); }
    const std::vector<std::size_t>& values() const noexcept { return map_; }

    Perm inverse() const {
        std::vector<std::size_t> inv(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i] - 1] = i + 1;
        return Perm(std::move(inv));
    }

    /// One-line notation; comma-separated once values need two digits.
    std::string to_string() const {
        std::string out;
        const bool commas = map_.size() > 9;
        for (std::size_t i = 0; i < map_.size(); ++i) {
            if (commas && i > 0) out += ',';
            out += std::to_string(map_[i]);
        }
        return out;
    }

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<std::size_t> map_;
};

/// rho(i) = lexicographic rank of the i-th input string (stable for duplicates).
inline Perm input_rank_permutation(const Collection& c) {
    auto order = lex_order(c);
    std::vector<std::size_t> rho(c.k());
    for (std::size_t r = 0; r < order.size(); ++r) rho[order[r]] = r + 1;
    return Perm(std::move(rho));
}

/// gamma(p) = lexicographic rank of the p-th string in colexicographic order.
inline Perm gamma(const Collection& c) {
    auto rho = input_rank_permutation(c);
    auto colex = colex_order(c);
    std::vector<std::size_t> g(c.k());
    for (std::size_t p = 0; p < colex.size(); ++p) g[p] = rho(colex[p] + 1);
    return Perm(std::move(g));
}

/// Maps every value to the value following it in rho, the last one to the first.
inline Perm linking_permutation(const Perm& rho) {
    const auto k = rho.size();
    if (k == 0) throw ArgumentError("linking_permutation: empty permutation");
    std::vector<std::size_t> phi(k);
    for (std::size_t p = 1; p < k; ++p) phi[rho(p) - 1] = rho(p + 1);
    phi[rho(k) - 1] = rho(1);
    return Perm(std::move(phi));
}

/// Separator order of concBWT, in lexicographic ranks, for input order rho.
/// The final '#' puts the last string's separator first; every other
/// separator is ranked by the string that follows it.
inline Perm pi_conc(const Perm& rho) {
    const auto k = rho.size();
    if (k < 2) throw ArgumentError("pi_conc: needs k >= 2");
    auto phi = linking_permutation(rho);
    const auto j = rho(1);
    auto f = [j](std::size_t i) { return i < j ? i : i - 1; };
    std::vector<std::size_t> pi(k);
    pi[0] = rho(k);
    for (std::size_t i = 1; i <= k; ++i) {
        if (i == rho(k)) continue;
        pi[f(phi(i)) + 1 - 1] = i;
    }
    return Perm(std::move(pi));
}

struct PermutationProfile {
    Perm rho;
    Perm pi_de;
    Perm pi_md;
    Perm pi_conc;
    Perm gamma;
};

inline PermutationProfile permutation_profile(const Collection& c) {
    auto rho = input_rank_permutation(c);
    auto conc = c.k() >= 2 ? pi_conc(rho) : Perm::identity(c.k());
    return {rho, rho.inverse(), rho, conc, gamma(c)};
}

struct FeasibleCount {
    std::size_t k = 0;
    std::uint64_t feasible = 0;
    std::uint64_t total = 0;
    std::string percentage() const { return format_percentage(static_cast<std::int64_t>(feasible), static_cast<std::int64_t>(total)); }
};

namespace detail {

inline std::uint64_t factorial(std::size_t k) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
}

/// Lehmer rank of a 1-based permutation in [0, k!).
inline std::uint64_t lehmer_rank(const std::vector<std::size_t>& p) {
    const auto k = p.size();
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t smaller = 0;
        for (std::size_t j = i + 1; j < k; ++j) smaller += p[j] < p[i];
        rank = rank * (k - i) + smaller;
    }
    return rank;
}

}  // namespace detail

/// Size of the image of rho -> pi_conc(rho) over all k! input orders.
inline FeasibleCount enumerate_feasible(std::size_t k, std::size_t cap = 10) {
    if (k < 2) throw ArgumentError("enumerate_feasible: needs k >= 2");
    if (k > cap) throw ArgumentError("enumerate_feasible: k = " + std::to_string(k) + " exceeds the cap of " + std::to_string(cap));
    const auto total = detail::factorial(k);
    std::vector<bool> hit(total, false);
    std::vector<std::size_t> rho(k);
    std::iota(rho.begin(), rho.end(), 1);
    std::uint64_t count = 0;
    do {
        auto pi = pi_conc(Perm(rho));
        auto r = detail::lehmer_rank(pi.values());
        if (!hit[r]) {
            hit[r] = true;
            ++count;
        }
    } while (std::next_permutation(rho.begin(), rho.end()));
    return {k, count, total};
}

/// Reconstructs an input order rho with pi_conc(rho) == pi, trying every
/// value for rho(1). Returns the lexicographically least witness.
inline std::optional<Perm> is_feasible(const Perm& pi) {
    const auto k = pi.size();
    if (k < 2) throw ArgumentError("is_feasible: needs k >= 2");
    std::optional<Perm> best;
    for (std::size_t first = 1; first <= k; ++first) {
        if (first == pi(1)) continue;
        // successor of the string ranked pi(m+1) is the m-th smallest rank other than `first`
        std::vector<std::size_t> succ(k + 1, 0);
        std::size_t m = 0;
        for (std::size_t v = 1; v <= k; ++v) {
            if (v == first) continue;
            succ[pi(m + 2)] = v;
            ++m;
        }
        std::vector<std::size_t> rho{first};
        std::vector<bool> used(k + 1, false);
        used[first] = true;
        bool ok = true;
        while (rho.size() < k) {
            auto cur = rho.back();
            if (cur == pi(1)) {
                ok = false;
                break;
            }
            auto nxt = succ[cur];
            if (nxt == 0 || used[nxt]) {
                ok = false;
                break;
            }
            used[nxt] = true;
            rho.push_back(nxt);
        }
        if (!ok || rho.back() != pi(1)) continue;
        Perm witness(std::move(rho));
        if (!best || witness.values() < best->values()) best = std::move(witness);
    }
    return best;
}

}  // namespace bwtvar
