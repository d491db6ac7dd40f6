#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "collection.hpp"
#include "error.hpp"
#include "ordering.hpp"
#include "suffix_sort.hpp"
#include "symbols.hpp"

namespace bwtvar {

enum class Variant { Ebwt, DolEbwt, MdolBwt, ConcBwt, ColexBwt, SingleBwt };

inline constexpr std::array<Variant, 5> kCollectionVariants{Variant::Ebwt, Variant::DolEbwt, Variant::MdolBwt,
                                                            Variant::ConcBwt, Variant::ColexBwt};
inline constexpr std::array<Variant, 4> kSeparatorVariants{Variant::DolEbwt, Variant::MdolBwt, Variant::ConcBwt,
                                                           Variant::ColexBwt};

constexpr bool is_separator_based(Variant v) noexcept {
    return v == Variant::DolEbwt || v == Variant::MdolBwt || v == Variant::ConcBwt || v == Variant::ColexBwt;
}

inline std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::Ebwt: return "eBWT";
        case Variant::DolEbwt: return "dolEBWT";
        case Variant::MdolBwt: return "mdolBWT";
        case Variant::ConcBwt: return "concBWT";
        case Variant::ColexBwt: return "colexBWT";
        case Variant::SingleBwt: return "BWT";
    }
    return "?";
}

/// Accepts the display names and the short CLI spellings (ebwt, dolebwt, mdol, conc, colex, single).
inline Variant parse_variant(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "ebwt") return Variant::Ebwt;
    if (s == "dolebwt" || s == "dole" || s == "dol") return Variant::DolEbwt;
    if (s == "mdolbwt" || s == "mdol") return Variant::MdolBwt;
    if (s == "concbwt" || s == "conc") return Variant::ConcBwt;
    if (s == "colexbwt" || s == "colex") return Variant::ColexBwt;
    if (s == "bwt" || s == "single") return Variant::SingleBwt;
    throw ArgumentError("unknown variant '" + std::string(name) + "'");
}

/// Output of one transform. `symbols` uses kSep/kTerm for the sentinels.
struct Transform {
    Variant variant = Variant::Ebwt;
    std::string symbols;
    std::size_t source_k = 0;
    std::size_t source_n = 0;
    bool normalized = false;  // only meaningful for concBWT

    std::size_t size() const noexcept { return symbols.size(); }
    std::string text() const { return render_symbols(symbols); }

    friend bool operator==(const Transform&, const Transform&) = default;
};

// ---------------------------------------------------------------------------
// Stable orders on a collection, as 0-based index lists.

/// Indices sorted lexicographically by sequence; equal strings keep input order.
inline std::vector<std::size_t> lex_order(const Collection& c) {
    std::vector<std::size_t> idx(c.k());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return lex_compare(c.seq(a), c.seq(b)) < 0; });
    return idx;
}

/// Indices sorted colexicographically; equal strings keep input order.
inline std::vector<std::size_t> colex_order(const Collection& c) {
    std::vector<std::size_t> idx(c.k());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return colex_compare(c.seq(a), c.seq(b)) < 0; });
    return idx;
}

// ---------------------------------------------------------------------------
// Generalized suffix array of T_1 $_1 ... T_k $_k

/// Suffix array of the multidollar text of a collection. Text positions are
/// mapped back to (string, offset) pairs; offset |T_i| is the separator.
struct MultidollarSuffixArray {
    std::vector<std::int64_t> order;             // text positions by rank, sentinel excluded
    std::vector<std::size_t> string_start;       // first text position of each string
    std::vector<std::uint32_t> text;             // encoded text incl. trailing 0

    std::pair<std::size_t, std::size_t> locate(std::int64_t pos) const {
        auto it = std::upper_bound(string_start.begin(), string_start.end(), static_cast<std::size_t>(pos));
        auto i = static_cast<std::size_t>(it - string_start.begin()) - 1;
        return {i, static_cast<std::size_t>(pos) - string_start[i]};
    }
};

inline MultidollarSuffixArray multidollar_suffix_array(const Collection& c) {
    const auto k = static_cast<std::uint32_t>(c.k());
    MultidollarSuffixArray out;
    out.text.reserve(c.total_length() + c.k() + 1);
    for (std::uint32_t i = 0; i < k; ++i) {
        out.string_start.push_back(out.text.size());
        for (unsigned char b : c.seq(i)) out.text.push_back(k + 1 + b);
        out.text.push_back(i + 1);
    }
    out.text.push_back(0);
    auto sa = suffix_array(out.text, k + 257);
    out.order.assign(sa.begin() + 1, sa.end());
    return out;
}

// ---------------------------------------------------------------------------
// Builders

/// mdolBWT: BWT of T_1 $_1 T_2 $_2 ... T_k $_k with $_1 < ... < $_k.
inline Transform mdol_bwt(const Collection& c) {
    require_valid(c);
    const auto k = static_cast<std::uint32_t>(c.k());
    auto gsa = multidollar_suffix_array(c);
    Transform t{Variant::MdolBwt, {}, c.k(), c.total_length(), false};
    t.symbols.reserve(gsa.order.size());
    for (auto p : gsa.order) {
        auto prev = p == 0 ? std::uint32_t{1} : gsa.text[static_cast<std::size_t>(p) - 1];
        t.symbols.push_back(prev <= k ? static_cast<char>(kSep) : static_cast<char>(prev - k - 1));
    }
    return t;
}

/// colexBWT: mdolBWT of the collection listed in colexicographic order.
inline Transform colex_bwt(const Collection& c) {
    require_valid(c);
    auto t = mdol_bwt(c.permuted(colex_order(c)));
    t.variant = Variant::ColexBwt;
    return t;
}

/// dolEBWT: eBWT of {T_i $}. The rotations starting with U$ are ordered by the
/// lexicographic order of their strings, so this is the multidollar BWT of the
/// lexicographically sorted collection.
inline Transform dol_ebwt(const Collection& c) {
    require_valid(c);
    auto t = mdol_bwt(c.permuted(lex_order(c)));
    t.variant = Variant::DolEbwt;
    return t;
}

/// concBWT, raw: BWT of T_1 $ T_2 $ ... T_k $ #, length N + k + 1.
inline Transform conc_bwt(const Collection& c) {
    require_valid(c);
    std::vector<std::uint32_t> text;
    text.reserve(c.total_length() + c.k() + 1);
    for (const auto& r : c.records()) {
        for (unsigned char b : r.seq) text.push_back(2u + b);
        text.push_back(1);
    }
    text.push_back(0);
    auto sa = suffix_array(text, 258);
    Transform t{Variant::ConcBwt, {}, c.k(), c.total_length(), false};
    t.symbols.reserve(text.size());
    for (auto p : sa) {
        auto prev = p == 0 ? text.back() : text[static_cast<std::size_t>(p) - 1];
        t.symbols.push_back(prev == 0 ? static_cast<char>(kTerm)
                            : prev == 1 ? static_cast<char>(kSep)
                                        : static_cast<char>(prev - 2));
    }
    return t;
}

/// Drops the leading separator (predecessor of the # rotation) and renames # to $.
inline Transform normalize_conc(const Transform& t) {
    if (t.variant != Variant::ConcBwt) throw ArgumentError("normalize_conc: not a concBWT transform");
    if (t.normalized) throw ArgumentError("normalize_conc: transform is already normalized");
    if (t.symbols.empty() || static_cast<unsigned char>(t.symbols.front()) != kSep)
        throw InputError("normalize_conc: raw concBWT must start with a separator");
    if (std::count(t.symbols.begin(), t.symbols.end(), static_cast<char>(kTerm)) != 1)
        throw InputError("normalize_conc: raw concBWT must contain exactly one terminator");
    Transform out = t;
    out.symbols.erase(out.symbols.begin());
    std::replace(out.symbols.begin(), out.symbols.end(), static_cast<char>(kTerm), static_cast<char>(kSep));
    out.normalized = true;
    return out;
}

namespace detail {

/// Ranks of all conjugates under the omega order by prefix doubling on the
/// infinite periodic strings. After the window reaches 2 * max length, equal
/// ranks mean equal infinite powers (same primitive root).
inline std::vector<std::pair<std::size_t, std::size_t>> omega_sorted_conjugates(const std::vector<std::string>& strs) {
    struct Item {
        std::uint32_t str;
        std::uint32_t off;
    };
    std::vector<std::size_t> base;
    std::size_t total = 0, max_len = 0;
    for (const auto& s : strs) {
        base.push_back(total);
        total += s.size();
        max_len = std::max(max_len, s.size());
    }
    std::vector<Item> items;
    items.reserve(total);
    std::vector<std::int64_t> rank(total);
    for (std::uint32_t i = 0; i < strs.size(); ++i) {
        for (std::uint32_t j = 0; j < strs[i].size(); ++j) {
            items.push_back({i, j});
            rank[base[i] + j] = static_cast<unsigned char>(strs[i][j]);
        }
    }
    auto rank_at = [&](const Item& it, std::size_t shift) {
        auto len = strs[it.str].size();
        return rank[base[it.str] + (it.off + shift) % len];
    };

    std::vector<std::int64_t> next(total);
    std::size_t h = 1;
    bool distinct = false;
    while (!distinct && h < 2 * max_len) {
        auto key = [&](const Item& it) { return std::pair{rank_at(it, 0), rank_at(it, h)}; };
        std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) { return key(a) < key(b); });
        std::int64_t r = 0;
        distinct = true;
        for (std::size_t x = 0; x < items.size(); ++x) {
            if (x > 0) {
                if (key(items[x - 1]) != key(items[x])) {
                    r = static_cast<std::int64_t>(x);
                } else {
                    distinct = false;
                }
            }
            next[base[items[x].str] + items[x].off] = r;
        }
        rank.swap(next);
        h *= 2;
    }
    // Equal infinite powers: shorter string (smaller exponent) first, then the
    // (string, offset) tie-break.
    std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
        return std::tuple{rank_at(a, 0), strs[a.str].size(), a.str, a.off} <
               std::tuple{rank_at(b, 0), strs[b.str].size(), b.str, b.off};
    });
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(items.size());
    for (const auto& it : items) out.emplace_back(it.str, it.off);
    return out;
}

}  // namespace detail

/// Extended BWT: last characters of all conjugates in omega order.
inline Transform ebwt(const Collection& c) {
    require_valid(c);
    auto strs = c.sequences();
    Transform t{Variant::Ebwt, {}, c.k(), c.total_length(), false};
    t.symbols.reserve(c.total_length());
    for (auto [i, j] : detail::omega_sorted_conjugates(strs)) {
        const auto& s = strs[i];
        t.symbols.push_back(s[(j + s.size() - 1) % s.size()]);
    }
    return t;
}

/// Classic BWT of a single string without end marker.
inline Transform single_bwt(const Collection& c) {
    require_valid(c);
    if (c.k() != 1) throw ArgumentError("single-string BWT needs exactly one sequence");
    auto t = ebwt(c);
    t.variant = Variant::SingleBwt;
    return t;
}

/// Builds variant `v`. concBWT is returned normalized; use conc_bwt for the raw form.
inline Transform build(Variant v, const Collection& c) {
    switch (v) {
        case Variant::Ebwt: return ebwt(c);
        case Variant::DolEbwt: return dol_ebwt(c);
        case Variant::MdolBwt: return mdol_bwt(c);
        case Variant::ConcBwt: return normalize_conc(conc_bwt(c));
        case Variant::ColexBwt: return colex_bwt(c);
        case Variant::SingleBwt: return single_bwt(c);
    }
    throw ArgumentError("build: unknown variant");
}

/// Parses a rendered transform ('$' = separator, '#' = terminator).
inline Transform parse_transform(std::string_view text, Variant v) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    Transform t;
    t.variant = v;
    t.symbols = parse_symbols(text);
    auto seps = static_cast<std::size_t>(std::count(t.symbols.begin(), t.symbols.end(), static_cast<char>(kSep)));
    auto terms = static_cast<std::size_t>(std::count(t.symbols.begin(), t.symbols.end(), static_cast<char>(kTerm)));
    if (v == Variant::ConcBwt) {
        if (terms > 1) throw InputError("a raw concBWT has exactly one terminator '#'");
        t.normalized = terms == 0;
        t.source_k = seps;
    } else {
        if (terms != 0) throw InputError("terminator '#' only occurs in a raw concBWT");
        t.source_k = is_separator_based(v) ? seps : 0;
    }
    if (!is_separator_based(v) && seps != 0) throw InputError("separator '$' in a transform without separators");
    t.source_n = t.symbols.size() - seps - terms;
    return t;
}

// ---------------------------------------------------------------------------
// Inversion

namespace detail {

/// Stable LF mapping: row of the rotation that starts with L[p].
inline std::vector<std::size_t> lf_mapping(std::string_view l) {
    std::array<std::size_t, 257> start{};
    for (unsigned char b : l) ++start[b + 1];
    for (std::size_t b = 0; b < 256; ++b) start[b + 1] += start[b];
    std::vector<std::size_t> lf(l.size());
    for (std::size_t p = 0; p < l.size(); ++p) lf[p] = start[static_cast<unsigned char>(l[p])]++;
    return lf;
}

}  // namespace detail

/// Recovers the strings of a separator-based transform by walking LF from each
/// separator row. The result is listed in the transform's separator order.
inline Collection invert_separator_based(const Transform& t) {
    if (!is_separator_based(t.variant)) throw ArgumentError("invert_separator_based: not a separator-based transform");
    Transform norm = t;
    if (t.variant == Variant::ConcBwt && !t.normalized) norm = normalize_conc(t);
    std::string_view l = norm.symbols;
    if (l.find(static_cast<char>(kTerm)) != std::string_view::npos) throw InputError("invert: unexpected terminator");
    auto k = static_cast<std::size_t>(std::count(l.begin(), l.end(), static_cast<char>(kSep)));
    if (k == 0) throw InputError("invert: transform contains no separator");
    auto lf = detail::lf_mapping(l);
    std::vector<bool> visited(l.size(), false);
    std::size_t visited_count = 0;
    std::vector<std::string> seqs;
    seqs.reserve(k);
    for (std::size_t row = 0; row < k; ++row) {
        std::string rev;
        std::size_t p = row;
        while (true) {
            if (visited[p]) throw InputError("invert: malformed transform (LF walk revisits a row)");
            visited[p] = true;
            ++visited_count;
            auto sym = static_cast<unsigned char>(l[p]);
            if (sym == kSep) break;
            rev.push_back(static_cast<char>(sym));
            p = lf[p];
        }
        if (rev.empty()) throw InputError("invert: malformed transform (empty string)");
        seqs.emplace_back(rev.rbegin(), rev.rend());
    }
    if (visited_count != l.size()) throw InputError("invert: malformed transform (rows outside every string)");
    return Collection::from_sequences(seqs);
}

/// Decomposes an eBWT into its LF cycles. Each cycle is one primitive string,
/// returned as its lexicographically least rotation; the list is sorted.
inline std::vector<std::string> invert_ebwt(const Transform& t) {
    if (t.variant != Variant::Ebwt && t.variant != Variant::SingleBwt)
        throw ArgumentError("invert_ebwt: not an eBWT transform");
    std::string_view l = t.symbols;
    auto lf = detail::lf_mapping(l);
    std::vector<bool> visited(l.size(), false);
    std::vector<std::string> out;
    for (std::size_t start = 0; start < l.size(); ++start) {
        if (visited[start]) continue;
        std::string rev;
        for (std::size_t p = start; !visited[p]; p = lf[p]) {
            visited[p] = true;
            rev.push_back(l[p]);
        }
        out.push_back(least_rotation(std::string(rev.rbegin(), rev.rend())));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bwtvar
