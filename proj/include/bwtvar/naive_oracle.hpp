#pragma once

// Brute-force references. Everything here materializes rotations or
// enumerates permutations explicitly and is meant for small inputs; the
// efficient code paths are tested against these.

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "collection.hpp"
#include "error.hpp"
#include "ordering.hpp"
#include "symbols.hpp"
#include "transforms.hpp"

namespace bwtvar {

/// Identity of one rotation: 1-based string index and 1-based start offset.
/// For concBWT the whole concatenation is one string and string_index is 0.
struct RotationRef {
    std::size_t string_index = 0;
    std::size_t offset = 0;

    friend bool operator==(const RotationRef&, const RotationRef&) = default;
};

struct RotationRow {
    RotationRef ref;
    std::vector<ExtSymbol> rotation;
    ExtSymbol last = 0;
};

struct RotationMatrix {
    Variant variant = Variant::Ebwt;
    std::vector<RotationRow> rows;
};

struct NaiveResult {
    RotationMatrix matrix;
    Transform transform;
};

struct OracleLimits {
    std::size_t max_rotations = 4096;
};

namespace detail {

inline std::vector<ExtSymbol> to_ext(std::string_view s) {
    std::vector<ExtSymbol> out;
    out.reserve(s.size() + 1);
    for (unsigned char b : s) out.push_back(ext_byte(b));
    return out;
}

inline std::vector<ExtSymbol> rotate(const std::vector<ExtSymbol>& s, std::size_t start) {
    std::vector<ExtSymbol> out(s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
    out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(start));
    return out;
}

enum class RowOrder { Lex, Omega };

inline RotationMatrix sort_rotations(Variant v, const std::vector<std::vector<ExtSymbol>>& strings,
                                     std::size_t index_base, RowOrder order) {
    RotationMatrix m{v, {}};
    for (std::size_t i = 0; i < strings.size(); ++i) {
        const auto& s = strings[i];
        for (std::size_t j = 0; j < s.size(); ++j) {
            RotationRow row;
            row.ref = {i + index_base, j + 1};
            row.rotation = rotate(s, j);
            row.last = row.rotation.back();
            m.rows.push_back(std::move(row));
        }
    }
    std::stable_sort(m.rows.begin(), m.rows.end(), [&](const RotationRow& a, const RotationRow& b) {
        std::span<const ExtSymbol> x(a.rotation), y(b.rotation);
        auto c = order == RowOrder::Omega ? omega_compare(x, y) : lex_compare(x, y);
        if (c != 0) return c < 0;
        return std::pair{a.ref.string_index, a.ref.offset} < std::pair{b.ref.string_index, b.ref.offset};
    });
    return m;
}

}  // namespace detail

/// Sorts every rotation explicitly with the variant's comparator and reads
/// off the last column. concBWT is returned raw (with '#').
inline NaiveResult naive_rotation_sort(Variant v, const Collection& c, OracleLimits limits = {}) {
    require_valid(c);
    std::size_t rotations = c.total_length() + (v == Variant::Ebwt || v == Variant::SingleBwt ? 0 : c.k());
    if (v == Variant::ConcBwt) ++rotations;
    if (rotations > limits.max_rotations)
        throw ArgumentError("naive_rotation_sort: " + std::to_string(rotations) + " rotations exceed the limit of " +
                            std::to_string(limits.max_rotations));

    Collection source = c;
    if (v == Variant::ColexBwt) source = c.permuted(colex_order(c));

    std::vector<std::vector<ExtSymbol>> strings;
    RotationMatrix m;
    switch (v) {
        case Variant::SingleBwt:
            if (c.k() != 1) throw ArgumentError("single-string BWT needs exactly one sequence");
            [[fallthrough]];
        case Variant::Ebwt:
            for (const auto& r : source.records()) strings.push_back(detail::to_ext(r.seq));
            m = detail::sort_rotations(v, strings, 1,
                                       v == Variant::Ebwt ? detail::RowOrder::Omega : detail::RowOrder::Lex);
            break;
        case Variant::DolEbwt:
            for (const auto& r : source.records()) {
                strings.push_back(detail::to_ext(r.seq));
                strings.back().push_back(ext_sep(1));
            }
            m = detail::sort_rotations(v, strings, 1, detail::RowOrder::Omega);
            break;
        case Variant::MdolBwt:
        case Variant::ColexBwt:
            for (std::size_t i = 0; i < source.k(); ++i) {
                strings.push_back(detail::to_ext(source.seq(i)));
                strings.back().push_back(ext_sep(static_cast<std::uint32_t>(i + 1)));
            }
            m = detail::sort_rotations(v, strings, 1, detail::RowOrder::Lex);
            break;
        case Variant::ConcBwt: {
            std::vector<ExtSymbol> text;
            for (const auto& r : source.records()) {
                auto e = detail::to_ext(r.seq);
                text.insert(text.end(), e.begin(), e.end());
                text.push_back(ext_sep(1));
            }
            text.push_back(kExtTerm);
            strings.push_back(std::move(text));
            m = detail::sort_rotations(v, strings, 0, detail::RowOrder::Lex);
            break;
        }
    }

    Transform t{v, {}, c.k(), c.total_length(), false};
    t.symbols.reserve(m.rows.size());
    for (const auto& row : m.rows) t.symbols.push_back(static_cast<char>(ext_to_byte(row.last)));
    return {std::move(m), std::move(t)};
}

/// "index | last | rotation" rows; separators print as $_i for the
/// multidollar variants and as $ / # otherwise.
inline std::string format_matrix(const RotationMatrix& m) {
    const bool indexed = m.variant == Variant::MdolBwt || m.variant == Variant::ColexBwt;
    std::ostringstream out;
    out << "index\t" << variant_name(m.variant) << "\trotation\n";
    for (const auto& row : m.rows) {
        if (row.ref.string_index == 0) {
            out << row.ref.offset;
        } else {
            out << '(' << row.ref.string_index << ',' << row.ref.offset << ')';
        }
        out << '\t' << render_ext(row.last, indexed) << '\t';
        for (auto s : row.rotation) out << render_ext(s, indexed);
        out << '\n';
    }
    return out.str();
}

/// Number of maximal equal-symbol blocks (all separators count as one symbol).
inline std::size_t naive_run_count(std::string_view s) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 0 || s[i] != s[i - 1]) ++r;
    }
    return r;
}

struct BruteForceRuns {
    std::size_t min_runs = 0;
    std::vector<std::size_t> order;  // 0-based input order attaining the minimum
};

/// Minimum run count of the multidollar BWT over all k! input orders. The
/// lexicographically least minimizing order is returned.
inline BruteForceRuns brute_force_optimal_runs(const Collection& c, std::size_t max_k = 8) {
    require_valid(c);
    if (c.k() > max_k) throw ArgumentError("brute_force_optimal_runs: k exceeds " + std::to_string(max_k));
    std::vector<std::size_t> order(c.k());
    std::iota(order.begin(), order.end(), 0);
    BruteForceRuns best{std::numeric_limits<std::size_t>::max(), order};
    do {
        auto r = naive_run_count(mdol_bwt(c.permuted(order)).symbols);
        if (r < best.min_runs) best = {r, order};
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Minimum run count of the normalized concBWT over all k! input orders.
inline BruteForceRuns brute_force_conc_min_runs(const Collection& c, std::size_t max_k = 8) {
    require_valid(c);
    if (c.k() > max_k) throw ArgumentError("brute_force_conc_min_runs: k exceeds " + std::to_string(max_k));
    std::vector<std::size_t> order(c.k());
    std::iota(order.begin(), order.end(), 0);
    BruteForceRuns best{std::numeric_limits<std::size_t>::max(), order};
    do {
        auto r = naive_run_count(build(Variant::ConcBwt, c.permuted(order)).symbols);
        if (r < best.min_runs) best = {r, order};
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Maximum number of runs over all distinct arrangements of a symbol multiset.
inline std::size_t brute_force_interval_max_runs(const std::map<unsigned char, std::size_t>& parikh,
                                                 std::size_t max_total = 12) {
    std::string multiset;
    for (auto [sym, count] : parikh) multiset.append(count, static_cast<char>(sym));
    if (multiset.empty()) throw ArgumentError("brute_force_interval_max_runs: empty multiset");
    if (multiset.size() > max_total)
        throw ArgumentError("brute_force_interval_max_runs: total exceeds " + std::to_string(max_total));
    std::sort(multiset.begin(), multiset.end());
    std::size_t best = 0;
    do {
        best = std::max(best, naive_run_count(multiset));
    } while (std::next_permutation(multiset.begin(), multiset.end()));
    return best;
}

}  // namespace bwtvar
