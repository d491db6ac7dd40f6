#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "decimal.hpp"
#include "error.hpp"
#include "transforms.hpp"

namespace bwtvar {

enum class DistanceKind { Hamming, Edit };

inline std::string_view distance_name(DistanceKind k) { return k == DistanceKind::Hamming ? "hamming" : "edit"; }

inline DistanceKind parse_distance_kind(std::string_view s) {
    if (s == "hamming") return DistanceKind::Hamming;
    if (s == "edit" || s == "levenshtein") return DistanceKind::Edit;
    throw ArgumentError("unknown distance '" + std::string(s) + "' (expected hamming or edit)");
}

inline std::size_t hamming(std::string_view a, std::string_view b) {
    if (a.size() != b.size())
        throw ArgumentError("hamming: lengths differ (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

/// Refuses inputs whose DP table would exceed this many cells.
inline constexpr std::uint64_t kEditCellLimit = 100'000'000;

/// Unit-cost Levenshtein distance, two-row table.
inline std::size_t edit_distance(std::string_view a, std::string_view b, std::uint64_t cell_limit = kEditCellLimit) {
    if (a.size() < b.size()) std::swap(a, b);
    if (static_cast<std::uint64_t>(a.size() + 1) * (b.size() + 1) > cell_limit)
        throw ArgumentError("edit_distance: " + std::to_string(a.size()) + " x " + std::to_string(b.size()) +
                            " table exceeds the cell limit");
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            auto sub = prev[j - 1] + (a[i - 1] != b[j - 1]);
            cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

inline std::size_t distance(DistanceKind kind, std::string_view a, std::string_view b) {
    return kind == DistanceKind::Hamming ? hamming(a, b) : edit_distance(a, b);
}

/// Pairwise distances; normalized entries divide by the longer length.
struct DistanceMatrix {
    DistanceKind kind = DistanceKind::Hamming;
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> absolute;
    std::vector<std::vector<Ratio>> normalized;

    /// Five-decimal rendering of a normalized entry.
    std::string normalized_text(std::size_t i, std::size_t j) const {
        return format_fixed(normalized[i][j].num, normalized[i][j].den, 5);
    }
};

inline Ratio normalized_distance(std::size_t d, std::size_t len_a, std::size_t len_b) {
    auto den = std::max(len_a, len_b);
    if (den == 0) return {0, 1};
    return {static_cast<std::int64_t>(d), static_cast<std::int64_t>(den)};
}

inline DistanceMatrix distance_matrix(const std::vector<Transform>& ts, DistanceKind kind) {
    DistanceMatrix m;
    m.kind = kind;
    const auto n = ts.size();
    m.absolute.assign(n, std::vector<std::size_t>(n, 0));
    m.normalized.assign(n, std::vector<Ratio>(n, Ratio{0, 1}));
    for (const auto& t : ts) m.labels.emplace_back(variant_name(t.variant));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto d = distance(kind, ts[i].symbols, ts[j].symbols);
            auto r = normalized_distance(d, ts[i].symbols.size(), ts[j].symbols.size());
            m.absolute[i][j] = m.absolute[j][i] = d;
            m.normalized[i][j] = m.normalized[j][i] = r;
        }
    }
    return m;
}

/// Square TSV: normalized values below the diagonal, absolute values above.
inline std::string format_distance_tsv(const DistanceMatrix& m) {
    std::ostringstream out;
    out << distance_name(m.kind);
    for (const auto& l : m.labels) out << '\t' << l;
    out << '\n';
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        out << m.labels[i];
        for (std::size_t j = 0; j < m.labels.size(); ++j) {
            out << '\t';
            if (i == j) {
                out << '-';
            } else if (i > j) {
                out << m.normalized_text(i, j);
            } else {
                out << m.absolute[i][j];
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace bwtvar
