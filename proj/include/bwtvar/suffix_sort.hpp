#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "error.hpp"

namespace bwtvar {

/// Suffix array by induced sorting (SA-IS). `text` must end with a unique
/// smallest symbol 0 and every symbol must be < alphabet_size.
inline std::vector<std::int64_t> suffix_array(std::span<const std::uint32_t> text, std::uint32_t alphabet_size) {
    const auto n = static_cast<std::int64_t>(text.size());
    if (n == 0) throw ArgumentError("suffix_array: empty text");
    if (text.back() != 0) throw ArgumentError("suffix_array: text must end with sentinel 0");
    std::vector<std::int64_t> sa(static_cast<std::size_t>(n), -1);
    if (n == 1) {
        sa[0] = 0;
        return sa;
    }

    // stype[i]: suffix i is smaller than suffix i+1
    std::vector<bool> stype(static_cast<std::size_t>(n), false);
    stype[n - 1] = true;
    for (std::int64_t i = n - 2; i >= 0; --i) {
        stype[i] = text[i] < text[i + 1] || (text[i] == text[i + 1] && stype[i + 1]);
    }
    auto is_lms = [&](std::int64_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<std::int64_t> bucket_start(alphabet_size + 1, 0);
    for (auto c : text) {
        if (c >= alphabet_size) throw ArgumentError("suffix_array: symbol outside alphabet");
        ++bucket_start[c + 1];
    }
    for (std::uint32_t c = 0; c < alphabet_size; ++c) bucket_start[c + 1] += bucket_start[c];

    auto induce = [&](const std::vector<std::int64_t>& lms_sorted) {
        std::fill(sa.begin(), sa.end(), -1);
        std::vector<std::int64_t> tail(bucket_start.begin() + 1, bucket_start.end());
        for (auto it = lms_sorted.rbegin(); it != lms_sorted.rend(); ++it) sa[--tail[text[*it]]] = *it;

        std::vector<std::int64_t> head(bucket_start.begin(), bucket_start.end() - 1);
        for (std::int64_t r = 0; r < n; ++r) {
            auto j = sa[r] - 1;
            if (sa[r] > 0 && !stype[j]) sa[head[text[j]]++] = j;
        }
        tail.assign(bucket_start.begin() + 1, bucket_start.end());
        for (std::int64_t r = n - 1; r >= 0; --r) {
            auto j = sa[r] - 1;
            if (sa[r] > 0 && stype[j]) sa[--tail[text[j]]] = j;
        }
    };

    std::vector<std::int64_t> lms;
    for (std::int64_t i = 1; i < n; ++i) {
        if (is_lms(i)) lms.push_back(i);
    }
    induce(lms);

    // Name the LMS substrings in their induced order.
    std::vector<std::int64_t> name_of(static_cast<std::size_t>(n), -1);
    std::int64_t names = 0;
    std::int64_t prev = -1;
    auto same_lms_substring = [&](std::int64_t a, std::int64_t b) {
        for (std::int64_t d = 0;; ++d) {
            if (a + d >= n || b + d >= n) return false;
            if (text[a + d] != text[b + d] || stype[a + d] != stype[b + d]) return false;
            if (d > 0) {
                bool ea = is_lms(a + d), eb = is_lms(b + d);
                if (ea || eb) return ea && eb;
            }
        }
    };
    for (std::int64_t r = 0; r < n; ++r) {
        auto p = sa[r];
        if (!is_lms(p)) continue;
        if (prev < 0 || !same_lms_substring(prev, p)) ++names;
        name_of[p] = names - 1;
        prev = p;
    }

    std::vector<std::int64_t> lms_sorted;
    lms_sorted.reserve(lms.size());
    if (names == static_cast<std::int64_t>(lms.size())) {
        for (std::int64_t r = 0; r < n; ++r) {
            if (is_lms(sa[r])) lms_sorted.push_back(sa[r]);
        }
    } else {
        std::vector<std::uint32_t> reduced;
        reduced.reserve(lms.size());
        for (auto p : lms) reduced.push_back(static_cast<std::uint32_t>(name_of[p]));
        auto reduced_sa = suffix_array(reduced, static_cast<std::uint32_t>(names));
        for (auto r : reduced_sa) lms_sorted.push_back(lms[static_cast<std::size_t>(r)]);
    }
    induce(lms_sorted);
    return sa;
}

}  // namespace bwtvar
