#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace bwtvar {

/// T = root^exponent with root primitive.
template <typename Symbol>
struct RootDecomposition {
    std::vector<Symbol> root;
    std::size_t exponent = 1;
};

/// Smallest period of `s` via the failure function.
template <typename Symbol>
std::size_t smallest_period(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    if (n == 0) throw ArgumentError("smallest_period: empty input");
    std::vector<std::size_t> border(n + 1, 0);
    std::size_t b = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (b > 0 && s[i] != s[b]) b = border[b];
        if (s[i] == s[b]) ++b;
        border[i + 1] = b;
    }
    return n - border[n];
}

template <typename Symbol>
RootDecomposition<Symbol> primitive_root(std::span<const Symbol> s) {
    if (s.empty()) throw ArgumentError("primitive_root: empty input");
    std::size_t p = smallest_period(s);
    if (s.size() % p != 0) p = s.size();
    return {std::vector<Symbol>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p)), s.size() / p};
}

struct StringRoot {
    std::string root;
    std::size_t exponent = 1;
};

inline StringRoot primitive_root(std::string_view s) {
    auto d = primitive_root(std::span<const char>(s.data(), s.size()));
    return {std::string(d.root.begin(), d.root.end()), d.exponent};
}

/// Lexicographic order, a proper prefix being smaller.
template <typename Symbol>
std::strong_ordering lex_compare(std::span<const Symbol> u, std::span<const Symbol> v) {
    return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(), v.end());
}

inline std::strong_ordering lex_compare(std::string_view u, std::string_view v) {
    // byte order, not char signedness
    auto c = u.compare(v);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

/// Lexicographic order of the reversed strings.
template <typename Symbol>
std::strong_ordering colex_compare(std::span<const Symbol> u, std::span<const Symbol> v) {
    return std::lexicographical_compare_three_way(u.rbegin(), u.rend(), v.rbegin(), v.rend());
}

inline std::strong_ordering colex_compare(std::string_view u, std::string_view v) {
    auto to_u = [](char c) { return static_cast<unsigned char>(c); };
    auto ub = u.rbegin(), ue = u.rend();
    auto vb = v.rbegin(), ve = v.rend();
    for (; ub != ue && vb != ve; ++ub, ++vb) {
        if (auto c = to_u(*ub) <=> to_u(*vb); c != 0) return c;
    }
    return (ue - ub) <=> (ve - vb) == 0 ? std::strong_ordering::equal
           : ub == ue                   ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
}

/// Omega order: compare the infinite powers u^w and v^w; if they coincide the
/// strings share their primitive root and the smaller exponent (equivalently
/// the shorter string) comes first. Two periodic sequences with periods p and
/// q that agree on p + q symbols are identical, so the scan is finite.
template <typename Symbol, typename Less = std::less<Symbol>>
std::strong_ordering omega_compare(std::span<const Symbol> u, std::span<const Symbol> v, Less less = {}) {
    if (u.empty() || v.empty()) throw ArgumentError("omega_compare: empty input");
    const std::size_t window = u.size() + v.size();
    std::size_t iu = 0, iv = 0;
    for (std::size_t t = 0; t < window; ++t) {
        const auto& a = u[iu];
        const auto& b = v[iv];
        if (less(a, b)) return std::strong_ordering::less;
        if (less(b, a)) return std::strong_ordering::greater;
        if (++iu == u.size()) iu = 0;
        if (++iv == v.size()) iv = 0;
    }
    return u.size() <=> v.size();
}

inline std::strong_ordering omega_compare(std::string_view u, std::string_view v) {
    auto bytes = [](std::string_view s) {
        return std::span<const unsigned char>(reinterpret_cast<const unsigned char*>(s.data()), s.size());
    };
    return omega_compare(bytes(u), bytes(v));
}

/// Start offset of the lexicographically least rotation (two-pointer method).
template <typename Symbol>
std::size_t least_rotation(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    if (n <= 1) return 0;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const auto& a = s[(i + k) % n];
        const auto& b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (b < a) {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

inline std::string least_rotation(std::string_view s) {
    std::span<const unsigned char> bytes(reinterpret_cast<const unsigned char*>(s.data()), s.size());
    auto off = least_rotation(bytes);
    return std::string(s.substr(off)) + std::string(s.substr(0, off));
}

}  // namespace bwtvar
