#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "error.hpp"

namespace bwtvar {

/// Exact non-negative ratio of two integers. Reported decimals are rendered
/// from the integers directly so that rounding is half-up and reproducible.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const noexcept { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }

    Ratio reduced() const {
        if (den == 0) return *this;
        auto g = std::gcd(num, den);
        return g == 0 ? *this : Ratio{num / g, den / g};
    }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
};

/// Formats num/den with exactly `places` decimals, rounding half-up.
/// A zero denominator renders as zero.
inline std::string format_fixed(std::int64_t num, std::int64_t den, int places) {
    if (num < 0 || den < 0) throw ArgumentError("format_fixed: negative operand");
    if (den == 0) num = 0, den = 1;
    __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    __int128 scaled = (static_cast<__int128>(num) * scale * 2 + den) / (static_cast<__int128>(den) * 2);
    auto whole = static_cast<std::int64_t>(scaled / scale);
    auto frac = static_cast<std::int64_t>(scaled % scale);
    std::string out = std::to_string(whole);
    if (places > 0) {
        std::string f = std::to_string(frac);
        out += '.';
        out.append(static_cast<std::size_t>(places) - f.size(), '0');
        out += f;
    }
    return out;
}

inline std::string format_fixed(const Ratio& r, int places) { return format_fixed(r.num, r.den, places); }

/// Percentage with two decimals, a trailing zero dropped ("75.0", "68.33").
inline std::string format_percentage(std::int64_t num, std::int64_t den) {
    std::string s = format_fixed(num * 100, den, 2);
    if (s.back() == '0') s.pop_back();
    return s;
}

}  // namespace bwtvar
