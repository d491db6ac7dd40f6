#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bwtvar {

// Transforms are stored as byte strings. Two byte values are reserved for the
// end-of-string symbols so that plain byte order already yields
// TERM < SEP < every alphabet byte.
inline constexpr unsigned char kTerm = 0x00;
inline constexpr unsigned char kSep = 0x01;

// Text rendering of the sentinels.
inline constexpr char kSepGlyph = '$';
inline constexpr char kTermGlyph = '#';

/// Bytes that may not occur in an input sequence. The glyphs are reserved as
/// well, otherwise a rendered transform could not be parsed back.
constexpr bool is_reserved_byte(unsigned char b) noexcept {
    return b == kTerm || b == kSep || b == static_cast<unsigned char>(kSepGlyph) ||
           b == static_cast<unsigned char>(kTermGlyph);
}

constexpr bool is_sentinel(unsigned char b) noexcept { return b == kTerm || b == kSep; }

/// Extended symbols distinguish indexed separators ($_1 < $_2 < ...). They are
/// only needed where the index matters: the explicit rotation matrices of the
/// naive oracle and the suffix sorting of the multidollar text.
using ExtSymbol = std::uint32_t;

inline constexpr ExtSymbol kExtTerm = 0;
inline constexpr ExtSymbol kExtByteBase = ExtSymbol{1} << 24;

constexpr ExtSymbol ext_sep(std::uint32_t index) noexcept { return index; }  // index >= 1
constexpr ExtSymbol ext_byte(unsigned char b) noexcept { return kExtByteBase + b; }
constexpr bool ext_is_sep(ExtSymbol s) noexcept { return s != kExtTerm && s < kExtByteBase; }

/// Collapses an extended symbol to its transform byte (all separators become SEP).
constexpr unsigned char ext_to_byte(ExtSymbol s) noexcept {
    if (s == kExtTerm) return kTerm;
    if (s < kExtByteBase) return kSep;
    return static_cast<unsigned char>(s - kExtByteBase);
}

/// Total order on extended symbols: TERM < SEP_1 < ... < SEP_k < alphabet bytes.
constexpr std::strong_ordering sentinel_compare(ExtSymbol a, ExtSymbol b) noexcept { return a <=> b; }

inline char glyph(unsigned char b) noexcept {
    if (b == kSep) return kSepGlyph;
    if (b == kTerm) return kTermGlyph;
    return static_cast<char>(b);
}

/// Renders an extended symbol; indexed separators print as "$_i" when requested.
inline std::string render_ext(ExtSymbol s, bool indexed_separators) {
    if (s == kExtTerm) return std::string(1, kTermGlyph);
    if (s < kExtByteBase) {
        if (!indexed_separators) return std::string(1, kSepGlyph);
        return std::string(1, kSepGlyph) + "_" + std::to_string(s);
    }
    return std::string(1, static_cast<char>(s - kExtByteBase));
}

/// Renders transform bytes with '$' and '#' for the sentinels.
inline std::string render_symbols(std::string_view symbols) {
    std::string out(symbols.size(), '\0');
    for (std::size_t i = 0; i < symbols.size(); ++i) out[i] = glyph(static_cast<unsigned char>(symbols[i]));
    return out;
}

/// Inverse of render_symbols.
inline std::string parse_symbols(std::string_view text) {
    std::string out(text.size(), '\0');
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == kSepGlyph) {
            out[i] = static_cast<char>(kSep);
        } else if (c == kTermGlyph) {
            out[i] = static_cast<char>(kTerm);
        } else {
            out[i] = c;
        }
    }
    return out;
}

/// Printable form of a single symbol for TSV/RLE output.
inline std::string symbol_label(unsigned char b) {
    if (is_sentinel(b)) return std::string(1, glyph(b));
    if (b >= 0x21 && b < 0x7f && b != '\\') return std::string(1, static_cast<char>(b));
    static constexpr char kHex[] = "0123456789ABCDEF";
    return std::string{'\\', 'x', kHex[b >> 4], kHex[b & 0xF]};
}

}  // namespace bwtvar
