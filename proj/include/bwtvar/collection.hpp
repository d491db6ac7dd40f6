#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "symbols.hpp"

namespace bwtvar {

struct SeqRecord {
    std::string id;
    std::string seq;

    friend bool operator==(const SeqRecord&, const SeqRecord&) = default;
};

/// Ordered string collection. The input order is meaningful: several
/// transforms depend on it.
class Collection {
public:
    Collection() = default;

    explicit Collection(std::vector<SeqRecord> records) : records_(std::move(records)) {
        for (const auto& r : records_) total_length_ += r.seq.size();
    }

    /// Builds a collection from bare sequences, ids numbered "1", "2", ...
    static Collection from_sequences(const std::vector<std::string>& seqs) {
        std::vector<SeqRecord> records;
        records.reserve(seqs.size());
        for (std::size_t i = 0; i < seqs.size(); ++i) records.push_back({std::to_string(i + 1), seqs[i]});
        return Collection(std::move(records));
    }

    std::size_t k() const noexcept { return records_.size(); }
    std::size_t total_length() const noexcept { return total_length_; }
    bool empty() const noexcept { return records_.empty(); }

    const std::vector<SeqRecord>& records() const noexcept { return records_; }
    const SeqRecord& operator[](std::size_t i) const { return records_[i]; }
    const std::string& seq(std::size_t i) const { return records_[i].seq; }

    std::vector<std::string> sequences() const {
        std::vector<std::string> out;
        out.reserve(records_.size());
        for (const auto& r : records_) out.push_back(r.seq);
        return out;
    }

    std::size_t max_length() const noexcept {
        std::size_t m = 0;
        for (const auto& r : records_) m = std::max(m, r.seq.size());
        return m;
    }

    std::size_t min_length() const noexcept {
        if (records_.empty()) return 0;
        std::size_t m = records_.front().seq.size();
        for (const auto& r : records_) m = std::min(m, r.seq.size());
        return m;
    }

    /// Re-orders the collection: position p of the result holds record
    /// order[p] (0-based indices into this collection).
    Collection permuted(const std::vector<std::size_t>& order) const {
        if (order.size() != k()) throw ArgumentError("permuted: order has wrong length");
        std::vector<bool> seen(k(), false);
        std::vector<SeqRecord> out;
        out.reserve(k());
        for (auto i : order) {
            if (i >= k() || seen[i]) throw ArgumentError("permuted: order is not a permutation");
            seen[i] = true;
            out.push_back(records_[i]);
        }
        return Collection(std::move(out));
    }

    /// The first n records.
    Collection head(std::size_t n) const {
        if (n > k()) throw ArgumentError("head: only " + std::to_string(k()) + " records");
        return Collection(std::vector<SeqRecord>(records_.begin(), records_.begin() + static_cast<std::ptrdiff_t>(n)));
    }

    friend bool operator==(const Collection& a, const Collection& b) { return a.records_ == b.records_; }

private:
    std::vector<SeqRecord> records_;
    std::size_t total_length_ = 0;
};

/// Returns every invariant violation of `c`; empty means valid.
inline std::vector<std::string> validate(const Collection& c) {
    std::vector<std::string> problems;
    if (c.k() == 0) problems.emplace_back("empty collection");
    for (std::size_t i = 0; i < c.k(); ++i) {
        const auto& r = c[i];
        std::string where = "record " + std::to_string(i + 1) + (r.id.empty() ? "" : " (" + r.id + ")");
        if (r.seq.empty()) problems.push_back(where + ": empty sequence");
        for (std::size_t p = 0; p < r.seq.size(); ++p) {
            auto b = static_cast<unsigned char>(r.seq[p]);
            if (is_reserved_byte(b)) {
                problems.push_back(where + ": reserved byte " + symbol_label(b) + " at offset " + std::to_string(p + 1));
                break;
            }
        }
    }
    return problems;
}

/// Throws InputError listing the first violation, if any.
inline void require_valid(const Collection& c) {
    auto problems = validate(c);
    if (!problems.empty()) {
        std::string msg = problems.front();
        if (problems.size() > 1) msg += " (and " + std::to_string(problems.size() - 1) + " more)";
        throw InputError(msg);
    }
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view raw) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < raw.size()) {
        auto nl = raw.find('\n', start);
        auto end = nl == std::string_view::npos ? raw.size() : nl;
        auto line = raw.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return lines;
}

}  // namespace detail

/// Parses FASTA. Sequence lines are concatenated verbatim (no case folding).
inline Collection parse_fasta(std::string_view raw) {
    std::vector<SeqRecord> records;
    bool in_record = false;
    for (auto line : detail::split_lines(raw)) {
        if (!line.empty() && line.front() == '>') {
            records.push_back({std::string(line.substr(1)), {}});
            in_record = true;
        } else if (!line.empty()) {
            if (!in_record) throw InputError("FASTA: sequence data before the first '>' header");
            records.back().seq.append(line);
        }
    }
    if (records.empty()) throw InputError("FASTA: empty file");
    Collection c(std::move(records));
    require_valid(c);
    return c;
}

/// Parses one sequence per line; blank lines are skipped.
inline Collection parse_lines(std::string_view raw) {
    std::vector<SeqRecord> records;
    for (auto line : detail::split_lines(raw)) {
        if (line.empty()) continue;
        records.push_back({std::to_string(records.size() + 1), std::string(line)});
    }
    if (records.empty()) throw InputError("empty collection");
    Collection c(std::move(records));
    require_valid(c);
    return c;
}

enum class InputFormat { Auto, Fasta, Lines };

inline Collection parse_collection(std::string_view raw, InputFormat format = InputFormat::Auto) {
    if (format == InputFormat::Auto) {
        auto first = raw.find_first_not_of(" \t\r\n");
        format = first != std::string_view::npos && raw[first] == '>' ? InputFormat::Fasta : InputFormat::Lines;
    }
    return format == InputFormat::Fasta ? parse_fasta(raw) : parse_lines(raw);
}

inline Collection read_collection(std::istream& in, InputFormat format = InputFormat::Auto) {
    std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_collection(raw, format);
}

inline std::string to_lines(const Collection& c) {
    std::string out;
    for (const auto& r : c.records()) {
        out += r.seq;
        out += '\n';
    }
    return out;
}

inline std::string to_fasta(const Collection& c, std::size_t width = 0) {
    std::string out;
    for (const auto& r : c.records()) {
        out += '>';
        out += r.id;
        out += '\n';
        if (width == 0) {
            out += r.seq;
            out += '\n';
            continue;
        }
        for (std::size_t p = 0; p < r.seq.size(); p += width) {
            out.append(r.seq, p, width);
            out += '\n';
        }
    }
    return out;
}

}  // namespace bwtvar
