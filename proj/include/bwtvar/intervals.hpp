#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "collection.hpp"
#include "decimal.hpp"
#include "error.hpp"
#include "symbols.hpp"
#include "transforms.hpp"

namespace bwtvar {

using Parikh = std::map<unsigned char, std::size_t>;

/// Trie of the reversed input strings. Node at depth d stands for a suffix U
/// of length d; its child via symbol c stands for cU.
class SuffixTrie {
public:
    struct Node {
        std::size_t depth = 0;
        std::size_t members = 0;                               // strings having this suffix
        std::vector<std::pair<unsigned char, std::size_t>> children;  // sorted by symbol
        std::vector<std::size_t> ending;                       // 0-based strings equal to this suffix
    };

    explicit SuffixTrie(const Collection& c) {
        nodes_.emplace_back();
        first_.reserve(c.k() + 1);
        for (std::size_t i = 0; i < c.k(); ++i) {
            const auto& s = c.seq(i);
            first_.push_back(path_.size());
            std::size_t v = 0;
            path_.push_back(v);
            ++nodes_[v].members;
            for (std::size_t d = 1; d <= s.size(); ++d) {
                v = child_or_insert(v, static_cast<unsigned char>(s[s.size() - d]));
                ++nodes_[v].members;
                path_.push_back(v);
            }
            nodes_[v].ending.push_back(i);
        }
        first_.push_back(path_.size());
    }

    std::size_t root() const noexcept { return 0; }
    const Node& node(std::size_t v) const { return nodes_[v]; }
    std::size_t size() const noexcept { return nodes_.size(); }

    /// Node of the suffix of string i with the given length.
    std::size_t node_of(std::size_t i, std::size_t suffix_length) const { return path_[first_[i] + suffix_length]; }

    /// Symbols preceding U in the member strings, SEP for strings equal to U.
    Parikh preceding(std::size_t v) const {
        Parikh p;
        const auto& n = nodes_[v];
        if (!n.ending.empty()) p[kSep] = n.ending.size();
        for (auto [sym, child] : n.children) p[sym] = nodes_[child].members;
        return p;
    }

private:
    std::size_t child_or_insert(std::size_t v, unsigned char sym) {
        auto& ch = nodes_[v].children;
        auto it = std::lower_bound(ch.begin(), ch.end(), sym, [](const auto& e, unsigned char s) { return e.first < s; });
        if (it != ch.end() && it->first == sym) return it->second;
        auto id = nodes_.size();
        auto depth = nodes_[v].depth + 1;
        nodes_[v].children.insert(it, {sym, id});
        nodes_.emplace_back();
        nodes_.back().depth = depth;
        return id;
    }

    std::vector<Node> nodes_;
    std::vector<std::size_t> path_;
    std::vector<std::size_t> first_;
};

/// Rank range of the rotations beginning with U$ (1-based, inclusive) for
/// one distinct suffix U. Separator-based transforms list the preceding
/// symbols of these rotations contiguously.
struct SuffixBlock {
    std::size_t b = 0;
    std::size_t e = 0;
    std::size_t node = 0;
    std::size_t length() const noexcept { return e - b + 1; }
};

struct SuffixBlocks {
    SuffixTrie trie;
    std::vector<SuffixBlock> blocks;            // in rank order, covering 1..N+k
    std::vector<std::vector<std::size_t>> members;  // 1-based string indices per block, sorted
};

inline SuffixBlocks suffix_blocks(const Collection& c) {
    require_valid(c);
    SuffixBlocks out{SuffixTrie(c), {}, {}};
    auto gsa = multidollar_suffix_array(c);
    std::vector<std::size_t> block_of_node(out.trie.size(), static_cast<std::size_t>(-1));
    for (std::size_t r = 0; r < gsa.order.size(); ++r) {
        auto [i, off] = gsa.locate(gsa.order[r]);
        auto v = out.trie.node_of(i, c.seq(i).size() - off);
        if (out.blocks.empty() || out.blocks.back().node != v) {
            if (block_of_node[v] != static_cast<std::size_t>(-1))
                throw Error("suffix_blocks: rotations of one suffix are not contiguous");
            block_of_node[v] = out.blocks.size();
            out.blocks.push_back({r + 1, r + 1, v});
            out.members.emplace_back();
        }
        out.blocks.back().e = r + 1;
        out.members.back().push_back(i + 1);
    }
    for (auto& m : out.members) std::sort(m.begin(), m.end());
    return out;
}

struct InterestingInterval {
    std::size_t b = 0;
    std::size_t e = 0;
    std::string shared_suffix;
    Parikh parikh;
    std::vector<std::size_t> members;  // 1-based, sorted
    std::size_t length() const noexcept { return e - b + 1; }
};

struct IntervalReport {
    std::vector<InterestingInterval> intervals;
    std::size_t count = 0;
    std::size_t total_length = 0;
    std::size_t transform_length = 0;  // N + k
    Ratio fraction;                    // total_length / (N + k)
    Ratio variability;                 // 0/1 when there is no interval
};

/// Maximum number of runs any arrangement of the multiset can have: the most
/// frequent symbol can be separated completely iff the others suffice.
inline std::size_t max_runs_bound(const Parikh& parikh) {
    std::size_t total = 0, top = 0;
    for (auto [sym, n] : parikh) {
        total += n;
        top = std::max(top, n);
    }
    if (total == 0) throw ArgumentError("max_runs_bound: empty Parikh vector");
    std::size_t others = total - top;
    return top - 1 <= others ? total : 2 * others + 1;
}

/// Blocks of shared suffixes whose preceding symbols are not all equal.
inline IntervalReport interesting_intervals(const Collection& c) {
    auto sb = suffix_blocks(c);
    IntervalReport rep;
    rep.transform_length = c.total_length() + c.k();
    std::size_t bound_sum = 0;
    for (std::size_t x = 0; x < sb.blocks.size(); ++x) {
        const auto& blk = sb.blocks[x];
        auto parikh = sb.trie.preceding(blk.node);
        if (parikh.size() < 2) continue;
        InterestingInterval iv;
        iv.b = blk.b;
        iv.e = blk.e;
        auto first = sb.members[x].front() - 1;
        const auto& s = c.seq(first);
        iv.shared_suffix = s.substr(s.size() - sb.trie.node(blk.node).depth);
        iv.parikh = std::move(parikh);
        iv.members = sb.members[x];
        bound_sum += max_runs_bound(iv.parikh);
        rep.total_length += iv.length();
        rep.intervals.push_back(std::move(iv));
    }
    rep.count = rep.intervals.size();
    rep.fraction = Ratio{static_cast<std::int64_t>(rep.total_length), static_cast<std::int64_t>(rep.transform_length)};
    rep.variability = rep.count == 0 ? Ratio{0, 1}
                                     : Ratio{static_cast<std::int64_t>(bound_sum), static_cast<std::int64_t>(rep.total_length)};
    return rep;
}

/// Sum of per-interval run bounds over the sum of interval lengths (0 without intervals).
inline Ratio variability(const Collection& c) { return interesting_intervals(c).variability; }

/// Upper bound on the Hamming distance of any two separator-based transforms.
inline std::size_t hamming_upper_bound(const Collection& c) { return interesting_intervals(c).total_length; }

inline std::string escape_bytes(std::string_view s) {
    std::string out;
    for (unsigned char b : s) out += symbol_label(b);
    return out;
}

inline std::string format_parikh(const Parikh& p) {
    std::string out;
    for (auto [sym, n] : p) {
        if (!out.empty()) out += ',';
        out += symbol_label(sym);
        out += ':';
        out += std::to_string(n);
    }
    return out;
}

/// TSV: b, e, length, suffix, parikh.
inline std::string format_intervals_tsv(const IntervalReport& rep) {
    std::ostringstream out;
    out << "b\te\tlength\tsuffix\tparikh\n";
    for (const auto& iv : rep.intervals) {
        out << iv.b << '\t' << iv.e << '\t' << iv.length() << '\t' << escape_bytes(iv.shared_suffix) << '\t'
            << format_parikh(iv.parikh) << '\n';
    }
    return out.str();
}

}  // namespace bwtvar
