#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "collection.hpp"
#include "decimal.hpp"
#include "error.hpp"
#include "intervals.hpp"
#include "permutations.hpp"
#include "transforms.hpp"

namespace bwtvar {

struct Run {
    unsigned char symbol = 0;
    std::size_t length = 0;
    friend bool operator==(const Run&, const Run&) = default;
};

struct RunStats {
    std::size_t r = 0;
    std::size_t n = 0;
    std::vector<Run> rle;

    /// Mean run length n/r with three decimals.
    std::string mean_run_length() const { return format_fixed(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r), 3); }
};

/// Run-length encodes a symbol string. Separators form one symbol class; the
/// terminator is its own symbol.
inline RunStats rle_encode(std::string_view symbols) {
    if (symbols.empty()) throw ArgumentError("count_runs: empty transform");
    RunStats s;
    s.n = symbols.size();
    for (unsigned char b : symbols) {
        if (s.rle.empty() || s.rle.back().symbol != b) {
            s.rle.push_back({b, 1});
        } else {
            ++s.rle.back().length;
        }
    }
    s.r = s.rle.size();
    return s;
}

inline RunStats rle_encode(const Transform& t) { return rle_encode(t.symbols); }
inline RunStats count_runs(const Transform& t) { return rle_encode(t.symbols); }

inline std::string rle_decode(const std::vector<Run>& rle) {
    std::string out;
    for (std::size_t i = 0; i < rle.size(); ++i) {
        if (rle[i].length == 0) throw InputError("rle_decode: zero-length run");
        if (i > 0 && rle[i].symbol == rle[i - 1].symbol) throw InputError("rle_decode: adjacent runs share a symbol");
        out.append(rle[i].length, static_cast<char>(rle[i].symbol));
    }
    return out;
}

/// "symbol<TAB>length" per line.
inline std::string format_rle(const std::vector<Run>& rle) {
    std::string out;
    for (const auto& run : rle) {
        out += glyph(run.symbol);
        out += '\t';
        out += std::to_string(run.length);
        out += '\n';
    }
    return out;
}

inline std::vector<Run> parse_rle(std::string_view text) {
    std::vector<Run> rle;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() : nl + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (line.size() < 3 || line[1] != '\t') throw InputError("RLE: expected 'symbol<TAB>length'");
        auto digits = line.substr(2);
        if (digits.find_first_not_of("0123456789") != std::string_view::npos)
            throw InputError("RLE: bad run length '" + std::string(digits) + "'");
        auto sym = static_cast<unsigned char>(parse_symbols(line.substr(0, 1))[0]);
        rle.push_back({sym, std::stoull(std::string(digits))});
    }
    return rle;
}

/// Symbol order chosen inside one interesting interval.
struct IntervalArrangement {
    std::size_t b = 0;
    std::size_t e = 0;
    std::string symbols;  // distinct preceding symbols, first to last run
};

struct OptimalOrderResult {
    std::vector<std::size_t> order;  // 0-based input indices, position by position
    Perm permutation;                // the same order, 1-based
    std::size_t r_opt = 0;
    std::vector<IntervalArrangement> arrangements;
};

/// Input order minimizing the runs of the multidollar BWT.
///
/// The transform splits into one block per distinct suffix U (the rotations
/// starting with U$). A block lists the symbols preceding U in the strings
/// that end with U, and only its interesting blocks depend on the order. Any
/// choice of group order per block is realized by a depth-first walk of the
/// reversed-suffix trie, and listing each preceding symbol as one contiguous
/// group never costs runs, so an interesting block with d symbols contributes
/// d runs and is characterized by its first and last symbol. A dynamic
/// program over the blocks in rank order, keyed by the last symbol emitted,
/// then maximizes the merges across block boundaries.
inline OptimalOrderResult optimal_order(const Collection& c) {
    auto sb = suffix_blocks(c);
    const auto& trie = sb.trie;
    constexpr std::size_t kStates = 257;  // 256 symbols + "nothing emitted yet"
    constexpr std::size_t kNone = 256;
    constexpr auto kInf = std::numeric_limits<std::int64_t>::max() / 4;

    struct Choice {
        unsigned char first = 0;
        unsigned char last = 0;
        std::size_t from = 0;  // state before the block
    };
    // per block: reachable end states with their choice
    std::vector<std::vector<std::pair<unsigned char, Choice>>> choices(sb.blocks.size());
    std::vector<std::string> symbol_sets(sb.blocks.size());

    std::array<std::int64_t, kStates> cost;
    cost.fill(kInf);
    cost[kNone] = 0;
    std::vector<std::size_t> live{kNone};

    for (std::size_t x = 0; x < sb.blocks.size(); ++x) {
        auto parikh = trie.preceding(sb.blocks[x].node);
        std::string syms;
        for (auto [sym, n] : parikh) syms.push_back(static_cast<char>(sym));
        symbol_sets[x] = syms;
        const auto d = static_cast<std::int64_t>(syms.size());

        std::int64_t best_any = kInf;
        std::size_t best_state = kNone;
        for (auto s : live) {
            if (cost[s] < best_any) best_any = cost[s], best_state = s;
        }
        // cheapest way to start the block with symbol f
        auto start_cost = [&](unsigned char f) {
            std::int64_t via_merge = cost[f] < kInf ? cost[f] + d - 1 : kInf;
            std::int64_t plain = best_any + d;
            return via_merge <= plain ? std::pair{via_merge, static_cast<std::size_t>(f)} : std::pair{plain, best_state};
        };

        std::array<std::int64_t, kStates> next;
        next.fill(kInf);
        std::vector<std::size_t> next_live;
        if (d == 1) {
            auto f = static_cast<unsigned char>(syms[0]);
            auto [cst, from] = start_cost(f);
            next[f] = cst;
            next_live.push_back(f);
            choices[x].push_back({f, {f, f, from}});
        } else {
            std::vector<std::pair<std::int64_t, std::size_t>> g;
            for (unsigned char f : syms) g.push_back(start_cost(f));
            for (std::size_t li = 0; li < syms.size(); ++li) {
                auto l = static_cast<unsigned char>(syms[li]);
                std::int64_t best = kInf;
                std::size_t best_f = 0;
                for (std::size_t fi = 0; fi < syms.size(); ++fi) {
                    if (fi == li) continue;
                    if (g[fi].first < best) best = g[fi].first, best_f = fi;
                }
                next[l] = best;
                next_live.push_back(l);
                choices[x].push_back({l, {static_cast<unsigned char>(syms[best_f]), l, g[best_f].second}});
            }
        }
        for (auto s : live) cost[s] = kInf;
        for (auto s : next_live) cost[s] = next[s];
        live = std::move(next_live);
    }

    OptimalOrderResult res;
    std::size_t state = kNone;
    std::int64_t best = kInf;
    for (auto s : live) {
        if (cost[s] < best) best = cost[s], state = s;
    }
    res.r_opt = static_cast<std::size_t>(best);

    // Backtrack the first/last symbol of every block.
    std::vector<std::pair<unsigned char, unsigned char>> ends(sb.blocks.size());
    for (std::size_t x = sb.blocks.size(); x-- > 0;) {
        const auto& opts = choices[x];
        auto it = std::find_if(opts.begin(), opts.end(), [&](const auto& o) { return o.first == state; });
        if (it == opts.end()) throw Error("optimal_order: inconsistent backtrack");
        ends[x] = {it->second.first, it->second.last};
        state = it->second.from;
    }

    // Group order per trie node: first, remaining symbols ascending, last.
    std::vector<std::string> group_order(trie.size());
    for (std::size_t x = 0; x < sb.blocks.size(); ++x) {
        const auto& syms = symbol_sets[x];
        if (syms.size() < 2) continue;
        auto [f, l] = ends[x];
        std::string seq(1, static_cast<char>(f));
        for (char ch : syms) {
            auto u = static_cast<unsigned char>(ch);
            if (u != f && u != l) seq.push_back(ch);
        }
        seq.push_back(static_cast<char>(l));
        group_order[sb.blocks[x].node] = seq;
        res.arrangements.push_back({sb.blocks[x].b, sb.blocks[x].e, seq});
    }

    // Depth-first walk; nodes without a decision list groups in ascending
    // symbol order, strings equal to the suffix first (the colex order).
    std::vector<std::size_t> stack{trie.root()};
    // Entries >= trie.size() encode "emit the strings ending at node v".
    const auto emit_tag = trie.size();
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        if (v >= emit_tag) {
            for (auto i : trie.node(v - emit_tag).ending) res.order.push_back(i);
            continue;
        }
        const auto& n = trie.node(v);
        std::vector<std::size_t> groups;  // child nodes, or emit_tag + v for the SEP group
        auto group_for = [&](unsigned char sym) -> std::size_t {
            if (sym == kSep) return emit_tag + v;
            auto it = std::lower_bound(n.children.begin(), n.children.end(), sym,
                                       [](const auto& e, unsigned char s) { return e.first < s; });
            return it->second;
        };
        if (!group_order[v].empty()) {
            for (unsigned char sym : group_order[v]) groups.push_back(group_for(sym));
        } else {
            if (!n.ending.empty()) groups.push_back(emit_tag + v);
            for (auto [sym, child] : n.children) groups.push_back(child);
        }
        for (auto it = groups.rbegin(); it != groups.rend(); ++it) stack.push_back(*it);
    }
    std::vector<std::size_t> one_based(res.order.size());
    for (std::size_t p = 0; p < res.order.size(); ++p) one_based[p] = res.order[p] + 1;
    res.permutation = Perm(std::move(one_based));
    return res;
}

struct ColexGap {
    std::size_t runs_colex = 0;
    std::size_t r_opt = 0;
    std::size_t c_m = 0;
    bool bound_holds = false;
};

/// Checks runs(colexBWT) <= r_opt + 2 * (number of interesting intervals).
inline ColexGap colex_gap(const Collection& c) {
    ColexGap g;
    g.runs_colex = count_runs(colex_bwt(c)).r;
    g.r_opt = optimal_order(c).r_opt;
    g.c_m = interesting_intervals(c).count;
    g.bound_holds = g.runs_colex <= g.r_opt + 2 * g.c_m;
    return g;
}

}  // namespace bwtvar
