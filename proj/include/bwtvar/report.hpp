#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "collection.hpp"
#include "decimal.hpp"
#include "distances.hpp"
#include "intervals.hpp"
#include "permutations.hpp"
#include "run_metrics.hpp"
#include "transforms.hpp"

namespace bwtvar {

using OrderedJson = nlohmann::ordered_json;

struct DatasetProperties {
    std::size_t k = 0;
    std::size_t total_length = 0;
    std::size_t max_length = 0;
    std::size_t min_length = 0;
    std::size_t interval_count = 0;
    std::size_t interval_length = 0;
    Ratio fraction;
    Ratio variability;
    std::string average_length() const { return format_fixed(static_cast<std::int64_t>(total_length), static_cast<std::int64_t>(k), 0); }
};

struct RunsRow {
    std::string label;
    std::size_t r = 0;
    std::size_t n = 0;
    std::string mean_run_length() const { return format_fixed(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r), 3); }
};

struct EditSection {
    std::size_t subset_k = 0;
    DistanceMatrix matrix;
};

struct AnalyzeOptions {
    std::optional<std::size_t> edit_subset;  // first n sequences
};

struct AnalyzeReport {
    DatasetProperties dataset;
    std::vector<RunsRow> runs;  // five variants, then the optimum
    std::size_t r_opt = 0;
    DistanceMatrix hamming;     // separator-based variants only
    std::size_t hamming_bound = 0;
    ColexGap colex;
    std::optional<EditSection> edit;
    PermutationProfile permutations;
};

inline AnalyzeReport analyze(const Collection& c, const AnalyzeOptions& opt = {}) {
    require_valid(c);
    AnalyzeReport rep;
    auto iv = interesting_intervals(c);
    auto& d = rep.dataset;
    d.k = c.k();
    d.total_length = c.total_length();
    d.max_length = c.max_length();
    d.min_length = c.min_length();
    d.interval_count = iv.count;
    d.interval_length = iv.total_length;
    d.fraction = iv.fraction;
    d.variability = iv.variability;

    std::vector<Transform> separated;
    for (auto v : kCollectionVariants) {
        auto t = build(v, c);
        auto s = count_runs(t);
        rep.runs.push_back({std::string(variant_name(v)), s.r, s.n});
        if (is_separator_based(v)) separated.push_back(std::move(t));
    }
    auto opt_order = optimal_order(c);
    rep.r_opt = opt_order.r_opt;
    rep.runs.push_back({"optimum", opt_order.r_opt, c.total_length() + c.k()});

    rep.hamming = distance_matrix(separated, DistanceKind::Hamming);
    rep.hamming_bound = iv.total_length;
    rep.colex.runs_colex = count_runs(separated[3]).r;
    rep.colex.r_opt = rep.r_opt;
    rep.colex.c_m = iv.count;
    rep.colex.bound_holds = rep.colex.runs_colex <= rep.r_opt + 2 * iv.count;

    if (opt.edit_subset) {
        auto n = *opt.edit_subset;
        if (n == 0 || n > c.k())
            throw ArgumentError("--edit-subset must lie in 1.." + std::to_string(c.k()));
        auto sub = c.head(n);
        std::vector<Transform> ts;
        for (auto v : kCollectionVariants) ts.push_back(build(v, sub));
        rep.edit = EditSection{n, distance_matrix(ts, DistanceKind::Edit)};
    }
    rep.permutations = permutation_profile(c);
    return rep;
}

/// Both matrices in full; normalized values as fixed-point strings.
inline OrderedJson distance_json(const DistanceMatrix& m) {
    OrderedJson j;
    j["kind"] = std::string(distance_name(m.kind));
    j["labels"] = m.labels;
    j["absolute"] = m.absolute;
    auto norm = OrderedJson::array();
    for (std::size_t a = 0; a < m.labels.size(); ++a) {
        auto row = OrderedJson::array();
        for (std::size_t b = 0; b < m.labels.size(); ++b) row.push_back(m.normalized_text(a, b));
        norm.push_back(std::move(row));
    }
    j["normalized"] = std::move(norm);
    return j;
}

/// Hamming bound and colex bound, evaluated on the report's own numbers.
inline bool hamming_within_bound(const AnalyzeReport& rep) {
    for (const auto& row : rep.hamming.absolute) {
        for (auto v : row) {
            if (v > rep.hamming_bound) return false;
        }
    }
    return true;
}

inline OrderedJson report_json(const AnalyzeReport& rep) {
    OrderedJson j;
    const auto& d = rep.dataset;
    j["dataset"] = {
        {"k", d.k},
        {"total_length", d.total_length},
        {"average_length", d.average_length()},
        {"max_length", d.max_length},
        {"min_length", d.min_length},
        {"interesting_intervals", d.interval_count},
        {"interval_length", d.interval_length},
        {"interval_fraction", format_fixed(d.fraction, 3)},
        {"variability", format_fixed(d.variability, 3)},
    };
    auto runs = OrderedJson::array();
    for (const auto& r : rep.runs) {
        runs.push_back({{"variant", r.label}, {"r", r.r}, {"n", r.n}, {"mean_run_length", r.mean_run_length()}});
    }
    j["runs"] = std::move(runs);
    j["r_opt"] = rep.r_opt;
    j["hamming"] = distance_json(rep.hamming);
    j["bounds"] = {
        {"hamming_bound", rep.hamming_bound},
        {"hamming_within_bound", hamming_within_bound(rep)},
        {"runs_colex", rep.colex.runs_colex},
        {"colex_gap_bound", rep.r_opt + 2 * rep.colex.c_m},
        {"colex_within_bound", rep.colex.bound_holds},
    };
    if (rep.edit) {
        auto e = distance_json(rep.edit->matrix);
        e["subset_k"] = rep.edit->subset_k;
        j["edit"] = std::move(e);
    }
    const auto& p = rep.permutations;
    j["permutations"] = {
        {"rho", p.rho.to_string()},
        {"pi_de", p.pi_de.to_string()},
        {"pi_md", p.pi_md.to_string()},
        {"pi_conc", p.pi_conc.to_string()},
        {"gamma", p.gamma.to_string()},
    };
    return j;
}

inline std::string format_report_json(const AnalyzeReport& rep) { return report_json(rep).dump(2) + "\n"; }

inline std::string format_report_tsv(const AnalyzeReport& rep) {
    std::ostringstream out;
    const auto& d = rep.dataset;
    out << "# dataset\n"
        << "k\t" << d.k << '\n'
        << "total_length\t" << d.total_length << '\n'
        << "average_length\t" << d.average_length() << '\n'
        << "max_length\t" << d.max_length << '\n'
        << "min_length\t" << d.min_length << '\n'
        << "interesting_intervals\t" << d.interval_count << '\n'
        << "interval_length\t" << d.interval_length << '\n'
        << "interval_fraction\t" << format_fixed(d.fraction, 3) << '\n'
        << "variability\t" << format_fixed(d.variability, 3) << '\n';
    out << "# runs\nvariant\tr\tn\tn/r\n";
    for (const auto& r : rep.runs) out << r.label << '\t' << r.r << '\t' << r.n << '\t' << r.mean_run_length() << '\n';
    out << "# hamming\n" << format_distance_tsv(rep.hamming);
    if (rep.edit) out << "# edit (first " << rep.edit->subset_k << " sequences)\n" << format_distance_tsv(rep.edit->matrix);
    const auto& p = rep.permutations;
    out << "# permutations\n"
        << "rho\t" << p.rho.to_string() << '\n'
        << "pi_de\t" << p.pi_de.to_string() << '\n'
        << "pi_md\t" << p.pi_md.to_string() << '\n'
        << "pi_conc\t" << p.pi_conc.to_string() << '\n'
        << "gamma\t" << p.gamma.to_string() << '\n';
    return out.str();
}

/// Plot-ready run table: variant,r,n,mean_run_length.
inline std::string format_runs_csv(const AnalyzeReport& rep) {
    std::string out = "variant,r,n,mean_run_length\n";
    for (const auto& r : rep.runs) {
        out += r.label + "," + std::to_string(r.r) + "," + std::to_string(r.n) + "," + r.mean_run_length() + "\n";
    }
    return out;
}

}  // namespace bwtvar
