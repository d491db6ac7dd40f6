// bwtvar: command-line front end for the BWT variant library.
//
// Exit codes: 0 ok, 1 usage, 2 input error, 3 oracle mismatch.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bwtvar/bwtvar.hpp"

namespace {

using namespace bwtvar;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitOracle = 3;

std::string read_all(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

InputFormat parse_format(const std::string& s) {
    if (s == "auto") return InputFormat::Auto;
    if (s == "fasta") return InputFormat::Fasta;
    if (s == "lines") return InputFormat::Lines;
    throw ArgumentError("unknown input format '" + s + "'");
}

Collection load(const std::string& path, const std::string& format) {
    auto c = parse_collection(read_all(path), parse_format(format));
    require_valid(c);
    return c;
}

/// Applies --order: a keyword or a one-line permutation of 1..k.
Collection reorder(const Collection& c, const std::string& order) {
    if (order.empty()) return c;
    std::vector<std::size_t> idx;
    if (order == "colex") {
        idx = colex_order(c);
    } else if (order == "lex") {
        idx = lex_order(c);
    } else if (order == "reverse") {
        for (std::size_t i = c.k(); i-- > 0;) idx.push_back(i);
    } else {
        auto p = Perm::parse(order);
        if (p.size() != c.k())
            throw ArgumentError("--order has " + std::to_string(p.size()) + " entries, collection has " + std::to_string(c.k()));
        for (auto v : p.values()) idx.push_back(v - 1);
    }
    return c.permuted(idx);
}

void check_oracle(Variant v, const Collection& c, const Transform& fast) {
    auto naive = naive_rotation_sort(v, c);
    auto expected = naive.transform;
    if (v == Variant::ConcBwt && fast.normalized) expected = normalize_conc(expected);
    if (expected.symbols != fast.symbols)
        throw OracleMismatch(std::string(variant_name(v)) + ": efficient builder gives " + fast.text() +
                             ", rotation sort gives " + expected.text());
}

std::string runs_table(const Collection& c) {
    std::ostringstream out;
    out << "variant\tr\tn\tn/r\n";
    for (auto v : kCollectionVariants) {
        auto s = count_runs(build(v, c));
        out << variant_name(v) << '\t' << s.r << '\t' << s.n << '\t' << s.mean_run_length() << '\n';
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BWT variants of string collections: build, invert, compare, analyze"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "auto";
    std::string out_path;
    std::string order;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Input file (FASTA or one sequence per line; '-' for stdin)");
        sub->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "fasta", "lines"}));
        sub->add_option("--out,-o", out_path, "Write output to this file");
    };

    // transform
    auto* t = app.add_subcommand("transform", "Build one transform");
    add_input(t);
    std::string variant_text = "mdol";
    bool raw = false, rle = false, oracle = false, matrix = false;
    t->add_option("--variant,-v", variant_text, "ebwt, dolebwt, mdol, conc, colex, bwt")->required();
    t->add_flag("--raw", raw, "Keep the '#' terminator of concBWT");
    t->add_flag("--rle", rle, "Print the run-length encoding (symbol<TAB>length)");
    t->add_flag("--oracle", oracle, "Cross-check against explicit rotation sorting");
    t->add_flag("--matrix", matrix, "Print the sorted rotation matrix instead");
    t->add_option("--order", order, "Input order: colex, lex, reverse, or a permutation such as 25134");

    // analyze
    auto* a = app.add_subcommand("analyze", "Dataset report: properties, runs, distances, permutations");
    add_input(a);
    bool tsv = false, json = false;
    std::optional<std::size_t> edit_subset;
    std::string runs_csv;
    auto* json_flag = a->add_flag("--json", json, "JSON output (default)");
    a->add_flag("--tsv", tsv, "TSV output")->excludes(json_flag);
    a->add_option("--edit-subset", edit_subset, "Edit-distance matrix over the first n sequences");
    a->add_option("--runs-csv", runs_csv, "Also write the runs table as CSV to this file");
    a->add_flag("--oracle", oracle, "Cross-check every transform against rotation sorting");

    // compare
    auto* cmp = app.add_subcommand("compare", "Runs and pairwise distances of selected variants");
    add_input(cmp);
    std::vector<std::string> variant_list{"dolebwt", "mdol", "conc", "colex"};
    std::string distance_kind = "hamming";
    cmp->add_option("--variants", variant_list, "Variants to compare");
    cmp->add_option("--distance", distance_kind, "hamming or edit")->check(CLI::IsMember({"hamming", "edit"}));
    cmp->add_option("--order", order, "Input order: colex, lex, reverse, or a permutation");

    // optimal
    auto* opt = app.add_subcommand("optimal", "Input order minimizing the runs of the multidollar BWT");
    add_input(opt);

    // feasible
    auto* fe = app.add_subcommand("feasible", "Count concBWT-feasible dollar permutations");
    std::size_t fk = 0;
    bool table = false, allow_11 = false;
    std::string check_perm;
    fe->add_option("k", fk, "Number of strings")->required();
    fe->add_flag("--table", table, "One row for every k' from 3 to k");
    fe->add_flag("--allow-11", allow_11, "Permit k = 11 (39,916,800 input orders)");
    fe->add_option("--check", check_perm, "Test one permutation and print a witness input order");

    // invert
    auto* inv = app.add_subcommand("invert", "Recover the collection from a transform");
    add_input(inv);
    std::string to = "lines";
    inv->add_option("--variant,-v", variant_text, "Variant of the transform")->required();
    inv->add_option("--to", to, "Output format")->check(CLI::IsMember({"lines", "fasta"}));

    // intervals
    auto* iv = app.add_subcommand("intervals", "Interesting intervals as TSV");
    add_input(iv);

    // synth
    auto* sy = app.add_subcommand("synth", "Generate a deterministic synthetic collection (FASTA)");
    GenSpec gen;
    std::optional<std::size_t> fixed_length;
    sy->add_option("--seed", gen.seed, "Generator seed");
    sy->add_option("--k", gen.k, "Number of sequences");
    sy->add_option("--length", fixed_length, "Fixed sequence length");
    sy->add_option("--min-length", gen.min_length, "Minimum sequence length");
    sy->add_option("--max-length", gen.max_length, "Maximum sequence length");
    sy->add_option("--alphabet", gen.alphabet, "Symbols to draw from");
    sy->add_option("--mutation", gen.mutation_rate, "Per-symbol mutation rate from the ancestor");
    sy->add_option("--suffix-bias", gen.suffix_bias, "Probability of copying a suffix of an earlier sequence");
    sy->add_option("--suffix-mean", gen.suffix_mean_length, "Mean length of copied suffixes");
    sy->add_option("--ancestor-length", gen.ancestor_length, "Ancestor length (default: max length)");
    sy->add_option("--out,-o", out_path, "Write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (t->parsed()) {
            auto v = parse_variant(variant_text);
            auto c = reorder(load(input, format), order);
            if (matrix) {
                write_output(out_path, format_matrix(naive_rotation_sort(v, c).matrix));
                return 0;
            }
            auto tr = (v == Variant::ConcBwt && raw) ? conc_bwt(c) : build(v, c);
            if (oracle) check_oracle(v, c, tr);
            write_output(out_path, rle ? format_rle(rle_encode(tr).rle) : tr.text() + "\n");
        } else if (a->parsed()) {
            auto c = load(input, format);
            if (oracle) {
                for (auto v : kCollectionVariants) check_oracle(v, c, build(v, c));
            }
            auto rep = analyze(c, AnalyzeOptions{edit_subset});
            write_output(out_path, tsv ? format_report_tsv(rep) : format_report_json(rep));
            if (!runs_csv.empty()) write_output(runs_csv, format_runs_csv(rep));
        } else if (cmp->parsed()) {
            auto c = reorder(load(input, format), order);
            std::vector<Transform> ts;
            for (const auto& name : variant_list) ts.push_back(build(parse_variant(name), c));
            std::ostringstream out;
            out << "variant\tr\tn\tn/r\n";
            for (const auto& tr : ts) {
                auto s = count_runs(tr);
                out << variant_name(tr.variant) << '\t' << s.r << '\t' << s.n << '\t' << s.mean_run_length() << '\n';
            }
            out << format_distance_tsv(distance_matrix(ts, parse_distance_kind(distance_kind)));
            write_output(out_path, out.str());
        } else if (opt->parsed()) {
            auto c = load(input, format);
            auto res = optimal_order(c);
            auto g = colex_gap(c);
            std::ostringstream out;
            out << "permutation\t" << res.permutation.to_string() << '\n'
                << "r_opt\t" << res.r_opt << '\n'
                << "runs_colex\t" << g.runs_colex << '\n'
                << "interesting_intervals\t" << g.c_m << '\n'
                << "colex_bound_holds\t" << (g.bound_holds ? "true" : "false") << '\n'
                << "transform\t" << mdol_bwt(c.permuted(res.order)).text() << '\n'
                << runs_table(c) << "optimum\t" << res.r_opt << '\t' << c.total_length() + c.k() << '\t'
                << format_fixed(static_cast<std::int64_t>(c.total_length() + c.k()), static_cast<std::int64_t>(res.r_opt), 3)
                << '\n';
            out << "b\te\tarrangement\n";
            for (const auto& arr : res.arrangements) {
                out << arr.b << '\t' << arr.e << '\t' << render_symbols(arr.symbols) << '\n';
            }
            write_output(out_path, out.str());
        } else if (fe->parsed()) {
            const std::size_t cap = allow_11 ? 11 : 10;
            if (!check_perm.empty()) {
                auto p = Perm::parse(check_perm);
                auto w = is_feasible(p);
                std::cout << p.to_string() << '\t' << (w ? "feasible\t" + w->to_string() : std::string("infeasible")) << '\n';
                return 0;
            }
            std::size_t from = table ? 3 : fk;
            if (table && fk < 3) throw ArgumentError("--table needs k >= 3");
            for (std::size_t k = from; k <= fk; ++k) {
                auto f = enumerate_feasible(k, cap);
                if (table) std::cout << k << '\t';
                std::cout << f.feasible << '/' << f.total << " = " << f.percentage() << "%\n";
            }
        } else if (inv->parsed()) {
            auto v = parse_variant(variant_text);
            auto tr = parse_transform(read_all(input), v);
            Collection c;
            if (is_separator_based(v)) {
                c = invert_separator_based(tr);
            } else {
                c = Collection::from_sequences(invert_ebwt(tr));
            }
            write_output(out_path, to == "fasta" ? to_fasta(c) : to_lines(c));
        } else if (iv->parsed()) {
            auto c = load(input, format);
            auto rep = interesting_intervals(c);
            std::ostringstream out;
            out << format_intervals_tsv(rep);
            out << "# count\t" << rep.count << "\n# total_length\t" << rep.total_length << "\n# fraction\t"
                << format_fixed(rep.fraction, 3) << "\n# variability\t" << format_fixed(rep.variability, 3) << '\n';
            write_output(out_path, out.str());
        } else if (sy->parsed()) {
            if (fixed_length) gen.min_length = gen.max_length = *fixed_length;
            write_output(out_path, to_fasta(generate(gen)));
        }
    } catch (const OracleMismatch& e) {
        std::cerr << "oracle mismatch: " << e.what() << '\n';
        return kExitOracle;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ArgumentError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
