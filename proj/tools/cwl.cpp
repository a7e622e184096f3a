// cwl: exact counting and bound verification for closed and privileged words.
//
// Subcommands: classify, tables, oeis, bounds, count.
// Exit codes: 0 success, 1 verified mismatch / violated bound, 2 usage,
// resource, or parse error.

#include "cwl/bfile.hpp"
#include "cwl/bounds.hpp"
#include "cwl/cache.hpp"
#include "cwl/counting.hpp"
#include "cwl/enumerate.hpp"
#include "cwl/golden.hpp"
#include "cwl/word.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace cwl;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("range upper end below lower end");
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected N or A..B, got \"" + text + "\"");
    }
}

std::uint64_t parse_max_states(const std::string& text) {
    try {
        const auto caret = text.find('^');
        if (caret == std::string::npos) return std::stoull(text);
        const auto base = std::stoull(text.substr(0, caret));
        const auto exp = std::stoul(text.substr(caret + 1));
        std::uint64_t value = 1;
        for (unsigned long i = 0; i < exp; ++i) {
            if (base == 0 || value > (std::uint64_t{1} << 62) / base) {
                throw std::out_of_range("max-states overflows");
            }
            value *= base;
        }
        return value;
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected an integer or B^E, got \"" + text + "\"");
    }
}

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash != std::string::npos) {
            return Rational(Count(text.substr(0, slash)), Count(text.substr(slash + 1)));
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(Count(text));
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty()) return Rational(Count(whole));
        Count denom = pow_count(10, static_cast<unsigned>(frac.size()));
        Count numer = Count(whole.empty() ? "0" : whole) * denom + Count(frac);
        return Rational(numer, denom);
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected p/q, integer, or decimal, got \"" + text + "\"");
    }
}

counting::TableKind parse_kind(const std::string& name) {
    auto kind = counting::table_kind_from(name);
    if (!kind || (*kind != counting::TableKind::closed &&
                  *kind != counting::TableKind::privileged)) {
        throw CLI::ValidationError("kind must be closed or privileged, got \"" + name + "\"");
    }
    return *kind;
}

// Writes to the --csv path when given, else to stdout.
class OutputSink {
  public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

int run_classify(const std::string& text, std::optional<int> k) {
    const Word word = Word::parse(text, k);
    std::cout << "word: " << text << "\n";
    std::cout << "length: " << word.length() << "\n";
    std::cout << "k: " << word.alphabet_size << "\n";

    const auto table = border_table(word);
    const auto chain = border_chain(table);
    std::cout << "border lengths:";
    if (chain.empty()) std::cout << " none";
    for (int b : chain) std::cout << ' ' << b;
    std::cout << "\n";

    const auto closed = is_closed(word);
    if (closed.closed && closed.border_length) {
        std::cout << "closed: yes\n";
        std::cout << "closed by: "
                  << text.substr(0, static_cast<std::size_t>(*closed.border_length))
                  << " (t=" << *closed.border_length << ")\n";
    } else if (closed.closed) {
        std::cout << "closed: yes\n";
        std::cout << "closed by: - (length <= 1)\n";
    } else {
        std::cout << "closed: no\n";
        std::cout << "closed by: -\n";
    }
    std::cout << "privileged: " << (is_privileged(word) ? "yes" : "no") << "\n";

    if (!word.empty()) {
        const auto corr = autocorrelation(word);
        std::cout << "autocorrelation: " << corr.to_string() << "\n";
        std::cout << "f(2): " << correlation_poly_eval(corr, 2) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

std::map<int, Count> computed_row(counting::TableKind kind, int k, int n,
                                  const EnumOptions& opts) {
    return kind == counting::TableKind::closed
               ? counting::count_closed_by_length(k, n, opts)
               : counting::count_privileged_by_length(k, n, opts);
}

void write_table_csv(std::ostream& out, const counting::CountTable& table, Range n_range,
                     Range t_range) {
    out << "n,t,count\n";
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        for (int t = t_range.lo; t <= t_range.hi; ++t) {
            out << n << ',' << t << ',' << table.cell(n, t).str() << '\n';
        }
    }
}

int run_tables(counting::TableKind kind, int k, Range n_range, Range t_range,
               bool diff_golden, const std::string& csv_path, const EnumOptions& opts,
               const std::filesystem::path& cache_dir, bool use_cache) {
    if (n_range.lo < 2) throw CLI::ValidationError("tables need n >= 2");
    if (t_range.lo < 1) throw CLI::ValidationError("tables need t >= 1");
    if (diff_golden && k != 2) throw CLI::ValidationError("--diff-golden applies to k=2 only");

    counting::CountTable table;
    table.kind = kind;
    table.k = k;
    table.provenance = counting::Provenance::brute_force;
    if (use_cache) {
        if (auto cached = io::cache_load(kind, k, cache_dir)) table.entries = cached->entries;
    }

    bool computed_anything = false;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        if (table.has_full_row(n)) continue;
        auto row = computed_row(kind, k, n, opts);
        for (int t = 1; t <= n - 1; ++t) {
            auto it = row.find(t);
            table.entries[{n, t}] = it == row.end() ? Count(0) : it->second;
        }
        computed_anything = true;
    }
    if (use_cache && computed_anything) io::cache_store(table, cache_dir);

    if (diff_golden) {
        if (!csv_path.empty()) {
            OutputSink sink(csv_path);
            write_table_csv(sink.stream(), table, n_range, t_range);
        }
        const auto mismatches =
            io::diff_golden(kind, table, n_range.lo, n_range.hi, t_range.lo, t_range.hi);
        int cells = 0;
        for (int n = std::max(n_range.lo, io::kGoldenNLo);
             n <= std::min(n_range.hi, io::kGoldenNHi); ++n) {
            for (int t = std::max(t_range.lo, io::kGoldenTLo);
                 t <= std::min(t_range.hi, io::kGoldenTHi); ++t) {
                ++cells;
            }
        }
        for (const auto& m : mismatches) {
            std::cout << m.n << ',' << m.t << ',' << m.expected.str() << ',' << m.actual.str()
                      << '\n';
        }
        std::cout << "diff-golden " << counting::to_string(kind) << ": "
                  << cells - static_cast<int>(mismatches.size()) << "/" << cells
                  << " cells match\n";
        return mismatches.empty() ? kExitOk : kExitMismatch;
    }

    OutputSink sink(csv_path);
    write_table_csv(sink.stream(), table, n_range, t_range);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// oeis
// ---------------------------------------------------------------------------

int run_oeis(counting::TableKind kind, const std::string& bfile_path, int n_max,
             const EnumOptions& opts) {
    const auto file = io::parse_bfile(bfile_path);
    int mismatches = 0;
    int checked = 0;
    for (const auto& [index, expected] : file.terms) {
        if (index < 0 || index > n_max) continue;
        const int n = static_cast<int>(index);
        const Count actual = kind == counting::TableKind::closed
                                 ? counting::count_closed(2, n, opts)
                                 : counting::count_privileged(2, n, opts);
        ++checked;
        if (actual != expected) {
            ++mismatches;
            std::cout << n << ',' << expected.str() << ',' << actual.str() << '\n';
        }
    }
    std::cout << "oeis " << counting::to_string(kind) << ": " << checked - mismatches << "/"
              << checked << " terms match\n";
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

struct BoundsArgs {
    int k = 2;
    int t = 2;
    int t_max = 0;
    int n = 0;
    long long n_single = -1;
    long long n_max = -1;
    Range n_range{10, 20};
    int m_max = 8;
    int j = 1;
    int i = 2;
    int samples = 6;
    std::string gamma;
    std::string csv;
};

int emit_reports(const std::vector<bounds::BoundReport>& reports, const std::string& csv_path,
                 bool hard) {
    OutputSink sink(csv_path);
    sink.stream() << bounds::csv_header() << '\n';
    for (const auto& r : reports) sink.stream() << bounds::to_csv(r) << '\n';
    if (!hard) return kExitOk;
    return bounds::all_hold(reports) ? kExitOk : kExitMismatch;
}

int run_bounds(const std::string& check, const BoundsArgs& args, const EnumOptions& opts) {
    if (check == "beta") {
        std::vector<bounds::BoundReport> reports;
        const int hi = args.t_max > 0 ? args.t_max : args.t;
        const int lo = args.t_max > 0 ? 1 : args.t;
        for (int t = lo; t <= hi; ++t) reports.push_back(bounds::check_beta_fixedpoint(args.k, t));
        return emit_reports(reports, args.csv, true);
    }
    if (check == "binomial") {
        std::vector<bounds::BoundReport> reports;
        if (!args.gamma.empty()) {
            reports = bounds::check_binomial_ineq(args.k, args.t, parse_rational(args.gamma));
        } else {
            // default grid: eighths below 6/t, plus the boundary itself
            const Rational boundary(6, args.t);
            for (Rational g(1, 8); g < boundary; g += Rational(1, 8)) {
                auto rows = bounds::check_binomial_ineq(args.k, args.t, g);
                reports.insert(reports.end(), rows.begin(), rows.end());
            }
            auto rows = bounds::check_binomial_ineq(args.k, args.t, boundary);
            reports.insert(reports.end(), rows.begin(), rows.end());
        }
        return emit_reports(reports, args.csv, true);
    }
    if (check == "lemma6") {
        return emit_reports(bounds::check_B_bounded_by_A(args.k, args.n, args.t, opts),
                            args.csv, true);
    }
    if (check == "corollary8") {
        counting::TableCache cache(opts);
        return emit_reports(bounds::check_corollary8(args.k, args.n, cache), args.csv, true);
    }
    if (check == "lemma15") {
        counting::TableCache cache(opts);
        return emit_reports(bounds::check_lemma15(args.k, args.n, cache), args.csv, true);
    }
    if (check == "betaA") {
        const int n_max = args.n_max >= 0 ? static_cast<int>(args.n_max) : 4 * args.t;
        return emit_reports(bounds::check_A_beta_bound(args.k, args.t, n_max), args.csv, true);
    }
    if (check == "envelope") {
        counting::TableCache cache(opts);
        OutputSink sink(args.csv);
        sink.stream() << bounds::envelope_csv_header() << '\n';
        for (const auto& row :
             bounds::envelope_report(args.k, args.n_range.lo, args.n_range.hi, args.j, cache)) {
            sink.stream() << bounds::to_csv(row) << '\n';
        }
        return kExitOk;
    }
    if (check == "tstar") {
        std::vector<bounds::BoundReport> reports;
        if (args.n_max >= 2) {
            long long gaps = 0;
            long long multiples = 0;
            for (long long n = 2; n <= args.n_max; ++n) {
                const auto scan = bounds::t_star_scan(args.k, n);
                if (scan.solution_count > 1) ++multiples;
                if (scan.solution_count == 0) {
                    ++gaps;
                    reports.push_back(bounds::make_report("tstar", args.k, n, scan.t,
                                                          "no-solution-gap", Rational(0),
                                                          Rational(0)));
                }
            }
            // Hard check: the double inequality never has two solutions.
            reports.push_back(bounds::make_report("tstar", args.k, args.n_max, -1,
                                                  "multiple-solutions", Rational(multiples),
                                                  Rational(0)));
            reports.push_back(bounds::make_report("tstar", args.k, args.n_max, -1,
                                                  "existence-gaps(info)", Rational(gaps),
                                                  Rational(gaps)));
            return emit_reports(reports, args.csv, true);
        }
        const long long n = args.n_single >= 1 ? args.n_single : 20;
        const auto scan = bounds::t_star_scan(args.k, n);
        reports.push_back(bounds::make_report("tstar", args.k, n, scan.t,
                                              scan.interval_hit ? "unique" : "no-solution-gap",
                                              Rational(scan.solution_count), Rational(1)));
        return emit_reports(reports, args.csv, true);
    }
    if (check == "loglimit") {
        const double gamma =
            args.gamma.empty() ? 2.0 : static_cast<double>(parse_rational(args.gamma));
        const auto report = bounds::check_loglimit(args.k, args.i, gamma, args.samples);
        OutputSink sink(args.csv);
        sink.stream() << "n,ratio,target\n";
        for (const auto& row : report.rows) {
            sink.stream() << row.n << ',' << row.ratio << ',' << report.target << '\n';
        }
        return kExitOk;
    }
    if (check == "corrorder") {
        return emit_reports(bounds::check_correlation_order(args.k, args.t, args.m_max, opts),
                            args.csv, true);
    }
    throw CLI::ValidationError("unknown bounds check \"" + check + "\"");
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

int run_count(counting::TableKind kind, int k, int n, const EnumOptions& opts) {
    const Count total = kind == counting::TableKind::closed
                            ? counting::count_closed(k, n, opts)
                            : counting::count_privileged(k, n, opts);
    std::cout << total.str() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and bound verification for closed and privileged words"};
    app.require_subcommand(1);

    unsigned jobs = 0;
    std::string max_states_text = "2^26";
    std::string cache_dir = io::kDefaultCacheDir;

    app.add_option("--jobs", jobs, "worker threads for enumeration (0 = auto)");
    app.add_option("--max-states", max_states_text,
                   "enumeration budget on k^n (accepts B^E notation)");
    app.add_option("--cache-dir", cache_dir, "results cache directory");

    // classify
    auto* classify = app.add_subcommand("classify", "classify one word");
    classify->fallthrough();
    std::string word_text;
    int classify_k = 0;
    classify->add_option("word", word_text, "word over printable ASCII")->required();
    classify->add_option("--k", classify_k, "alphabet size (default: inferred)");

    // tables
    auto* tables = app.add_subcommand("tables", "by-length count tables");
    tables->fallthrough();
    std::string tables_kind{"closed"};
    int tables_k = 2;
    std::string tables_n, tables_t, tables_csv;
    bool diff_golden = false;
    bool no_cache = false;
    tables->add_option("--kind", tables_kind, "closed or privileged")->required();
    tables->add_option("--k", tables_k, "alphabet size");
    tables->add_option("--n", tables_n, "row range A..B (default 10..20)");
    tables->add_option("--t", tables_t, "column range A..B (default: published window)");
    tables->add_flag("--diff-golden", diff_golden, "diff against the published table");
    tables->add_option("--csv", tables_csv, "write CSV here instead of stdout");
    tables->add_flag("--no-cache", no_cache, "skip the results cache");

    // oeis
    auto* oeis = app.add_subcommand("oeis", "diff totals against a b-file snapshot");
    oeis->fallthrough();
    std::string oeis_kind{"closed"}, oeis_bfile;
    int oeis_n_max = 20;
    oeis->add_option("--kind", oeis_kind, "closed or privileged")->required();
    oeis->add_option("--bfile", oeis_bfile, "path to the b-file")->required();
    oeis->add_option("--n-max", oeis_n_max, "largest index to check");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "inequality checkers and ratio reports");
    bounds_cmd->fallthrough();
    std::string check_name;
    BoundsArgs bargs;
    std::string bounds_n_range;
    bounds_cmd->add_option("check", check_name,
                           "beta|binomial|lemma6|corollary8|lemma15|betaA|envelope|tstar|"
                           "loglimit|corrorder")
        ->required();
    bounds_cmd->add_option("--k", bargs.k, "alphabet size");
    bounds_cmd->add_option("--t", bargs.t, "pattern / border length");
    bounds_cmd->add_option("--t-max", bargs.t_max, "check t = 1..t-max (beta)");
    bounds_cmd->add_option("--n", bargs.n, "word length (lemma6, corollary8, lemma15)");
    bounds_cmd->add_option("--n-single", bargs.n_single, "single n (tstar)");
    bounds_cmd->add_option("--n-max", bargs.n_max, "upper n (betaA, tstar scan)");
    bounds_cmd->add_option("--n-range", bounds_n_range, "row range A..B (envelope)");
    bounds_cmd->add_option("--m-max", bargs.m_max, "upper m (corrorder)");
    bounds_cmd->add_option("--j", bargs.j, "log depth (envelope)");
    bounds_cmd->add_option("--i", bargs.i, "log depth (loglimit)");
    bounds_cmd->add_option("--samples", bargs.samples, "ladder samples (loglimit)");
    bounds_cmd->add_option("--gamma", bargs.gamma, "gamma as p/q or decimal");
    bounds_cmd->add_option("--csv", bargs.csv, "write CSV here instead of stdout");

    // count
    auto* count_cmd = app.add_subcommand("count", "one exact total");
    count_cmd->fallthrough();
    std::string count_kind{"closed"};
    int count_k = 2;
    int count_n = 10;
    bool canonical = false;
    count_cmd->add_option("--kind", count_kind, "closed or privileged")->required();
    count_cmd->add_option("--k", count_k, "alphabet size")->required();
    count_cmd->add_option("--n", count_n, "word length")->required();
    count_cmd->add_flag("--canonical", canonical,
                        "enumerate alphabet-orbit representatives only");

    try {
        app.parse(argc, argv);

        EnumOptions opts;
        opts.jobs = jobs;
        opts.max_states = parse_max_states(max_states_text);
        opts.canonical = canonical;

        if (*classify) {
            return run_classify(word_text,
                                classify_k > 0 ? std::optional<int>(classify_k) : std::nullopt);
        }
        if (*tables) {
            const Range n_range = tables_n.empty() ? Range{10, 20} : parse_range(tables_n);
            const Range t_range = tables_t.empty()
                                      ? Range{1, diff_golden ? 10 : std::max(1, n_range.hi - 1)}
                                      : parse_range(tables_t);
            return run_tables(parse_kind(tables_kind), tables_k, n_range, t_range, diff_golden,
                              tables_csv, opts, cache_dir, !no_cache);
        }
        if (*oeis) return run_oeis(parse_kind(oeis_kind), oeis_bfile, oeis_n_max, opts);
        if (*bounds_cmd) {
            if (!bounds_n_range.empty()) bargs.n_range = parse_range(bounds_n_range);
            return run_bounds(check_name, bargs, opts);
        }
        if (*count_cmd) return run_count(parse_kind(count_kind), count_k, count_n, opts);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const io::BFileParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
