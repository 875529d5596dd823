#include "grsum/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <thread>

#include "grsum/error.hpp"
#include "grsum/grs.hpp"
#include "grsum/numtheory.hpp"
#include "grsum/series.hpp"
#include "grsum/svt.hpp"
#include "grsum/verify.hpp"

namespace grsum::cli {

namespace {

struct Options {
    // table / value
    long k = 0;
    long s = 0;
    long t = 0;
    int b = 0;
    std::string format = "csv";
    std::string out_path;
    // svt / oracle
    long delta = 0;
    long n = 0;
    int parity = 0;
    std::optional<int> oracle_parity;
    bool crosscheck = false;
    // verify
    std::string suite;
    std::optional<long> kmax;
    std::optional<double> tol;
    std::uint64_t seed = 20240531;
    unsigned jobs = 1;
    // series
    std::string kind;
    double r = 2.0;
    std::optional<long> series_s;
    std::optional<long> series_t;
    long m = 1;
    std::uint64_t terms = 0;
};

void emit_table(const Options& o, std::ostream& out) {
    const SumKind kind = sum_kind(static_cast<unsigned>(o.b));
    if (o.format == "csv") {
        out << 's';
        for (long t = 0; t < o.k; ++t) {
            out << "\tt=" << t;
        }
        out << '\n';
        for_each_forward_row(o.k, kind, [&](std::int64_t s, std::span<const Rational> row) {
            out << s;
            for (const Rational& x : row) {
                out << '\t' << x.str();
            }
            out << '\n';
        });
        return;
    }
    // Streamed by hand so k near the limit does not build a DOM of k^2 strings.
    out << "{\"k\":" << o.k << ",\"b\":" << o.b << ",\"rows\":[";
    for_each_forward_row(o.k, kind, [&](std::int64_t s, std::span<const Rational> row) {
        out << (s == 1 ? "" : ",") << "\n{\"s\":" << s << ",\"values\":[";
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << '"' << row[i].str() << '"';
        }
        out << "]}";
    });
    out << "\n]}\n";
}

int cmd_table(const Options& o, std::ostream& out) {
    if (o.k < 1 || o.k > max_table_k) {
        throw InvalidArgument("table: k must lie in [1, " + std::to_string(max_table_k) + "]");
    }
    emit_table(o, out);
    return ok;
}

int cmd_value(const Options& o, std::ostream& out) {
    if (o.k < 1 || o.k > max_value_k) {
        throw InvalidArgument("value: k must lie in [1, " + std::to_string(max_value_k) + "]");
    }
    if (o.s < 1 || o.s > o.k) {
        throw InvalidArgument("value: s must lie in [1, k]");
    }
    // Single rows only; no table is built.
    Rational v;
    if (o.b == 0) {
        const auto row = direct_row(o.k, o.s);
        v = Rational(row[static_cast<std::size_t>(mod_floor(o.t, o.k))]);
    } else {
        v = sigma_via_c_convolution(o.k, o.t, o.s);
    }
    out << v.str() << '\n';
    return ok;
}

int cmd_svt(const Options& o, std::ostream& out, std::ostream& err) {
    const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    SvtSizeReport rep;
    if (o.crosscheck) {
        try {
            rep = svt_size_crosschecked(o.s, o.delta, o.t, o.parity, 24, workers);
        } catch (const ConsistencyError& e) {
            err << "grsum: " << e.what() << '\n';
            return disagreement;
        }
    } else {
        rep = svt_size_crosschecked(o.s, o.delta, o.t, o.parity, -1, workers);
        rep.closed_form_total.reset();
    }
    out << rep.to_json() << '\n';
    if (!rep.methods_agree()) {
        err << "grsum: svt size methods disagree\n";
        return disagreement;
    }
    return ok;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    if (o.n < 0 || o.n > max_enumeration_length) {
        throw InvalidArgument("oracle: n must lie in [0, " + std::to_string(max_enumeration_length) + "]");
    }
    if (o.oracle_parity && *o.oracle_parity != 0 && *o.oracle_parity != 1) {
        throw InvalidArgument("oracle: parity must be 0 or 1");
    }
    const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    const SvtCounts c = enumerate_svt({o.n, o.k, o.t, 0}, workers);
    nlohmann::json j = {
        {"n", o.n}, {"k", o.k}, {"t", mod_floor(o.t, o.k)}, {"size0", c.size0}, {"size1", c.size1},
    };
    if (o.oracle_parity) {
        j["parity"] = *o.oracle_parity;
        j["size"] = *o.oracle_parity == 0 ? c.size0 : c.size1;
    }
    out << j.dump() << '\n';
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    SuiteOptions so;
    if (o.kmax) {
        so.k_max = *o.kmax;
    }
    so.tol = o.tol;
    so.seed = o.seed;
    so.workers = std::max(1U, o.jobs);
    auto reports = run_suite(o.suite, so);
    out << to_json(reports) << '\n';
    if (all_passed(reports)) {
        return ok;
    }
    for (const auto& r : reports) {
        if (r.diagnostic || r.passed()) {
            continue;
        }
        err << "FAILED " << r.identity_id << " max_dev=" << r.max_abs_deviation;
        if (!r.counterexamples.empty()) {
            err << " first counterexample:";
            for (const auto& [name, value] : r.counterexamples.front().params) {
                err << ' ' << name << '=' << value;
            }
        }
        err << '\n';
    }
    return identity_failure;
}

int cmd_series(const Options& o, std::ostream& out) {
    if (o.terms < 1) {
        throw InvalidArgument("series: --terms must be >= 1");
    }
    out << series_csv_header() << '\n';
    if (o.kind == "c") {
        out << series_csv_row("c", o.n, o.r, std::nullopt, std::nullopt, c_series(o.n, o.r, o.terms)) << '\n';
    } else if (o.kind == "g") {
        const GDecomposition g = g_decomposition(o.n, o.r, o.m, o.terms);
        for (std::size_t j = 0; j < g.parts.size(); ++j) {
            out << series_csv_row("g" + std::to_string(j), o.n, o.r, o.m, std::nullopt, g.parts[j]) << '\n';
        }
        out << series_csv_row("g", o.n, o.r, o.m, std::nullopt, g.total) << '\n';
        if (!g.term_mismatches.empty()) {
            throw ConsistencyError("g decomposition: term sums differ from c_s(n)");
        }
    } else {
        if (!o.series_s || !o.series_t) {
            throw InvalidArgument("series --kind f needs --s and --t");
        }
        const FAlphaResult f = f_alpha_s(*o.series_t, o.r, *o.series_s, o.terms);
        out << series_csv_row("f", o.n, o.r, o.series_s, o.series_t, f.result) << '\n';
        TruncatedSeriesResult printed = f.result;
        printed.target = f.printed_form;
        printed.abs_error = f.printed_abs_error;
        out << series_csv_row("f_printed", o.n, o.r, o.series_s, o.series_t, printed) << '\n';
    }
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Generalized Ramanujan sums and SVT code sizes", "grsum"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "Print the full sigma table for modulus k");
    table->add_option("--k", o.k, "Modulus")->required();
    table->add_option("--b", o.b, "0 for the direct sum, 1 for the coprime sum")->required()->check(CLI::Range(0, 1));
    table->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", o.out_path, "Write to a file instead of stdout");

    auto* value = app.add_subcommand("value", "Print a single sigma value");
    value->add_option("--k", o.k)->required();
    value->add_option("--s", o.s)->required();
    value->add_option("--t", o.t)->required();
    value->add_option("--b", o.b)->required()->check(CLI::NonNegativeNumber);

    auto* svt = app.add_subcommand("svt", "Size of SVT_{t,r}(s+delta, 2s+1)");
    svt->add_option("--s", o.s)->required();
    svt->add_option("--delta", o.delta)->default_val(0);
    svt->add_option("--t", o.t)->required();
    svt->add_option("--parity", o.parity)->required();
    svt->add_flag("--crosscheck", o.crosscheck, "Also run brute force and closed forms where they apply");

    auto* oracle = app.add_subcommand("oracle", "Brute-force SVT word counts");
    oracle->add_option("--n", o.n, "Word length")->required();
    oracle->add_option("--k", o.k)->required();
    oracle->add_option("--t", o.t)->required();
    oracle->add_option("--parity", o.oracle_parity);

    auto* verify = app.add_subcommand("verify", "Run an identity verification suite");
    verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--kmax", o.kmax);
    verify->add_option("--tol", o.tol)->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", o.seed);
    verify->add_option("--jobs", o.jobs, "Worker threads; output does not depend on it");

    auto* series = app.add_subcommand("series", "Truncated series evaluation, CSV output");
    series->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"c", "g", "f"}));
    series->add_option("--n", o.n)->default_val(1);
    series->add_option("--r", o.r, "Exponent r, or alpha for kind f")->required();
    series->add_option("--s", o.series_s);
    series->add_option("--t", o.series_t);
    series->add_option("--m", o.m)->default_val(1);
    series->add_option("--terms", o.terms)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "grsum: " << e.what() << '\n';
        return usage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            err << "grsum: cannot open " << o.out_path << " for writing\n";
            return usage;
        }
        sink = &file;
    }

    try {
        if (*table) {
            return cmd_table(o, *sink);
        }
        if (*value) {
            return cmd_value(o, *sink);
        }
        if (*svt) {
            return cmd_svt(o, *sink, err);
        }
        if (*oracle) {
            return cmd_oracle(o, *sink);
        }
        if (*verify) {
            return cmd_verify(o, *sink, err);
        }
        return cmd_series(o, *sink);
    } catch (const InvalidArgument& e) {
        err << "grsum: " << e.what() << '\n';
        return usage;
    } catch (const CapacityError& e) {
        err << "grsum: " << e.what() << '\n';
        return usage;
    } catch (const ConsistencyError& e) {
        err << "grsum: " << e.what() << '\n';
        return *verify ? identity_failure : disagreement;
    }
}

} // namespace grsum::cli
