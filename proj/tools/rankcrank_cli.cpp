// Command-line front end: tables, verification suites, tau_n listings,
// injection demos and ospt comparisons.
//
// Machine-readable output goes to stdout, narration to stderr.
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankcrank/rankcrank.hpp"

namespace {

using namespace rankcrank;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultMax = 60;
constexpr int kExtendedMax = 100;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

StatTable build_tables(int nmax, const std::string& backend) {
    if (backend == "enumerate") return build(nmax);
    if (backend == "accelerated") return build_accelerated(nmax);
    throw UsageError("unknown backend '" + backend + "'");
}

// ---------------------------------------------------------------- table

struct TableOptions {
    std::string stat = "both";
    int nmax = 0;
    int n = 0;
    std::string format = "csv";
    std::string backend = "enumerate";
};

int run_table(const TableOptions& o) {
    if ((o.nmax > 0) == (o.n > 0)) throw UsageError("table: give exactly one of --nmax or --n (both >= 1)");
    const auto stat = format::parse_stat(o.stat);
    const int top = o.n > 0 ? o.n : o.nmax;
    const int from = o.n > 0 ? o.n : 1;
    if (o.format == "text" && o.n > 0) {
        std::cout << format::partition_listing_text(o.n, stat);
        return 0;
    }
    const StatTable t = build_tables(top, o.backend);
    if (o.format == "csv") {
        std::cout << format::table_csv(t, from, top);
    } else if (o.format == "json") {
        std::cout << format::table_json(t, stat, from, top).dump(2) << '\n';
    } else if (o.format == "text") {
        std::cout << format::table_text(t, stat, from, top);
    } else {
        throw UsageError("unknown format '" + o.format + "'");
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string suite = "all";
    int nmax = kDefaultMax;
    int mmax = 6;
    bool extended = false;
    std::string seed_order = "lex-desc";
    std::string backend = "enumerate";
};

std::vector<TieBreak> tie_breaks_for(const std::string& s) {
    if (s == "both") return {TieBreak::lex_descending, TieBreak::lex_ascending};
    return {parse_tie_break(s)};
}

int run_verify(const VerifyOptions& o) {
    static const std::vector<std::string> suites{"identities", "injections", "tau", "bounds", "genfun", "all"};
    if (std::find(suites.begin(), suites.end(), o.suite) == suites.end()) {
        throw UsageError("unknown suite '" + o.suite + "'");
    }
    const bool table_only = o.suite == "identities" || o.suite == "bounds" || o.suite == "genfun";
    if (o.nmax < 1) throw UsageError("--nmax must be at least 1");
    if ((o.suite == "tau" || o.suite == "all") && o.nmax < 2) throw UsageError("tau_n requires n >= 2");
    if (o.nmax > kDefaultMax) {
        if (!o.extended) throw UsageError("--nmax above 60 requires --extended");
        if (!table_only) throw UsageError("--extended applies only to the identities, bounds and genfun suites");
        if (o.nmax > kExtendedMax) throw UsageError("--nmax is capped at 100");
    }
    if (o.mmax < 0) throw UsageError("--mmax must be non-negative");
    const auto tie_breaks = tie_breaks_for(o.seed_order);

    const auto start = std::chrono::steady_clock::now();
    const bool all = o.suite == "all";
    std::cerr << "building tables for 1 <= n <= " << o.nmax << " (" << o.backend << ")\n";
    const StatTable t = build_tables(o.nmax, o.backend);
    std::optional<RankSetCounts> q;
    if (all || o.suite == "identities" || o.suite == "injections") {
        std::cerr << "tallying rank-set counts\n";
        q.emplace(o.nmax);
    }

    VerifyReport report;
    report.suite = o.suite;
    report.range = {1, o.nmax, -o.nmax - 2, o.nmax + 2};
    nlohmann::json info = nlohmann::json::object();
    const auto append = [&](const std::string& name, SuiteResult r) {
        std::cerr << "suite " << name << ": " << r.checks.size() << " checks\n";
        for (auto& c : r.checks) report.checks.push_back(std::move(c));
        if (!r.info.is_null()) info[name] = std::move(r.info);
    };
    if (all || o.suite == "identities") append("identities", verify_identities(t, *q, o.nmax));
    if (all || o.suite == "injections") append("injections", verify_injections(t, *q, o.nmax, o.mmax));
    if (all || o.suite == "tau") append("tau", verify_tau_suite(t, o.nmax, tie_breaks));
    if (all || o.suite == "bounds") append("bounds", verify_bounds(t, o.nmax, o.nmax));
    if (all || o.suite == "genfun") append("genfun", verify_genfun(t, o.nmax));
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    if (!info.empty()) report.info = info;
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();

    std::cout << nlohmann::json(report).dump(2) << '\n';
    int failed = 0;
    for (const auto& c : report.checks) {
        std::cerr << (c.pass ? "  pass  " : "  FAIL  ") << c.id;
        if (!c.pass) std::cerr << "  witness " << c.witness.dump();
        std::cerr << '\n';
        failed += c.pass ? 0 : 1;
    }
    std::cerr << (failed ? std::to_string(failed) + " check(s) failed" : "all checks passed") << " in "
              << report.elapsed_ms << " ms\n";
    return failed ? kExitFail : 0;
}

// ---------------------------------------------------------------- tau

int run_tau(int n, const std::string& fmt, const std::string& seed_order) {
    if (n < 2) throw UsageError("tau_n requires n >= 2");
    const ReorderingMap r = build_tau(n, parse_tie_break(seed_order));
    if (fmt == "text") {
        std::cout << format::tau_text(r);
    } else if (fmt == "csv") {
        std::cout << format::tau_csv(r);
    } else if (fmt == "json") {
        std::cout << format::tau_json(r).dump(2) << '\n';
    } else {
        throw UsageError("unknown format '" + fmt + "'");
    }
    return 0;
}

// ---------------------------------------------------------------- inject

int run_inject(int m, int n, const std::string& which, const std::string& symbol_text) {
    if (m < 0) throw UsageError("--m must be non-negative");
    if (n < 1) throw UsageError("--n must be positive");
    if (which != "P2" && which != "P3") throw UsageError("--case must be P2 or P3");
    const SymbolClass wanted{Side::P, which == "P2" ? 2 : 3};

    MDurfeeSymbol s;
    if (!symbol_text.empty()) {
        try {
            s = parse_symbol(symbol_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (s.m != m) throw UsageError("symbol rectangle implies m = " + std::to_string(s.m));
        if (s.weight() != n) throw UsageError("symbol has weight " + std::to_string(s.weight()));
        const auto c = classify(s, Side::P);
        if (!c || *c != wanted) {
            throw UsageError("symbol " + to_string(s) + " is not in " + which +
                             (c ? " (it is in " + to_string(*c) + ")" : " (rank below -m+1)"));
        }
    } else {
        bool found = false;
        for_each_partition(n, [&](PartsView p) {
            if (found) return;
            auto candidate = to_symbol(Partition::from_trusted(p, n), m);
            const auto c = classify(candidate, Side::P);
            if (c && *c == wanted) {
                s = std::move(candidate);
                found = true;
            }
        });
        if (!found) throw UsageError(which + " is empty for m = " + std::to_string(m) + ", n = " + std::to_string(n));
    }

    const MDurfeeSymbol image = theta(s);
    const MDurfeeSymbol back = wanted.index == 2 ? sigma(image) : pi(image);
    const auto image_class = classify(image, Side::Q);
    std::cout << "m = " << m << ", n = " << n << '\n'
              << "input     " << to_string(s) << "  " << to_string(from_symbol(s)) << "  class " << which << '\n'
              << "image     " << to_string(image) << "  " << to_string(from_symbol(image)) << "  class "
              << (image_class ? to_string(*image_class) : "none") << '\n'
              << "recovered " << to_string(back) << "  " << to_string(from_symbol(back)) << '\n';
    if (back != s) {
        std::cerr << "round trip failed\n";
        return kExitFail;
    }
    return 0;
}

// ---------------------------------------------------------------- ospt

int run_ospt(int max_n, const std::string& methods_csv, const std::string& fmt) {
    if (max_n < 1) throw UsageError("--max-n must be positive");
    if (max_n > kExtendedMax) throw UsageError("--max-n is capped at 100");
    bool use_moments = false;
    bool use_tau = false;
    bool use_genfun = false;
    std::stringstream ss(methods_csv);
    for (std::string m; std::getline(ss, m, ',');) {
        if (m == "moments") use_moments = true;
        else if (m == "tau") use_tau = true;
        else if (m == "genfun") use_genfun = true;
        else throw UsageError("unknown method '" + m + "'");
    }
    if (use_tau && max_n > kDefaultMax) throw UsageError("the tau method is limited to n <= 60");

    const StatTable t = build(max_n);
    const std::optional<TruncatedSeries> series =
        use_genfun ? std::optional<TruncatedSeries>(ospt_series(max_n)) : std::nullopt;

    bool agree = true;
    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::vector<std::string>> text{{"n"}};
    if (use_moments) text[0].push_back("moments");
    if (use_tau) text[0].push_back("tau");
    if (use_genfun) text[0].push_back("genfun");
    text[0].push_back("agree");
    for (int n = 1; n <= max_n; ++n) {
        nlohmann::json row{{"n", n}};
        std::vector<count_t> values;
        std::vector<std::string> line{std::to_string(n)};
        if (use_moments) {
            const count_t v = ospt_moments(t, n);
            row["moments"] = v;
            values.push_back(v);
            line.push_back(std::to_string(v));
        }
        if (use_tau) {
            if (n >= 2) {
                const count_t v = ospt_via_tau(build_tau(n));
                row["tau"] = v;
                values.push_back(v);
                line.push_back(std::to_string(v));
            } else {
                row["tau"] = nullptr;
                line.push_back("-");
            }
        }
        if (use_genfun) {
            const count_t v = (*series)[n];
            row["genfun"] = v;
            values.push_back(v);
            line.push_back(std::to_string(v));
        }
        const bool same = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
        row["agree"] = same;
        line.push_back(same ? "yes" : "NO");
        // n = 1 is reported but does not enter the verdict.
        if (n >= 2) agree = agree && same;
        rows.push_back(row);
        text.push_back(line);
    }
    if (fmt == "json") {
        std::cout << nlohmann::json{{"max_n", max_n}, {"rows", rows}, {"verdict", agree ? "agree" : "disagree"}}.dump(2)
                  << '\n';
    } else if (fmt == "text") {
        std::cout << format::detail::align(text) << "verdict: " << (agree ? "agree" : "disagree") << '\n';
    } else {
        throw UsageError("unknown format '" + fmt + "'");
    }
    std::cerr << "ospt comparison over 2 <= n <= " << max_n << ": " << (agree ? "agree" : "DISAGREE") << '\n';
    return agree ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank and crank statistics of integer partitions"};
    app.require_subcommand(1);

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Emit N(m,n) / M(m,n) tables");
    table_cmd->add_option("--stat", table.stat, "rank, crank or both")->check(CLI::IsMember({"rank", "crank", "both"}));
    table_cmd->add_option("--nmax", table.nmax, "Rows 1..nmax");
    table_cmd->add_option("--n", table.n, "A single row");
    table_cmd->add_option("--format", table.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
    table_cmd->add_option("--backend", table.backend, "enumerate or accelerated")
        ->check(CLI::IsMember({"enumerate", "accelerated"}));

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites; JSON report on stdout");
    verify_cmd->add_option("--suite", verify.suite, "identities, injections, tau, bounds, genfun or all");
    verify_cmd->add_option("--nmax", verify.nmax, "Largest n (default 60)");
    verify_cmd->add_option("--mmax", verify.mmax, "Largest m for the injection suite (default 6)");
    verify_cmd->add_flag("--extended", verify.extended, "Allow nmax up to 100 for table-only suites");
    verify_cmd->add_option("--seed-order", verify.seed_order, "tau tie-break: lex-desc, lex-asc or both")
        ->check(CLI::IsMember({"lex-desc", "lex-asc", "both"}));
    verify_cmd->add_option("--backend", verify.backend, "enumerate or accelerated")
        ->check(CLI::IsMember({"enumerate", "accelerated"}));

    int tau_n = 0;
    std::string tau_format = "text";
    std::string tau_order = "lex-desc";
    auto* tau_cmd = app.add_subcommand("tau", "List the re-ordering tau_n");
    tau_cmd->add_option("--n", tau_n, "n >= 2")->required();
    tau_cmd->add_option("--format", tau_format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    tau_cmd->add_option("--seed-order", tau_order, "lex-desc or lex-asc")->check(CLI::IsMember({"lex-desc", "lex-asc"}));

    int inj_m = 0;
    int inj_n = 0;
    std::string inj_case;
    std::string inj_symbol;
    auto* inject_cmd = app.add_subcommand("inject", "Apply theta2/theta3 to a symbol and invert it");
    inject_cmd->add_option("--m", inj_m)->required();
    inject_cmd->add_option("--n", inj_n)->required();
    inject_cmd->add_option("--case", inj_case, "P2 or P3")->required();
    inject_cmd->add_option("--symbol", inj_symbol, "e.g. \"[5,5,3,1,1 | 2,2,1]_(5x3)\"");

    int ospt_max = 0;
    std::string ospt_methods = "moments,tau,genfun";
    std::string ospt_format = "text";
    auto* ospt_cmd = app.add_subcommand("ospt", "Compare ospt(n) computed several ways");
    ospt_cmd->add_option("--max-n", ospt_max)->required();
    ospt_cmd->add_option("--methods", ospt_methods, "Comma list of moments, tau, genfun");
    ospt_cmd->add_option("--format", ospt_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*table_cmd) return run_table(table);
        if (*verify_cmd) return run_verify(verify);
        if (*tau_cmd) return run_tau(tau_n, tau_format, tau_order);
        if (*inject_cmd) return run_inject(inj_m, inj_n, inj_case, inj_symbol);
        if (*ospt_cmd) return run_ospt(ospt_max, ospt_methods, ospt_format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
