// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include <json.hpp>

#include "rankcrank/rankcrank.hpp"

namespace {

using namespace rankcrank;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(RANKCRANK_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string at(int m, int n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

bool suite_passes(const SuiteResult& r, Outcome& o) {
    for (const auto& c : r.checks) o.require(c.pass, c.id + " " + c.witness.dump());
    return o.pass;
}

// Tables shared by several criteria, built once.
const StatTable& table60() {
    static const StatTable t = build(60);
    return t;
}

const RankSetCounts& rank_sets45() {
    static const RankSetCounts q(45);
    return q;
}

Outcome criterion1() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto r = run_cli("tau --n 4");
    const double secs = seconds_since(t0);
    const std::string want =
        "lambda     crank(lambda)  tau_4(lambda)  rank(tau_4(lambda))  difference\n"
        "(1,1,1,1)  -4             (1,1,1,1)      -3                   -1\n"
        "(2,1,1)    -2             (2,1,1)        -1                   -1\n"
        "(3,1)      0              (2,2)          0                    0\n"
        "(2,2)      2              (3,1)          1                    1\n"
        "(4)        4              (4)            3                    1\n";
    o.require(r.code == 0, "exit code " + std::to_string(r.code));
    o.require(r.out == want, "output differs:\n" + r.out);
    o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = "five rows exact";
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto t0 = Clock::now();
    const StatTable t = build(60);
    for (int n = 1; n <= 60 && o.pass; ++n) {
        for (int m = -n - 2; m < 0; ++m) {
            const count_t nle = cum_rank(t, m, n), mle = cum_crank(t, m, n), nnext = cum_rank(t, m + 1, n);
            o.require(nle <= mle && mle <= nnext, at(m, n));
        }
    }
    const double default_secs = seconds_since(t0);
    o.require(default_secs < 120.0, "default range took " + std::to_string(default_secs) + " s");

    t0 = Clock::now();
    const auto r = run_cli("verify --suite identities --nmax 100 --extended");
    const double extended_secs = seconds_since(t0);
    o.require(r.code == 0, "extended run exit code " + std::to_string(r.code));
    if (r.code == 0) {
        const auto report = nlohmann::json::parse(r.out).get<VerifyReport>();
        int seen = 0;
        for (const auto& c : report.checks) {
            if (c.id == "identities.rank_below_crank" || c.id == "identities.crank_below_shifted_rank") {
                ++seen;
                o.require(c.pass, c.id + " " + c.witness.dump());
            }
        }
        o.require(seen == 2 && report.range.n_max == 100, "extended report incomplete");
    }
    o.require(extended_secs < 1800.0, "extended range took " + std::to_string(extended_secs) + " s");
    if (o.pass) {
        o.detail = "m<0, n<=60 in " + std::to_string(default_secs) + " s; n<=100 extended in " +
                   std::to_string(extended_secs) + " s";
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    const StatTable& t = table60();
    const RankSetCounts& q = rank_sets45();
    for (int n = 1; n <= 45; ++n) {
        for (int m = -n - 1; m <= n + 1; ++m) o.require(cum_crank(t, m, n) == q.q(m, n), at(m, n));
    }
    // Direct membership tally on a smaller range, independent of the tally class.
    for (int n = 1; n <= 20; ++n) {
        for (int m = -n - 1; m <= n + 1; ++m) o.require(cum_crank(t, m, n) == q_count(m, n), "direct " + at(m, n));
    }
    o.require(t.crank_count(0, 1) == -1 && cum_crank(t, -1, 1) == q.q(-1, 1), "n=1 convention");
    if (o.pass) o.detail = "M(<=m,n) = q(m,n) for |m|<=n+1, n<=45";
    return o;
}

Outcome criterion4() {
    Outcome o;
    const StatTable& t = table60();
    const RankSetCounts& q = rank_sets45();
    for (int n = 1; n <= 45; ++n) {
        const count_t pn = partition_count(n);
        for (int m = -n - 2; m <= n; ++m) {
            const count_t nnext = cum_rank(t, m + 1, n), mle = cum_crank(t, m, n);
            o.require(nnext - mle == q.q(-m - 1, n) - p_ge(t, m + 2, n), "gap " + at(m, n));
            o.require(nnext == pn - p_ge(t, m + 2, n), "rank complement " + at(m, n));
            o.require(mle == pn - q.q(-m - 1, n), "crank complement " + at(m, n));
        }
    }
    if (o.pass) o.detail = "m in [-n-2,n], n<=45";
    return o;
}

Outcome criterion5() {
    Outcome o;
    const auto t0 = Clock::now();
    const StatTable t = build(30);
    const RankSetCounts q(30);
    suite_passes(verify_injections(t, q, 30, 6), o);
    const double secs = seconds_since(t0);
    o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = "0<=m<=6, n<=30 exhaustive in " + std::to_string(secs) + " s";
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (int n = 2; n <= 40; ++n) {
        for (TieBreak tb : {TieBreak::lex_descending, TieBreak::lex_ascending}) {
            const auto check = verify_tau(build_tau(n, tb));
            o.require(check.pass, "n=" + std::to_string(n) + " " + to_string(tb));
        }
    }
    if (o.pass) o.detail = "2<=n<=40, lex-desc and lex-asc";
    return o;
}

Outcome criterion7() {
    Outcome o;
    const StatTable& t = table60();
    for (int n = 2; n <= 40; ++n) {
        for (TieBreak tb : {TieBreak::lex_descending, TieBreak::lex_ascending}) {
            o.require(ospt_via_tau(build_tau(n, tb)) == ospt_moments(t, n), "tau n=" + std::to_string(n));
        }
    }
    const auto s = ospt_series(60);
    for (int n = 2; n <= 60; ++n) o.require(s[n] == ospt_moments(t, n), "series n=" + std::to_string(n));
    if (o.pass) o.detail = "moments = tau (n<=40), moments = series (n<=60)";
    return o;
}

Outcome criterion8() {
    Outcome o;
    const StatTable& t = table60();
    for (int n = 1; n <= 60; ++n) {
        const count_t pn = partition_count(n);
        o.require(moment_crank(t, 2, n) == 2 * n * pn, "M2 n=" + std::to_string(n));
        const count_t by_moments = n * pn - moment_rank(t, 2, n) / 2;
        o.require(spt(t, n) == by_moments && by_moments == spt_direct(n), "spt n=" + std::to_string(n));
        for (int k = 1; k <= 3; ++k) {
            o.require(moment_crank(t, 2 * k, n) > moment_rank(t, 2 * k, n),
                      "k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    }
    if (o.pass) o.detail = "n<=60";
    return o;
}

Outcome criterion9() {
    Outcome o;
    const StatTable& t = table60();
    suite_passes(verify_bounds(t, 60, 60), o);
    o.require(ospt_moments(t, 4) == 2 && 2 * 2 == partition_count(4) - t.crank_count(0, 4), "tight case n=4");
    if (o.pass) o.detail = "all bounds n<=60, ospt(4)=2 tight";
    return o;
}

Outcome criterion10() {
    Outcome o;
    const StatTable& t = table60();
    const auto r = verify_bounds(t, 60, 0);
    const auto& trends = r.info["asymptotic_ratio_trends"];
    o.require(trends.is_array() && trends.size() == 60, "ratio report missing");
    for (const auto& row : trends) {
        for (const auto& [key, value] : row.items()) {
            if (key != "n") o.require(value.is_number() && std::isfinite(value.get<double>()), "ratio " + key);
        }
    }
    for (int n = 1; n <= 60; ++n) {
        for (int m = -n - 2; m < 0; ++m) {
            o.require(cum_crank(t, m, n) - cum_rank(t, m, n) >= 0, "first difference " + at(m, n));
            o.require(cum_rank(t, m + 1, n) - cum_crank(t, m, n) >= 0, "second difference " + at(m, n));
        }
    }
    if (o.pass) o.detail = "ratio report present; differences non-negative for m<0, n<=60";
    return o;
}

Outcome criterion11() {
    Outcome o;
    const StatTable a = build_accelerated(45);
    const StatTable e = build(45);
    for (int n = 1; n <= 45; ++n) {
        for (int m = -n; m <= n; ++m) {
            o.require(a.rank_count(m, n) == e.rank_count(m, n), "rank " + at(m, n));
            o.require(a.crank_count(m, n) == e.crank_count(m, n), "crank " + at(m, n));
        }
    }
    if (o.pass) o.detail = "every cell, n<=45";
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"tau_4 listing", criterion1},
        {"rank/crank cumulation inequalities", criterion2},
        {"crank cumulation equals rank-set count", criterion3},
        {"cumulation gap and complements", criterion4},
        {"injection suite", criterion5},
        {"tau_n case condition", criterion6},
        {"ospt three-way agreement", criterion7},
        {"moment identities", criterion8},
        {"bounds", criterion9},
        {"asymptotic substitute", criterion10},
        {"accelerated backend", criterion11},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = seconds_since(t0);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << index << "  " << name << "  (" << o.detail
                  << "; " << secs << " s)" << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
    return failed ? 1 : 0;
}
