#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <utility>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "injections.hpp"
#include "partition.hpp"
#include "reordering.hpp"
#include "series.hpp"
#include "statistics.hpp"
#include "symbol.hpp"
#include "tables.hpp"

namespace rankcrank {

struct CheckResult {
    std::string id;
    bool pass = true;
    nlohmann::json witness;  // null unless the check failed

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ReportRange {
    int n_min = 1;
    int n_max = 1;
    int m_min = 0;
    int m_max = 0;

    friend bool operator==(const ReportRange&, const ReportRange&) = default;
};

struct VerifyReport {
    std::string suite;
    ReportRange range;
    std::vector<CheckResult> checks;
    std::int64_t elapsed_ms = 0;
    nlohmann::json info;  // informational output, never pass/fail

    [[nodiscard]] bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

inline void to_json(nlohmann::json& j, const CheckResult& c) {
    j = nlohmann::json{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}};
}

inline void from_json(const nlohmann::json& j, CheckResult& c) {
    c.id = j.at("id").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw std::invalid_argument("bad check status " + status);
    c.pass = status == "pass";
    c.witness = j.at("witness");
}

inline void to_json(nlohmann::json& j, const ReportRange& r) {
    j = nlohmann::json{{"n_min", r.n_min}, {"n_max", r.n_max}, {"m_min", r.m_min}, {"m_max", r.m_max}};
}

inline void from_json(const nlohmann::json& j, ReportRange& r) {
    j.at("n_min").get_to(r.n_min);
    j.at("n_max").get_to(r.n_max);
    j.at("m_min").get_to(r.m_min);
    j.at("m_max").get_to(r.m_max);
}

inline void to_json(nlohmann::json& j, const VerifyReport& r) {
    j = nlohmann::json{{"suite", r.suite}, {"range", r.range}, {"checks", r.checks}, {"elapsed_ms", r.elapsed_ms}};
    if (!r.info.is_null()) j["info"] = r.info;
}

inline void from_json(const nlohmann::json& j, VerifyReport& r) {
    j.at("suite").get_to(r.suite);
    j.at("range").get_to(r.range);
    j.at("checks").get_to(r.checks);
    j.at("elapsed_ms").get_to(r.elapsed_ms);
    r.info = j.contains("info") ? j.at("info") : nlohmann::json();
}

/// Collects checks in registration order; each keeps its first counterexample.
class CheckLog {
public:
    /// Handle for a declared check, for use in hot loops.
    struct Id {
        std::size_t index;
    };

    Id declare(const std::string& id) {
        const auto [it, inserted] = index_.emplace(id, results_.size());
        if (inserted) results_.push_back({id, true, nullptr});
        return {it->second};
    }

    /// Records one instance of a check. The witness is only built on the first failure.
    template <class Witness>
    void expect(Id id, bool ok, Witness&& witness) {
        auto& r = results_[id.index];
        if (!ok && r.pass) {
            r.pass = false;
            r.witness = witness();
        }
    }

    template <class Witness>
    void expect(const std::string& id, bool ok, Witness&& witness) {
        expect(declare(id), ok, std::forward<Witness>(witness));
    }

    [[nodiscard]] std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
    std::map<std::string, std::size_t> index_;
};

struct SuiteResult {
    std::vector<CheckResult> checks;
    nlohmann::json info;
};

/// Identities and inequalities that need only the tables and rank-set counts,
/// over 1 <= n <= nmax and m in [-n-2, n+2].
inline SuiteResult verify_identities(const StatTable& t, const RankSetCounts& q, int nmax) {
    if (nmax > t.nmax() || nmax > q.nmax()) throw std::invalid_argument("verify_identities: tables too small");
    const auto p = partition_counts(nmax);
    CheckLog log;
    for (const char* id : {"identities.rank_row_sum", "identities.crank_row_sum", "identities.rank_symmetry",
                           "identities.crank_symmetry", "identities.rank_set_relation",
                           "identities.rank_cumulation_complement", "identities.crank_cumulation_complement",
                           "identities.cumulation_gap", "identities.rank_below_crank",
                           "identities.crank_below_shifted_rank", "identities.reflected_inequalities",
                           "identities.form_equivalence", "identities.rank_set_dominates_rank_tail"}) {
        log.declare(id);
    }
    const auto at = [](int m, int n) { return nlohmann::json{{"m", m}, {"n", n}}; };

    for (int n = 1; n <= nmax; ++n) {
        const count_t pn = p[n];
        log.expect("identities.rank_row_sum", t.row_total(n) == pn, [&] {
            return nlohmann::json{{"n", n}, {"row_sum", t.row_total(n)}, {"p", pn}};
        });
        log.expect("identities.crank_row_sum", t.crank_row_total(n) == pn, [&] {
            return nlohmann::json{{"n", n}, {"row_sum", t.crank_row_total(n)}, {"p", pn}};
        });

        for (int m = -n - 2; m <= n + 2; ++m) {
            const count_t nle = cum_rank(t, m, n);
            const count_t nle_prev = cum_rank(t, m - 1, n);
            const count_t nle_next = cum_rank(t, m + 1, n);
            const count_t mle = cum_crank(t, m, n);
            const count_t qm = q.q(m, n);

            log.expect("identities.rank_symmetry", t.rank_count(m, n) == t.rank_count(-m, n),
                       [&] { return at(m, n); });
            log.expect("identities.crank_symmetry", t.crank_count(m, n) == t.crank_count(-m, n),
                       [&] { return at(m, n); });
            log.expect("identities.rank_set_relation", mle == qm, [&] {
                auto w = at(m, n);
                w["M_le"] = mle;
                w["q"] = qm;
                return w;
            });
            log.expect("identities.rank_cumulation_complement", nle_next == pn - p_ge(t, m + 2, n),
                       [&] { return at(m, n); });
            log.expect("identities.crank_cumulation_complement", mle == pn - q.q(-m - 1, n),
                       [&] { return at(m, n); });
            log.expect("identities.cumulation_gap",
                       nle_next - mle == q.q(-m - 1, n) - p_ge(t, m + 2, n), [&] { return at(m, n); });

            if (m < 0) {
                log.expect("identities.rank_below_crank", nle <= mle, [&] {
                    auto w = at(m, n);
                    w["N_le"] = nle;
                    w["M_le"] = mle;
                    return w;
                });
                log.expect("identities.crank_below_shifted_rank", mle <= nle_next, [&] {
                    auto w = at(m, n);
                    w["M_le"] = mle;
                    w["N_le_next"] = nle_next;
                    return w;
                });
            } else {
                const bool reflected = nle >= mle && mle >= nle_prev;
                log.expect("identities.reflected_inequalities", reflected, [&] { return at(m, n); });
                const int neg = -m - 1;
                const bool negative_form = cum_rank(t, neg, n) <= cum_crank(t, neg, n) &&
                                           cum_crank(t, neg, n) <= cum_rank(t, neg + 1, n);
                log.expect("identities.form_equivalence", reflected == negative_form,
                           [&] { return at(m, n); });
                log.expect("identities.rank_set_dominates_rank_tail", qm >= p_ge(t, -m + 1, n), [&] {
                    auto w = at(m, n);
                    w["q"] = qm;
                    w["p_ge"] = p_ge(t, -m + 1, n);
                    return w;
                });
            }
        }
    }
    return {log.take(), nullptr};
}

namespace detail {
using wide = __int128;

/// Decides pi * spt >= sqrt(6n) * p(n) with rational brackets of pi:
/// 103993/33102 < pi < 355/113. Returns 1 (holds), 0 (fails) or -1 (undecided).
inline int spt_lower_bound_holds(count_t spt_value, count_t pn, int n) {
    const wide lhs_lo = wide(103993) * 103993 * spt_value * spt_value;
    const wide rhs_lo = wide(6) * n * 33102 * 33102 * pn * pn;
    if (lhs_lo >= rhs_lo) return 1;
    const wide lhs_hi = wide(355) * 355 * spt_value * spt_value;
    const wide rhs_hi = wide(6) * n * 113 * 113 * pn * pn;
    if (lhs_hi < rhs_hi) return 0;
    return -1;
}
}  // namespace detail

/// Moment identities and upper/lower bounds, plus informational ratio trends.
/// `direct_spt_max` limits the enumeration-based smallest-part tally.
inline SuiteResult verify_bounds(const StatTable& t, int nmax, int direct_spt_max) {
    if (nmax > t.nmax()) throw std::invalid_argument("verify_bounds: table too small");
    using detail::wide;
    const auto p = partition_counts(nmax);
    CheckLog log;
    for (const char* id : {"bounds.crank_second_moment", "bounds.spt_direct_tally", "bounds.spt_moment_difference",
                           "bounds.even_moment_dominance", "bounds.ospt_upper", "bounds.ospt_positive",
                           "bounds.spt_sqrt_2n", "bounds.spt_upper_sqrt_n", "bounds.spt_lower_sqrt_6n_over_pi",
                           "bounds.spt_below_abs_crank", "bounds.abs_crank_sqrt_2n"}) {
        log.declare(id);
    }
    nlohmann::json trends = nlohmann::json::array();

    for (int n = 1; n <= nmax; ++n) {
        const count_t pn = p[n];
        const count_t n2 = moment_rank(t, 2, n);
        const count_t m2 = moment_crank(t, 2, n);
        const count_t spt_n = spt(t, n);
        const count_t ospt_n = ospt_moments(t, n);
        const count_t abs_crank = abs_crank_sum(t, n);
        const auto at_n = [&] { return nlohmann::json{{"n", n}}; };

        log.expect("bounds.crank_second_moment", m2 == checked::mul(2 * n, pn), [&] {
            return nlohmann::json{{"n", n}, {"M2", m2}, {"2np", 2 * n * pn}};
        });
        if (n <= direct_spt_max) {
            const count_t direct = spt_direct(n);
            log.expect("bounds.spt_direct_tally", direct == spt_n, [&] {
                return nlohmann::json{{"n", n}, {"moments", spt_n}, {"direct", direct}};
            });
        }
        log.expect("bounds.spt_moment_difference", 2 * spt_n == m2 - n2, at_n);
        for (int k = 1; k <= 3; ++k) {
            const count_t mk = moment_crank(t, 2 * k, n);
            const count_t nk = moment_rank(t, 2 * k, n);
            log.expect("bounds.even_moment_dominance", mk > nk, [&] {
                return nlohmann::json{{"n", n}, {"k", k}, {"M", mk}, {"N", nk}};
            });
        }
        if (n >= 2) {
            log.expect("bounds.ospt_upper", 2 * ospt_n <= pn - t.crank_count(0, n), [&] {
                return nlohmann::json{{"n", n}, {"ospt", ospt_n}, {"p", pn}, {"M0", t.crank_count(0, n)}};
            });
        }
        log.expect("bounds.ospt_positive", ospt_n > 0, at_n);
        log.expect("bounds.spt_sqrt_2n", wide(spt_n) * spt_n <= wide(2) * n * pn * pn, at_n);
        if (n >= 5) {
            log.expect("bounds.spt_upper_sqrt_n", wide(spt_n) * spt_n <= wide(n) * pn * pn, at_n);
            const int lower = detail::spt_lower_bound_holds(spt_n, pn, n);
            log.expect("bounds.spt_lower_sqrt_6n_over_pi", lower == 1, [&] {
                return nlohmann::json{{"n", n}, {"spt", spt_n}, {"decided", lower != -1}};
            });
        }
        log.expect("bounds.spt_below_abs_crank", spt_n <= abs_crank, at_n);
        log.expect("bounds.abs_crank_sqrt_2n", wide(abs_crank) * abs_crank <= wide(2) * n * pn * pn, at_n);

        // Ratios of the finite differences to their asymptotic main terms.
        nlohmann::json row{{"n", n}};
        const double pi = std::numbers::pi;
        const double dn = n;
        for (int m = -1; m >= -3; --m) {
            const double plain = double(cum_crank(t, m, n) - cum_rank(t, m, n)) /
                               (-(1.0 + 2.0 * m) * pi * pi / (96.0 * dn) * double(pn));
            const double shifted = double(cum_rank(t, m + 1, n) - cum_crank(t, m, n)) /
                               (pi / (4.0 * std::sqrt(6.0 * dn)) * double(pn));
            row["crank_minus_rank_ratio_m" + std::to_string(m)] = plain;
            row["shifted_rank_minus_crank_ratio_m" + std::to_string(m)] = shifted;
        }
        trends.push_back(row);
    }
    return {log.take(), nlohmann::json{{"asymptotic_ratio_trends", trends}}};
}

/// Series coefficients against the combinatorial values.
inline SuiteResult verify_genfun(const StatTable& t, int nmax) {
    if (nmax > t.nmax()) throw std::invalid_argument("verify_genfun: table too small");
    const auto p = partition_counts(nmax);
    CheckLog log;
    for (const char* id : {"genfun.euler_inverse_partition_counts", "genfun.ospt_series_matches_moments",
                           "genfun.ospt_series_positive", "genfun.truncation_stable"}) {
        log.declare(id);
    }
    const auto inv = euler_inverse(nmax);
    const auto series = ospt_series(nmax);
    for (int n = 0; n <= nmax; ++n) {
        log.expect("genfun.euler_inverse_partition_counts", inv[n] == p[n], [&] {
            return nlohmann::json{{"n", n}, {"series", inv[n]}, {"p", p[n]}};
        });
    }
    for (int n = 1; n <= nmax; ++n) {
        log.expect("genfun.ospt_series_positive", series[n] > 0,
                   [&] { return nlohmann::json{{"n", n}, {"coefficient", series[n]}}; });
        if (n >= 2) {
            log.expect("genfun.ospt_series_matches_moments", series[n] == ospt_moments(t, n), [&] {
                return nlohmann::json{{"n", n}, {"series", series[n]}, {"moments", ospt_moments(t, n)}};
            });
        }
    }
    log.expect("genfun.truncation_stable", ospt_series(nmax, 3) == series,
               [&] { return nlohmann::json{{"order", nmax}}; });
    nlohmann::json info{{"n1_series", series[1]}, {"n1_moments", ospt_moments(t, 1)}};
    return {log.take(), info};
}

/// Every property of tau_n for 2 <= n <= nmax under the given tie-breaks.
inline SuiteResult verify_tau_suite(const StatTable& t, int nmax, const std::vector<TieBreak>& tie_breaks) {
    if (nmax > t.nmax()) throw std::invalid_argument("verify_tau_suite: table too small");
    CheckLog log;
    for (const char* id : {"tau.case_condition", "tau.ospt_count_matches_moments", "tau.fixed_point",
                           "tau.cumulation_brackets", "tau.sign_containment", "tau.positive_rank_sum_transfer"}) {
        log.declare(id);
    }
    for (int n = 2; n <= nmax; ++n) {
        for (TieBreak tb : tie_breaks) {
            const ReorderingMap r = build_tau(n, tb);
            const auto pair_witness = [&](std::optional<std::size_t> k) {
                nlohmann::json w{{"n", n}, {"tie_break", to_string(tb)}};
                if (k) {
                    const auto& pr = r.pairs()[*k];
                    w["position"] = *k + 1;
                    w["lambda"] = to_string(r.source(pr));
                    w["image"] = to_string(r.image(pr));
                    w["crank"] = pr.crank;
                    w["rank"] = pr.rank;
                }
                return w;
            };
            const auto cases = verify_tau(r);
            log.expect("tau.case_condition", cases.pass, [&] { return pair_witness(cases.witness); });
            const count_t via_tau = ospt_via_tau(r);
            const count_t via_moments = ospt_moments(t, n);
            log.expect("tau.ospt_count_matches_moments", via_tau == via_moments, [&] {
                auto w = pair_witness(std::nullopt);
                w["tau"] = via_tau;
                w["moments"] = via_moments;
                return w;
            });
            log.expect("tau.fixed_point", fixed_point_check(r), [&] { return pair_witness(std::nullopt); });
            const auto brackets = verify_cumulation_brackets(r, t);
            log.expect("tau.cumulation_brackets", brackets.pass, [&] { return pair_witness(brackets.witness); });
            const auto signs = verify_sign_containment(r);
            log.expect("tau.sign_containment", signs.pass, [&] { return pair_witness(signs.witness); });
            const auto sums = positive_rank_sums(r);
            log.expect("tau.positive_rank_sum_transfer", sums.positive_ranks == sums.ranks_under_positive_cranks,
                       [&] {
                           auto w = pair_witness(std::nullopt);
                           w["positive_ranks"] = sums.positive_ranks;
                           w["transferred"] = sums.ranks_under_positive_cranks;
                           return w;
                       });
        }
    }
    return {log.take(), nullptr};
}

/// Literal class conditions, written out separately from classify().
struct LiteralClasses {
    bool p1, p2, p3, q1, q2, q3;
};

inline LiteralClasses literal_classes(const MDurfeeSymbol& s) {
    const int j = s.j;
    const int b1 = s.beta_first();
    const int diff = s.beta_length() - s.alpha_length();
    const bool in_p = j == 0 || s.beta_length() + 1 <= s.alpha_length();
    const bool in_q = j == 0 || (j >= 1 && b1 == j);
    return {
        in_p && (j == 0 || (j >= 1 && b1 == j)),
        in_p && j >= 1 && b1 == j - 1,
        in_p && j >= 2 && b1 <= j - 2,
        in_q && (j == 0 || (j >= 1 && diff <= -1)),
        in_q && j >= 1 && diff >= 0 && s.alpha_first() < s.m + j,
        in_q && j >= 1 && diff >= 0 && s.alpha_first() == s.m + j,
    };
}

/// Symbol characterizations and the injection P(-m+1,n) -> Q(m,n), exhaustively
/// over 1 <= n <= nmax and 0 <= m <= mmax.
inline SuiteResult verify_injections(const StatTable& t, const RankSetCounts& q, int nmax, int mmax) {
    if (nmax > t.nmax() || nmax > q.nmax()) throw std::invalid_argument("verify_injections: tables too small");
    CheckLog log;
    const auto round_trip = log.declare("symbols.round_trip");
    const auto rank_criterion = log.declare("symbols.rank_criterion");
    const auto rank_set_criterion = log.declare("symbols.rank_set_criterion");
    const auto rank_formula = log.declare("symbols.rank_formula");
    const auto p_cover = log.declare("injections.p_cover");
    const auto q_cover = log.declare("injections.q_cover");
    const auto lands = log.declare("injections.lands_in_matching_class");
    const auto weight_preserved = log.declare("injections.weight_preserved");
    const auto inverse_round_trip = log.declare("injections.inverse_round_trip");
    const auto trailing_ones = log.declare("injections.theta3_trailing_ones");
    const auto injective = log.declare("injections.globally_injective");
    const auto count_gap = log.declare("injections.count_gap");
    for (int n = 1; n <= nmax; ++n) {
        const std::vector<Partition> all = enumerate_all(n);
        for (int m = 0; m <= mmax; ++m) {
            count_t p_members = 0;
            count_t q_members = 0;
            std::vector<std::vector<int>> images;
            for (const Partition& lambda : all) {
                const MDurfeeSymbol s = to_symbol(lambda, m);
                const auto w = [&] {
                    return nlohmann::json{{"n", n}, {"m", m}, {"lambda", to_string(lambda)}, {"symbol", to_string(s)}};
                };
                const int rk = rank(lambda);
                log.expect(round_trip, from_symbol(s) == lambda, w);
                log.expect(rank_criterion, rank_at_least(s) == (rk >= -m + 1), w);
                log.expect(rank_set_criterion, rank_set_has_m(s) == rank_set_contains(lambda, m), w);
                if (s.j >= 1) {
                    log.expect(rank_formula, rk == -m + s.alpha_length() - s.beta_length(), w);
                }

                const LiteralClasses lit = literal_classes(s);
                const auto pc = classify(s, Side::P);
                const auto qc = classify(s, Side::Q);
                const int p_hits = int(lit.p1) + int(lit.p2) + int(lit.p3);
                const int q_hits = int(lit.q1) + int(lit.q2) + int(lit.q3);
                const bool in_p = rk >= -m + 1;
                const bool in_q = rank_set_contains(lambda, m);
                log.expect(p_cover,
                           p_hits == (in_p ? 1 : 0) && pc.has_value() == in_p &&
                               (!pc || (pc->index == 1 ? lit.p1 : pc->index == 2 ? lit.p2 : lit.p3)),
                           w);
                log.expect(q_cover,
                           q_hits == (in_q ? 1 : 0) && qc.has_value() == in_q &&
                               (!qc || (qc->index == 1 ? lit.q1 : qc->index == 2 ? lit.q2 : lit.q3)),
                           w);
                if (in_q) ++q_members;
                if (!pc) continue;
                ++p_members;

                const MDurfeeSymbol img = theta(s);
                const auto img_class = classify(img, Side::Q);
                log.expect(lands,
                           img_class && img_class->index == pc->index && (pc->index != 1 || img == s), [&] {
                               auto x = w();
                               x["image"] = to_string(img);
                               return x;
                           });
                log.expect(weight_preserved, img.weight() == s.weight() && s.weight() == n, w);
                if (pc->index == 2) {
                    log.expect(inverse_round_trip, sigma(img) == s, w);
                } else if (pc->index == 3) {
                    log.expect(inverse_round_trip, pi(img) == s, w);
                    const auto& d = img.beta;
                    log.expect(trailing_ones,
                               d.size() >= 2 && d[d.size() - 1] == 1 && d[d.size() - 2] == 1, w);
                }
                const Partition as_partition = from_symbol(img);
                images.emplace_back(as_partition.parts().begin(), as_partition.parts().end());
            }
            std::sort(images.begin(), images.end());
            const auto dup = std::adjacent_find(images.begin(), images.end());
            log.expect(injective, dup == images.end(), [&] {
                return nlohmann::json{{"n", n}, {"m", m}, {"image", to_string(PartsView(*dup))}};
            });
            const count_t table_gap = q.q(m, n) - p_ge(t, -m + 1, n);
            log.expect(count_gap,
                       q_members == q.q(m, n) && p_members == p_ge(t, -m + 1, n) &&
                           q_members - p_members == table_gap && table_gap >= 0,
                       [&] {
                           return nlohmann::json{{"n", n}, {"m", m}, {"Q", q_members}, {"P", p_members},
                                                 {"table_gap", table_gap}};
                       });
        }
    }
    return {log.take(), nullptr};
}

}  // namespace rankcrank
