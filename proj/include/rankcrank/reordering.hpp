#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "statistics.hpp"
#include "tables.hpp"

namespace rankcrank {

/// Order used among partitions that share a crank (resp. rank).
enum class TieBreak { lex_descending, lex_ascending };

inline const char* to_string(TieBreak t) {
    return t == TieBreak::lex_descending ? "lex-desc" : "lex-asc";
}

inline TieBreak parse_tie_break(const std::string& s) {
    if (s == "lex-desc" || s == "lex-descending") return TieBreak::lex_descending;
    if (s == "lex-asc" || s == "lex-ascending") return TieBreak::lex_ascending;
    throw std::invalid_argument("unknown tie-break '" + s + "'");
}

/// tau_n as an explicit pairing: the i-th partition by ascending crank is sent
/// to the i-th partition by ascending rank.
class ReorderingMap {
public:
    struct Pair {
        std::size_t source;  // index into partitions(), i-th by crank
        std::size_t image;   // index into partitions(), i-th by rank
        int crank;
        int rank;

        [[nodiscard]] int difference() const noexcept { return crank - rank; }
    };

    ReorderingMap(int n, TieBreak tie_break, std::vector<Partition> partitions, std::vector<Pair> pairs)
        : n_(n), tie_break_(tie_break), partitions_(std::move(partitions)), pairs_(std::move(pairs)) {}

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] TieBreak tie_break() const noexcept { return tie_break_; }
    [[nodiscard]] const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    [[nodiscard]] const std::vector<Pair>& pairs() const noexcept { return pairs_; }

    [[nodiscard]] const Partition& source(const Pair& p) const { return partitions_[p.source]; }
    [[nodiscard]] const Partition& image(const Pair& p) const { return partitions_[p.image]; }

private:
    int n_;
    TieBreak tie_break_;
    std::vector<Partition> partitions_;  // canonical (lex-descending) order
    std::vector<Pair> pairs_;
};

inline ReorderingMap build_tau(int n, TieBreak tie_break = TieBreak::lex_descending) {
    if (n < 2) {
        throw std::invalid_argument("tau_n is only defined here for n >= 2 (got " + std::to_string(n) + ")");
    }
    std::vector<Partition> parts = enumerate_all(n);
    std::vector<int> cranks(parts.size());
    std::vector<int> ranks(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        cranks[i] = crank(parts[i]);
        ranks[i] = rank(parts[i]);
    }

    // Canonical indices already run in lex-descending order; reverse for ascending.
    std::vector<std::size_t> base(parts.size());
    std::iota(base.begin(), base.end(), std::size_t{0});
    if (tie_break == TieBreak::lex_ascending) std::reverse(base.begin(), base.end());

    auto by_crank = base;
    auto by_rank = base;
    std::stable_sort(by_crank.begin(), by_crank.end(),
                     [&](std::size_t a, std::size_t b) { return cranks[a] < cranks[b]; });
    std::stable_sort(by_rank.begin(), by_rank.end(),
                     [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });

    std::vector<ReorderingMap::Pair> pairs;
    pairs.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        pairs.push_back({by_crank[i], by_rank[i], cranks[by_crank[i]], ranks[by_rank[i]]});
    }
    return {n, tie_break, std::move(parts), std::move(pairs)};
}

/// Result of a per-pair check: the position of the first offending pair, if any.
struct TauCheck {
    bool pass = true;
    std::optional<std::size_t> witness;
};

/// crank(l) - rank(tau(l)) is 0 when crank(l) = 0, in {0,1} when crank(l) > 0,
/// and in {0,-1} when crank(l) < 0.
inline bool tau_case_holds(int crank_value, int rank_value) {
    const int d = crank_value - rank_value;
    if (crank_value == 0) return d == 0;
    if (crank_value > 0) return d == 0 || d == 1;
    return d == 0 || d == -1;
}

inline TauCheck verify_tau(const ReorderingMap& r) {
    for (std::size_t i = 0; i < r.pairs().size(); ++i) {
        const auto& p = r.pairs()[i];
        if (!tau_case_holds(p.crank, p.rank)) return {false, i};
    }
    return {};
}

/// Number of partitions with crank(l) - rank(tau(l)) = 1.
inline count_t ospt_via_tau(const ReorderingMap& r) {
    count_t c = 0;
    for (const auto& p : r.pairs()) {
        if (p.difference() == 1) ++c;
    }
    return c;
}

/// tau_n((n)) = (n).
inline bool fixed_point_check(const ReorderingMap& r) {
    // (n) is the first partition in canonical order.
    for (const auto& p : r.pairs()) {
        if (p.source == 0) return p.image == 0;
    }
    return false;
}

/// For the pair at 1-based position i: M(<= c-1) < i <= M(<= c) and
/// N(<= r-1) < i <= N(<= r), with c the crank of the source and r the rank of the image.
inline TauCheck verify_cumulation_brackets(const ReorderingMap& r, const StatTable& t) {
    const int n = r.n();
    // cum[v + n + 1] = cumulation at v, for v in [-n-1, n].
    std::vector<count_t> cum_m(2 * static_cast<std::size_t>(n) + 2);
    std::vector<count_t> cum_n(cum_m.size());
    for (int v = -n - 1; v <= n; ++v) {
        cum_m[static_cast<std::size_t>(v + n + 1)] = cum_crank(t, v, n);
        cum_n[static_cast<std::size_t>(v + n + 1)] = cum_rank(t, v, n);
    }
    const auto at = [n](const std::vector<count_t>& c, int v) { return c[static_cast<std::size_t>(v + n + 1)]; };
    for (std::size_t k = 0; k < r.pairs().size(); ++k) {
        const auto& p = r.pairs()[k];
        const auto i = static_cast<count_t>(k + 1);
        const bool crank_ok = at(cum_m, p.crank - 1) < i && i <= at(cum_m, p.crank);
        const bool rank_ok = at(cum_n, p.rank - 1) < i && i <= at(cum_n, p.rank);
        if (!crank_ok || !rank_ok) return {false, k};
    }
    return {};
}

/// {rank(tau(l)) > 0} is contained in {crank(l) > 0}, which is contained in {rank(tau(l)) >= 0}.
inline TauCheck verify_sign_containment(const ReorderingMap& r) {
    for (std::size_t k = 0; k < r.pairs().size(); ++k) {
        const auto& p = r.pairs()[k];
        if ((p.rank > 0 && p.crank <= 0) || (p.crank > 0 && p.rank < 0)) return {false, k};
    }
    return {};
}

/// Sum of positive ranks over all partitions, and the sum of rank(tau(l)) over
/// the partitions l with positive crank. The two agree.
struct PositiveRankSums {
    count_t positive_ranks = 0;
    count_t ranks_under_positive_cranks = 0;
};

inline PositiveRankSums positive_rank_sums(const ReorderingMap& r) {
    PositiveRankSums s;
    for (const auto& part : r.partitions()) {
        const int rk = rank(part);
        if (rk > 0) checked::add_to(s.positive_ranks, rk);
    }
    for (const auto& p : r.pairs()) {
        if (p.crank > 0) checked::add_to(s.ranks_under_positive_cranks, p.rank);
    }
    return s;
}

}  // namespace rankcrank
