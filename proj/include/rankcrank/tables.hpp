#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "checked.hpp"
#include "partition.hpp"
#include "statistics.hpp"

namespace rankcrank {

enum class Provenance { enumerated, accelerated };

inline const char* to_string(Provenance p) {
    return p == Provenance::enumerated ? "enumerated" : "accelerated";
}

/// Exact counts N(m,n) (rank) and M(m,n) (crank) for 1 <= n <= nmax, |m| <= n.
///
/// Row n = 1 of the crank table holds the conventional values M(0,1) = -1,
/// M(1,1) = M(-1,1) = 1 rather than the statistic of the partition (1), whose
/// crank is -1. These are the values the crank generating function produces and
/// the ones every identity below relies on at n = 1.
class StatTable {
public:
    StatTable(int nmax, Provenance provenance) : nmax_(nmax), provenance_(provenance) {
        if (nmax < 1) throw std::invalid_argument("StatTable: nmax must be at least 1");
        rank_.resize(static_cast<std::size_t>(nmax) + 1);
        crank_.resize(static_cast<std::size_t>(nmax) + 1);
        for (int n = 0; n <= nmax; ++n) {
            rank_[n].assign(2 * static_cast<std::size_t>(n) + 1, 0);
            crank_[n].assign(2 * static_cast<std::size_t>(n) + 1, 0);
        }
    }

    [[nodiscard]] int nmax() const noexcept { return nmax_; }
    [[nodiscard]] Provenance provenance() const noexcept { return provenance_; }

    /// N(m,n); zero for |m| > n.
    [[nodiscard]] count_t rank_count(int m, int n) const { return cell(rank_, m, n); }
    /// M(m,n); zero for |m| > n.
    [[nodiscard]] count_t crank_count(int m, int n) const { return cell(crank_, m, n); }

    count_t& rank_cell(int m, int n) { return mutable_cell(rank_, m, n); }
    count_t& crank_cell(int m, int n) { return mutable_cell(crank_, m, n); }

    /// Row sum of the rank table, which is p(n).
    [[nodiscard]] count_t row_total(int n) const {
        require_row(n);
        count_t s = 0;
        for (count_t v : rank_[n]) checked::add_to(s, v);
        return s;
    }

    [[nodiscard]] count_t crank_row_total(int n) const {
        require_row(n);
        count_t s = 0;
        for (count_t v : crank_[n]) checked::add_to(s, v);
        return s;
    }

    void require_row(int n) const {
        if (n < 1 || n > nmax_) {
            throw std::out_of_range("row n=" + std::to_string(n) + " outside table range 1.." +
                                    std::to_string(nmax_));
        }
    }

    friend bool operator==(const StatTable& a, const StatTable& b) {
        return a.nmax_ == b.nmax_ && a.rank_ == b.rank_ && a.crank_ == b.crank_;
    }

private:
    using Grid = std::vector<std::vector<count_t>>;

    count_t cell(const Grid& g, int m, int n) const {
        require_row(n);
        if (m < -n || m > n) return 0;
        return g[n][static_cast<std::size_t>(m + n)];
    }

    count_t& mutable_cell(Grid& g, int m, int n) {
        require_row(n);
        if (m < -n || m > n) throw std::out_of_range("statistic value outside |m| <= n");
        return g[n][static_cast<std::size_t>(m + n)];
    }

    int nmax_;
    Provenance provenance_;
    Grid rank_;
    Grid crank_;
};

inline void apply_n1_crank_convention(StatTable& t) {
    t.crank_cell(-1, 1) = 1;
    t.crank_cell(0, 1) = -1;
    t.crank_cell(1, 1) = 1;
}

/// Fills one row by streaming every partition of n.
inline void tally_row(StatTable& t, int n) {
    for_each_partition(n, [&](PartsView p) {
        checked::add_to(t.rank_cell(rank(p), n), 1);
        checked::add_to(t.crank_cell(crank(p), n), 1);
    });
}

/// Tables by exhaustive enumeration; the reference backend.
inline StatTable build(int nmax) {
    StatTable t(nmax, Provenance::enumerated);
    for (int n = 1; n <= nmax; ++n) tally_row(t, n);
    apply_n1_crank_convention(t);
    return t;
}

namespace detail {

/// Bivariate series sum c(m,n) z^m q^n for 0 <= n <= order and |m| <= order.
class LaurentGrid {
public:
    explicit LaurentGrid(int order)
        : order_(order), width_(2 * order + 1),
          c_(static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(width_), 0) {}

    count_t& at(int m, int n) { return c_[static_cast<std::size_t>(n) * width_ + (m + order_)]; }
    [[nodiscard]] count_t get(int m, int n) const {
        if (m < -order_ || m > order_ || n < 0 || n > order_) return 0;
        return c_[static_cast<std::size_t>(n) * width_ + (m + order_)];
    }

    /// Division by (1 - z^zexp q^qexp), in place.
    void divide_one_minus(int zexp, int qexp) {
        for (int n = qexp; n <= order_; ++n) {
            for (int m = -order_; m <= order_; ++m) {
                const int src = m - zexp;
                if (src < -order_ || src > order_) continue;
                const count_t v = get(src, n - qexp);
                if (v != 0) checked::add_to(at(m, n), v);
            }
        }
    }

    /// Multiplication by (1 - q^qexp), in place.
    void multiply_one_minus(int qexp) {
        for (int n = order_; n >= qexp; --n) {
            for (int m = -order_; m <= order_; ++m) {
                const count_t v = get(m, n - qexp);
                if (v != 0) at(m, n) = checked::sub(at(m, n), v);
            }
        }
    }

    LaurentGrid& operator+=(const LaurentGrid& o) {
        for (std::size_t k = 0; k < c_.size(); ++k) checked::add_to(c_[k], o.c_[k]);
        return *this;
    }

private:
    int order_;
    int width_;
    std::vector<count_t> c_;
};

}  // namespace detail

/// Tables from the two-variable generating functions
///   rank:  sum_k q^{k^2} / ((zq;q)_k (q/z;q)_k)
///   crank: (q;q)_inf / ((zq;q)_inf (q/z;q)_inf)
/// The crank product yields the n = 1 convention on its own.
inline StatTable build_accelerated(int nmax) {
    StatTable t(nmax, Provenance::accelerated);

    detail::LaurentGrid rank_gf(nmax);
    for (int k = 1; k * k <= nmax; ++k) {
        detail::LaurentGrid term(nmax);
        term.at(0, k * k) = 1;
        for (int i = 1; i <= k; ++i) {
            term.divide_one_minus(+1, i);
            term.divide_one_minus(-1, i);
        }
        rank_gf += term;
    }

    detail::LaurentGrid crank_gf(nmax);
    crank_gf.at(0, 0) = 1;
    for (int i = 1; i <= nmax; ++i) {
        crank_gf.divide_one_minus(+1, i);
        crank_gf.divide_one_minus(-1, i);
        crank_gf.multiply_one_minus(i);
    }

    for (int n = 1; n <= nmax; ++n) {
        for (int m = -n; m <= n; ++m) {
            t.rank_cell(m, n) = rank_gf.get(m, n);
            t.crank_cell(m, n) = crank_gf.get(m, n);
        }
    }
    return t;
}

/// N(<= m, n).
inline count_t cum_rank(const StatTable& t, int m, int n) {
    t.require_row(n);
    count_t s = 0;
    for (int r = -n; r <= std::min(m, n); ++r) checked::add_to(s, t.rank_count(r, n));
    return s;
}

/// M(<= m, n).
inline count_t cum_crank(const StatTable& t, int m, int n) {
    t.require_row(n);
    count_t s = 0;
    for (int r = -n; r <= std::min(m, n); ++r) checked::add_to(s, t.crank_count(r, n));
    return s;
}

/// p(m, n): partitions of n with rank >= m.
inline count_t p_ge(const StatTable& t, int m, int n) {
    t.require_row(n);
    count_t s = 0;
    for (int r = std::max(m, -n); r <= n; ++r) checked::add_to(s, t.rank_count(r, n));
    return s;
}

inline count_t moment_rank(const StatTable& t, int k, int n) {
    if (k < 0) throw std::invalid_argument("moment order must be non-negative");
    t.require_row(n);
    count_t s = 0;
    for (int m = -n; m <= n; ++m) {
        checked::add_to(s, checked::mul(checked::pow(m, k), t.rank_count(m, n)));
    }
    return s;
}

inline count_t moment_crank(const StatTable& t, int k, int n) {
    if (k < 0) throw std::invalid_argument("moment order must be non-negative");
    t.require_row(n);
    count_t s = 0;
    for (int m = -n; m <= n; ++m) {
        checked::add_to(s, checked::mul(checked::pow(m, k), t.crank_count(m, n)));
    }
    return s;
}

/// spt(n) = n p(n) - N_2(n)/2.
inline count_t spt(const StatTable& t, int n) {
    const count_t n2 = moment_rank(t, 2, n);
    return checked::sub(checked::mul(n, t.row_total(n)), n2 / 2);
}

/// Total number of smallest parts over all partitions of n, by enumeration.
inline count_t spt_direct(int n) {
    if (n < 1) throw std::invalid_argument("spt_direct: n must be positive");
    count_t s = 0;
    for_each_partition(n, [&](PartsView p) { checked::add_to(s, smallest_part_count(p)); });
    return s;
}

/// First positive crank moment minus first positive rank moment.
inline count_t ospt_moments(const StatTable& t, int n) {
    t.require_row(n);
    count_t s = 0;
    for (int m = 1; m <= n; ++m) {
        checked::add_to(s, checked::mul(m, checked::sub(t.crank_count(m, n), t.rank_count(m, n))));
    }
    return s;
}

/// Sum of |crank(lambda)| over the partitions of n. Row n = 1 of the table holds
/// the crank convention rather than the statistic, so that row is taken from
/// the partition (1) itself.
inline count_t abs_crank_sum(const StatTable& t, int n) {
    t.require_row(n);
    if (n == 1) return 1;
    count_t s = 0;
    for (int m = -n; m <= n; ++m) checked::add_to(s, checked::mul(std::abs(m), t.crank_count(m, n)));
    return s;
}

/// q(m, n) for 1 <= n <= nmax and every integer m, tallied by enumeration.
///
/// Each partition contributes its finite rank-set entries j - lambda_{j+1}
/// (distinct and below the length L) plus the tail L, L+1, ..., which is kept
/// as a running prefix count.
class RankSetCounts {
public:
    explicit RankSetCounts(int nmax) : nmax_(nmax) {
        if (nmax < 1) throw std::invalid_argument("RankSetCounts: nmax must be at least 1");
        rows_.resize(static_cast<std::size_t>(nmax) + 1);
        for (int n = 1; n <= nmax; ++n) {
            // Offsets cover m in [-n, n]; below -n is 0, above n is p(n).
            std::vector<count_t> entries(2 * static_cast<std::size_t>(n) + 1, 0);
            std::vector<count_t> tail_starts(2 * static_cast<std::size_t>(n) + 1, 0);
            for_each_partition(n, [&](PartsView p) {
                const int len = static_cast<int>(p.size());
                for (int j = 0; j < len; ++j) {
                    checked::add_to(entries[static_cast<std::size_t>(j - p[j] + n)], 1);
                }
                checked::add_to(tail_starts[static_cast<std::size_t>(len + n)], 1);
            });
            auto& row = rows_[n];
            row.resize(entries.size());
            count_t running_tail = 0;
            for (std::size_t k = 0; k < entries.size(); ++k) {
                checked::add_to(running_tail, tail_starts[k]);
                row[k] = checked::add(entries[k], running_tail);
            }
        }
    }

    [[nodiscard]] int nmax() const noexcept { return nmax_; }

    [[nodiscard]] count_t q(int m, int n) const {
        if (n < 1 || n > nmax_) throw std::out_of_range("q(m,n): n outside counted range");
        if (m < -n) return 0;
        if (m > n) return rows_[n].back();
        return rows_[n][static_cast<std::size_t>(m + n)];
    }

private:
    int nmax_;
    std::vector<std::vector<count_t>> rows_;
};

/// q(m, n) straight from the membership predicate.
inline count_t q_count(int m, int n) {
    if (n < 1) throw std::invalid_argument("q_count: n must be positive");
    count_t s = 0;
    for_each_partition(n, [&](PartsView p) {
        if (rank_set_contains(p, m)) checked::add_to(s, 1);
    });
    return s;
}

}  // namespace rankcrank
