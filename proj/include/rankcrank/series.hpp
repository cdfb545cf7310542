#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "checked.hpp"

namespace rankcrank {

/// Formal power series with exact integer coefficients, truncated after q^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(checked_size(order), 0) {}

    TruncatedSeries(int order, std::initializer_list<count_t> leading) : TruncatedSeries(order) {
        std::size_t k = 0;
        for (count_t c : leading) {
            if (k < coeffs_.size()) coeffs_[k] = c;
            ++k;
        }
    }

    /// sign * q^exponent, or zero when the exponent is past the truncation.
    static TruncatedSeries monomial(int order, int exponent, int sign = 1) {
        if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
        TruncatedSeries s(order);
        if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = sign;
        return s;
    }

    /// 1 / (1 - q^step) = 1 + q^step + q^{2 step} + ...
    static TruncatedSeries geometric(int order, int step = 1) {
        if (step < 1) throw std::invalid_argument("geometric: step must be positive");
        TruncatedSeries s(order);
        for (int k = 0; k <= order; k += step) s.coeffs_[static_cast<std::size_t>(k)] = 1;
        return s;
    }

    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<count_t>& coefficients() const noexcept { return coeffs_; }

    [[nodiscard]] count_t operator[](int k) const {
        return (k >= 0 && k <= order()) ? coeffs_[static_cast<std::size_t>(k)] : 0;
    }

    /// Adds sign * q^exponent in place; exponents past the truncation are dropped.
    void add_monomial(int exponent, count_t coefficient) {
        if (exponent < 0) throw std::invalid_argument("add_monomial: negative exponent");
        if (exponent <= order()) {
            checked::add_to(coeffs_[static_cast<std::size_t>(exponent)], coefficient);
        }
    }

    /// In-place multiplication by (1 - q^step).
    void multiply_one_minus(int step) {
        for (int k = order(); k >= step; --k) {
            coeffs_[k] = checked::sub(coeffs_[k], coeffs_[k - step]);
        }
    }

    /// In-place division by (1 - q^step).
    void divide_one_minus(int step) {
        for (int k = step; k <= order(); ++k) {
            checked::add_to(coeffs_[k], coeffs_[k - step]);
        }
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) checked::add_to(coeffs_[k], o.coeffs_[k]);
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = checked::sub(coeffs_[k], o.coeffs_[k]);
        return *this;
    }

    TruncatedSeries& operator*=(count_t scalar) {
        for (auto& c : coeffs_) c = checked::mul(c, scalar);
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, count_t s) { return a *= s; }
    friend TruncatedSeries operator*(count_t s, TruncatedSeries a) { return a *= s; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries r(a.order());
        const int n = a.order();
        for (int i = 0; i <= n; ++i) {
            const count_t ai = a.coeffs_[i];
            if (ai == 0) continue;
            for (int k = 0; i + k <= n; ++k) {
                if (b.coeffs_[k] != 0) checked::add_to(r.coeffs_[i + k], checked::mul(ai, b.coeffs_[k]));
            }
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static std::size_t checked_size(int order) {
        if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
        return static_cast<std::size_t>(order) + 1;
    }

    void require_same_order(const TruncatedSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("truncation orders differ");
    }

    std::vector<count_t> coeffs_;
};

/// 1/(q)_inf up to q^order, built as the product of 1/(1-q^k). Coefficients are p(n).
inline TruncatedSeries euler_inverse(int order) {
    TruncatedSeries s = TruncatedSeries::monomial(order, 0);
    for (int k = 1; k <= order; ++k) s.divide_one_minus(k);
    return s;
}

/// Double sum over (i, j) >= 0 multiplying 1/(q)_inf in the ospt generating
/// function. Each summand is expanded into four monomials. `extra_rows` widens
/// both loop cutoffs, which must not change any kept coefficient.
inline TruncatedSeries ospt_double_sum(int order, int extra_rows = 0) {
    TruncatedSeries s(order);
    const auto add_term = [&](long long e, long long a, long long b) {
        // q^e (1 - q^a)(1 - q^b)
        const long long exps[4] = {e, e + a, e + b, e + a + b};
        const int signs[4] = {1, -1, -1, 1};
        for (int t = 0; t < 4; ++t) {
            if (exps[t] <= order) s.add_monomial(static_cast<int>(exps[t]), signs[t]);
        }
    };
    // Both exponents below are increasing in i and j, and the second is the smaller.
    const auto low = [](long long i, long long j) { return 6 * i * i + 8 * i * j + 2 * j * j + 5 * i + 3 * j + 1; };
    for (long long i = 0, i_over = 0; i_over <= extra_rows; ++i) {
        if (low(i, 0) > order) ++i_over;
        for (long long j = 0, j_over = 0; j_over <= extra_rows; ++j) {
            if (low(i, j) > order) ++j_over;
            add_term(6 * i * i + 8 * i * j + 2 * j * j + 7 * i + 5 * j + 2, 4 * i + 2, 4 * i + 2 * j + 3);
            add_term(low(i, j), 2 * i + 1, 4 * i + 2 * j + 2);
        }
    }
    return s;
}

/// Generating function of ospt(n) truncated after q^order.
inline TruncatedSeries ospt_series(int order, int extra_rows = 0) {
    if (order < 1) throw std::invalid_argument("ospt_series: order must be at least 1");
    return euler_inverse(order) * ospt_double_sum(order, extra_rows);
}

}  // namespace rankcrank
