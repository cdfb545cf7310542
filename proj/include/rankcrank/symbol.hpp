#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"

namespace rankcrank {

/// The m-Durfee rectangle symbol (alpha, beta)_{(m+j) x j} of a partition.
///
/// The rectangle has m+j rows and j columns, with j maximal such that
/// lambda_{m+j} >= j. `alpha` lists the heights of the columns to the right of
/// the rectangle (each <= m+j); `beta` lists the rows below it (each <= j).
/// When the partition has at most m parts, j = 0 and alpha is its conjugate.
struct MDurfeeSymbol {
    int m = 0;
    int j = 0;
    std::vector<int> alpha;
    std::vector<int> beta;

    [[nodiscard]] int rows() const noexcept { return m + j; }
    [[nodiscard]] int alpha_length() const noexcept { return static_cast<int>(alpha.size()); }
    [[nodiscard]] int beta_length() const noexcept { return static_cast<int>(beta.size()); }
    [[nodiscard]] int alpha_first() const noexcept { return alpha.empty() ? 0 : alpha.front(); }
    /// beta_1, read as 0 when beta is empty.
    [[nodiscard]] int beta_first() const noexcept { return beta.empty() ? 0 : beta.front(); }

    [[nodiscard]] int weight() const noexcept {
        int w = j * (m + j);
        for (int a : alpha) w += a;
        for (int b : beta) w += b;
        return w;
    }

    friend bool operator==(const MDurfeeSymbol&, const MDurfeeSymbol&) = default;
};

namespace detail {
inline bool weakly_decreasing_within(const std::vector<int>& v, int bound) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1 || v[i] > bound) return false;
        if (i > 0 && v[i] > v[i - 1]) return false;
    }
    return true;
}
}  // namespace detail

inline bool is_valid(const MDurfeeSymbol& s) {
    if (s.m < 0 || s.j < 0) return false;
    if (s.j == 0 && !s.beta.empty()) return false;
    return detail::weakly_decreasing_within(s.alpha, s.m + s.j) &&
           detail::weakly_decreasing_within(s.beta, s.j);
}

inline void validate(const MDurfeeSymbol& s) {
    if (!is_valid(s)) {
        throw std::invalid_argument("invalid m-Durfee rectangle symbol");
    }
}

inline MDurfeeSymbol to_symbol(const Partition& lambda, int m) {
    if (m < 0) throw std::invalid_argument("to_symbol: m must be non-negative");
    if (lambda.empty()) throw std::domain_error("to_symbol: empty partition");

    MDurfeeSymbol s;
    s.m = m;
    int j = 0;
    while (lambda.part(m + j + 1) >= j + 1) {
        ++j;
    }
    s.j = j;

    // Row overhangs to the right of the rectangle; rows below m+j have length <= j.
    std::vector<int> overhang;
    for (int i = 1; i <= m + j; ++i) {
        const int r = lambda.part(i) - j;
        if (r <= 0) break;
        overhang.push_back(r);
    }
    const Partition cols = conjugate(PartsView(overhang));
    s.alpha.assign(cols.parts().begin(), cols.parts().end());
    for (int i = m + j + 1; i <= lambda.length(); ++i) {
        s.beta.push_back(lambda.part(i));
    }
    return s;
}

inline Partition from_symbol(const MDurfeeSymbol& s) {
    validate(s);
    const Partition overhang = conjugate(PartsView(s.alpha));
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(s.m + s.j) + s.beta.size());
    for (int i = 1; i <= s.m + s.j; ++i) {
        const int row = s.j + overhang.part(i);
        if (row == 0) break;
        parts.push_back(row);
    }
    parts.insert(parts.end(), s.beta.begin(), s.beta.end());
    return Partition(std::move(parts));
}

/// Structural test for rank(lambda) >= -m+1.
inline bool rank_at_least(const MDurfeeSymbol& s) {
    return s.j == 0 || s.beta_length() + 1 <= s.alpha_length();
}

/// Structural test for m belonging to the rank-set of lambda.
inline bool rank_set_has_m(const MDurfeeSymbol& s) {
    return s.j == 0 || s.beta_first() == s.j;
}

/// Two-row text form, e.g. "[4,3,3,2 | 3,2,2,2]_(5x3)". The rectangle size
/// carries m as rows - columns.
inline std::string to_string(const MDurfeeSymbol& s) {
    const auto row = [](const std::vector<int>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(v[i]);
        }
        return out;
    };
    return "[" + row(s.alpha) + " | " + row(s.beta) + "]_(" + std::to_string(s.m + s.j) + "x" +
           std::to_string(s.j) + ")";
}

/// Inverse of to_string; whitespace is ignored. Throws std::invalid_argument.
inline MDurfeeSymbol parse_symbol(std::string_view text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    const auto fail = [&]() -> MDurfeeSymbol {
        throw std::invalid_argument("malformed symbol: " + std::string(text));
    };
    const auto bar = t.find('|');
    const auto close = t.find(']');
    if (t.empty() || t.front() != '[' || bar == std::string::npos || close == std::string::npos ||
        bar > close || t.compare(close, 3, "]_(") != 0 || t.back() != ')') {
        return fail();
    }
    const auto numbers = [&](std::string_view s, std::vector<int>& out) {
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t end = s.find(',', pos);
            if (end == std::string_view::npos) end = s.size();
            const std::string_view tok = s.substr(pos, end - pos);
            if (tok.empty()) fail();
            int v = 0;
            for (char c : tok) {
                if (!std::isdigit(static_cast<unsigned char>(c)) || v > 100000) fail();
                v = v * 10 + (c - '0');
            }
            out.push_back(v);
            pos = end + 1;
            if (end == s.size() - 1) fail();  // trailing comma
        }
    };
    MDurfeeSymbol s;
    numbers(std::string_view(t).substr(1, bar - 1), s.alpha);
    numbers(std::string_view(t).substr(bar + 1, close - bar - 1), s.beta);
    const std::string_view dims = std::string_view(t).substr(close + 3, t.size() - close - 4);
    const auto x = dims.find('x');
    if (x == std::string_view::npos) return fail();
    std::vector<int> r;
    std::vector<int> c;
    numbers(dims.substr(0, x), r);
    numbers(dims.substr(x + 1), c);
    if (r.size() != 1 || c.size() != 1 || r[0] < c[0]) return fail();
    s.j = c[0];
    s.m = r[0] - c[0];
    validate(s);
    return s;
}

}  // namespace rankcrank
