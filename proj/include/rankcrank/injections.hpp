#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "symbol.hpp"

namespace rankcrank {

/// P: partitions of n with rank >= -m+1.  Q: partitions of n whose rank-set contains m.
enum class Side { P, Q };

struct SymbolClass {
    Side side;
    int index;  // 1, 2 or 3

    friend bool operator==(const SymbolClass&, const SymbolClass&) = default;
};

inline std::string to_string(SymbolClass c) {
    return std::string(c.side == Side::P ? "P" : "Q") + std::to_string(c.index);
}

/// Class of a symbol within P(-m+1, n) or Q(m, n); nullopt when the symbol is
/// not a member of the requested side at all.
inline std::optional<SymbolClass> classify(const MDurfeeSymbol& s, Side side) {
    validate(s);
    if (side == Side::P) {
        if (!rank_at_least(s)) return std::nullopt;
        if (s.j == 0 || s.beta_first() == s.j) return SymbolClass{Side::P, 1};
        if (s.beta_first() == s.j - 1) return SymbolClass{Side::P, 2};
        // j >= 2 and beta_1 <= j-2 is all that remains.
        return SymbolClass{Side::P, 3};
    }
    if (!rank_set_has_m(s)) return std::nullopt;
    if (s.j == 0 || s.beta_length() - s.alpha_length() <= -1) return SymbolClass{Side::Q, 1};
    if (s.alpha_first() < s.m + s.j) return SymbolClass{Side::Q, 2};
    return SymbolClass{Side::Q, 3};
}

namespace detail {
inline void require_class(const MDurfeeSymbol& s, SymbolClass expected, const char* op) {
    const auto c = classify(s, expected.side);
    if (!c || *c != expected) {
        throw std::domain_error(std::string(op) + ": symbol " + to_string(s) + " is not in " +
                                to_string(expected));
    }
}

/// v[i] + delta for each entry, dropping entries that become zero.
inline std::vector<int> shifted(const std::vector<int>& v, int delta, std::size_t from = 0) {
    std::vector<int> out;
    out.reserve(v.size());
    for (std::size_t i = from; i < v.size(); ++i) {
        if (v[i] + delta > 0) out.push_back(v[i] + delta);
    }
    return out;
}
}  // namespace detail

/// P2(-m+1,n) -> Q2(m,n): decrement alpha, increment beta, pad beta with s-t ones.
inline MDurfeeSymbol theta2(const MDurfeeSymbol& s) {
    detail::require_class(s, {Side::P, 2}, "theta2");
    MDurfeeSymbol out;
    out.m = s.m;
    out.j = s.j;
    out.alpha = detail::shifted(s.alpha, -1);
    out.beta = detail::shifted(s.beta, +1);
    out.beta.insert(out.beta.end(), static_cast<std::size_t>(s.alpha_length() - s.beta_length()), 1);
    return out;
}

/// Inverse of theta2 on its image, which is exactly the Q2 symbols whose
/// last beta entry is 1.
inline MDurfeeSymbol sigma(const MDurfeeSymbol& mu) {
    detail::require_class(mu, {Side::Q, 2}, "sigma");
    if (mu.beta.empty() || mu.beta.back() != 1) {
        throw std::domain_error("sigma: " + to_string(mu) + " is outside the image of theta2");
    }
    MDurfeeSymbol out;
    out.m = mu.m;
    out.j = mu.j;
    out.alpha = detail::shifted(mu.alpha, +1);
    out.alpha.insert(out.alpha.end(), static_cast<std::size_t>(mu.beta_length() - mu.alpha_length()), 1);
    out.beta = detail::shifted(mu.beta, -1);
    return out;
}

/// P3(-m+1,n) -> Q3(m,n): shrink the rectangle to (m+j-1) x (j-1), moving its
/// last column and row into the new first entries of alpha and beta.
inline MDurfeeSymbol theta3(const MDurfeeSymbol& s) {
    detail::require_class(s, {Side::P, 3}, "theta3");
    MDurfeeSymbol out;
    out.m = s.m;
    out.j = s.j - 1;
    out.alpha.push_back(s.m + s.j - 1);
    const auto tail = detail::shifted(s.alpha, -1);
    out.alpha.insert(out.alpha.end(), tail.begin(), tail.end());
    out.beta.push_back(s.j - 1);
    const auto below = detail::shifted(s.beta, +1);
    out.beta.insert(out.beta.end(), below.begin(), below.end());
    out.beta.insert(out.beta.end(), static_cast<std::size_t>(s.alpha_length() - s.beta_length() + 1), 1);
    return out;
}

/// Inverse of theta3 on its image. Requires mu in Q3, t'-s' >= 1 and the last two
/// beta entries equal to 1; the reconstruction must land back in P3.
inline MDurfeeSymbol pi(const MDurfeeSymbol& mu) {
    detail::require_class(mu, {Side::Q, 3}, "pi");
    const int s_len = mu.alpha_length();
    const int t_len = mu.beta_length();
    if (t_len - s_len < 1 || t_len < 2 || mu.beta[static_cast<std::size_t>(t_len - 1)] != 1 ||
        mu.beta[static_cast<std::size_t>(t_len - 2)] != 1) {
        throw std::domain_error("pi: " + to_string(mu) + " is outside the image of theta3");
    }
    MDurfeeSymbol out;
    out.m = mu.m;
    out.j = mu.j + 1;
    out.alpha = detail::shifted(mu.alpha, +1, 1);
    out.alpha.insert(out.alpha.end(), static_cast<std::size_t>(t_len - s_len - 1), 1);
    out.beta = detail::shifted(mu.beta, -1, 1);
    // With t' = 2 the candidate has l(alpha) = l(beta) = 0, which theta3 never produces.
    const auto c = classify(out, Side::P);
    if (!c || *c != SymbolClass{Side::P, 3}) {
        throw std::domain_error("pi: " + to_string(mu) + " is outside the image of theta3");
    }
    return out;
}

/// The injection P(-m+1,n) -> Q(m,n): identity on P1, theta2 on P2, theta3 on P3.
inline MDurfeeSymbol theta(const MDurfeeSymbol& s) {
    const auto c = classify(s, Side::P);
    if (!c) {
        throw std::domain_error("theta: " + to_string(s) + " has rank below -m+1");
    }
    switch (c->index) {
        case 1: return s;
        case 2: return theta2(s);
        default: return theta3(s);
    }
}

}  // namespace rankcrank
