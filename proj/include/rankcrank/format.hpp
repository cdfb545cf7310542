#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "partition.hpp"
#include "reordering.hpp"
#include "statistics.hpp"
#include "tables.hpp"

namespace rankcrank::format {

enum class Stat { rank, crank, both };

inline Stat parse_stat(const std::string& s) {
    if (s == "rank") return Stat::rank;
    if (s == "crank") return Stat::crank;
    if (s == "both") return Stat::both;
    throw std::invalid_argument("unknown statistic '" + s + "'");
}

namespace detail {
/// Left-aligned columns separated by two spaces.
inline std::string align(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()), 0);
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
        }
        out += line + '\n';
    }
    return out;
}
}  // namespace detail

/// Five-column listing of tau_n: lambda, crank, tau(lambda), rank, difference.
inline std::string tau_text(const ReorderingMap& r) {
    const std::string tau = "tau_" + std::to_string(r.n());
    std::vector<std::vector<std::string>> rows{
        {"lambda", "crank(lambda)", tau + "(lambda)", "rank(" + tau + "(lambda))", "difference"}};
    for (const auto& p : r.pairs()) {
        rows.push_back({to_string(r.source(p)), std::to_string(p.crank), to_string(r.image(p)),
                        std::to_string(p.rank), std::to_string(p.difference())});
    }
    return detail::align(rows);
}

inline std::string tau_csv(const ReorderingMap& r) {
    std::string out = "lambda,crank,image,rank,difference\n";
    for (const auto& p : r.pairs()) {
        out += '"' + to_string(r.source(p)) + "\"," + std::to_string(p.crank) + ",\"" + to_string(r.image(p)) +
               "\"," + std::to_string(p.rank) + ',' + std::to_string(p.difference()) + '\n';
    }
    return out;
}

inline nlohmann::json tau_json(const ReorderingMap& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : r.pairs()) {
        rows.push_back({{"lambda", std::vector<int>(r.source(p).parts().begin(), r.source(p).parts().end())},
                        {"crank", p.crank},
                        {"image", std::vector<int>(r.image(p).parts().begin(), r.image(p).parts().end())},
                        {"rank", p.rank},
                        {"difference", p.difference()}});
    }
    return {{"n", r.n()}, {"tie_break", to_string(r.tie_break())}, {"pairs", rows}};
}

/// CSV with one row per (n, m), |m| <= n, carrying both counts.
inline std::string table_csv(const StatTable& t, int n_from, int n_to) {
    std::ostringstream os;
    os << "n,m,N,M\n";
    for (int n = n_from; n <= n_to; ++n) {
        for (int m = -n; m <= n; ++m) {
            os << n << ',' << m << ',' << t.rank_count(m, n) << ',' << t.crank_count(m, n) << '\n';
        }
    }
    return os.str();
}

/// Nested by n; counts are keyed by m in ascending order.
inline nlohmann::ordered_json table_json(const StatTable& t, Stat stat, int n_from, int n_to) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = n_from; n <= n_to; ++n) {
        nlohmann::ordered_json row;
        row["n"] = n;
        row["p"] = t.row_total(n);
        const auto counts = [&](bool crank_side) {
            nlohmann::ordered_json c = nlohmann::ordered_json::object();
            for (int m = -n; m <= n; ++m) {
                c[std::to_string(m)] = crank_side ? t.crank_count(m, n) : t.rank_count(m, n);
            }
            return c;
        };
        if (stat != Stat::crank) row["N"] = counts(false);
        if (stat != Stat::rank) row["M"] = counts(true);
        rows.push_back(row);
    }
    nlohmann::ordered_json out;
    out["provenance"] = to_string(t.provenance());
    out["n_min"] = n_from;
    out["n_max"] = n_to;
    out["rows"] = rows;
    return out;
}

/// Grid of counts: one line per n, one column per m in [-n_to, n_to].
inline std::string table_text(const StatTable& t, Stat stat, int n_from, int n_to) {
    std::string out;
    const auto grid = [&](bool crank_side) {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{crank_side ? "M(m,n)" : "N(m,n)"};
        for (int m = -n_to; m <= n_to; ++m) header.push_back(std::to_string(m));
        rows.push_back(header);
        for (int n = n_from; n <= n_to; ++n) {
            std::vector<std::string> r{"n=" + std::to_string(n)};
            for (int m = -n_to; m <= n_to; ++m) {
                r.push_back(std::to_string(crank_side ? t.crank_count(m, n) : t.rank_count(m, n)));
            }
            rows.push_back(r);
        }
        return detail::align(rows);
    };
    if (stat != Stat::crank) out += grid(false);
    if (stat == Stat::both) out += '\n';
    if (stat != Stat::rank) out += grid(true);
    return out;
}

/// Per-partition listing for a single n, sorted ascending by the chosen
/// statistic (ties in canonical order). With Stat::both the crank order is used.
inline std::string partition_listing_text(int n, Stat stat) {
    std::vector<Partition> parts = enumerate_all(n);
    const bool by_rank = stat == Stat::rank;
    std::stable_sort(parts.begin(), parts.end(), [&](const Partition& a, const Partition& b) {
        return by_rank ? rank(a) < rank(b) : crank(a) < crank(b);
    });
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"lambda"};
    if (stat != Stat::rank) header.push_back("crank(lambda)");
    if (stat != Stat::crank) header.push_back("rank(lambda)");
    rows.push_back(header);
    for (const auto& p : parts) {
        std::vector<std::string> r{to_string(p)};
        if (stat != Stat::rank) r.push_back(std::to_string(crank(p)));
        if (stat != Stat::crank) r.push_back(std::to_string(rank(p)));
        rows.push_back(r);
    }
    return detail::align(rows);
}

}  // namespace rankcrank::format
