#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "checked.hpp"

namespace rankcrank {

/// Read-only view of the parts of a partition, largest first.
using PartsView = std::span<const int>;

/// A weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
        }
        for (int p : parts_) {
            weight_ += p;
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Adopts parts that are already known to be valid (enumeration hot path).
    static Partition from_trusted(PartsView parts, int weight) {
        Partition p;
        p.parts_.assign(parts.begin(), parts.end());
        p.weight_ = weight;
        return p;
    }

    [[nodiscard]] PartsView parts() const noexcept { return parts_; }
    [[nodiscard]] int weight() const noexcept { return weight_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// 1-based part access; 0 beyond the last part.
    [[nodiscard]] int part(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    operator PartsView() const noexcept { return parts_; }  // NOLINT(google-explicit-constructor)

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    /// Lexicographic order on part sequences.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// "(3,1,1)"; the empty partition renders as "()".
inline std::string to_string(PartsView parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    s += ')';
    return s;
}

inline std::string to_string(const Partition& p) { return to_string(p.parts()); }

inline Partition conjugate(PartsView parts) {
    if (parts.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts) {
        for (int c = 0; c < p; ++c) {
            ++out[static_cast<std::size_t>(c)];
        }
    }
    int weight = 0;
    for (int p : parts) weight += p;
    return Partition::from_trusted(out, weight);
}

inline Partition conjugate(const Partition& p) { return conjugate(p.parts()); }

/// Successor generator over the partitions of n in lexicographically decreasing
/// order: (n), (n-1,1), (n-2,2), ... , (1^n). Works in place on one buffer, so a
/// full sweep allocates once regardless of p(n).
class PartitionGenerator {
public:
    explicit PartitionGenerator(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
        // 1-based buffer; every slot beyond h_ holds 1.
        x_.assign(static_cast<std::size_t>(n) + 2, 1);
        if (n > 0) {
            x_[1] = n;
            m_ = 1;
            h_ = 1;
        }
    }

    [[nodiscard]] PartsView current() const noexcept {
        return PartsView(x_.data() + 1, static_cast<std::size_t>(m_));
    }
    [[nodiscard]] int weight() const noexcept { return n_; }

    /// Advances to the next partition; false once the sweep is exhausted.
    bool next() noexcept {
        if (n_ == 0 || x_[1] == 1) {
            return false;
        }
        if (x_[h_] == 2) {
            ++m_;
            x_[h_] = 1;
            --h_;
        } else {
            const int r = x_[h_] - 1;
            int t = m_ - h_ + 1;
            x_[h_] = r;
            while (t >= r) {
                ++h_;
                x_[h_] = r;
                t -= r;
            }
            if (t == 0) {
                m_ = h_;
            } else {
                m_ = h_ + 1;
                if (t > 1) {
                    ++h_;
                    x_[h_] = t;
                }
            }
        }
        return true;
    }

private:
    int n_;
    std::vector<int> x_;
    int m_ = 0;  // number of parts
    int h_ = 0;  // index of the last part greater than 1
};

/// Calls fn(PartsView) for every partition of n in canonical order.
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    PartitionGenerator gen(n);
    do {
        fn(gen.current());
    } while (gen.next());
}

/// Single-pass range over the partitions of n; dereferencing yields a view that
/// is invalidated by the next increment.
class Partitions {
public:
    explicit Partitions(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = PartsView;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(int n) : gen_(std::make_shared<PartitionGenerator>(n)) {}

        PartsView operator*() const { return gen_->current(); }
        iterator& operator++() {
            if (!gen_->next()) gen_.reset();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.gen_ == b.gen_; }

    private:
        std::shared_ptr<PartitionGenerator> gen_;
    };

    [[nodiscard]] iterator begin() const { return iterator(n_); }
    [[nodiscard]] iterator end() const { return {}; }

private:
    int n_;
};

inline Partitions enumerate(int n) { return Partitions(n); }

/// Materializes the partitions of n in canonical order.
inline std::vector<Partition> enumerate_all(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](PartsView p) { out.push_back(Partition::from_trusted(p, n)); });
    return out;
}

/// p(0..nmax) by Euler's pentagonal recurrence. Throws std::overflow_error for
/// nmax >= 406, since p(406) is the first value that does not fit in 64 bits.
inline std::vector<count_t> partition_counts(int nmax) {
    if (nmax < 0) throw std::invalid_argument("partition_counts: negative argument");
    std::vector<count_t> p(static_cast<std::size_t>(nmax) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        // Partial sums of the alternating series can leave the int64 range
        // before the final value does, so accumulate wider.
        __int128 acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            const int g2 = k * (3 * k + 1) / 2;
            const int sign = (k % 2) == 1 ? 1 : -1;
            acc += sign * static_cast<__int128>(p[static_cast<std::size_t>(n - g1)]);
            if (g2 <= n) acc += sign * static_cast<__int128>(p[static_cast<std::size_t>(n - g2)]);
        }
        if (acc > std::numeric_limits<count_t>::max()) {
            throw std::overflow_error("p(" + std::to_string(n) + ") exceeds the 64-bit range");
        }
        p[static_cast<std::size_t>(n)] = static_cast<count_t>(acc);
    }
    return p;
}

inline count_t partition_count(int n) {
    return partition_counts(n).back();
}

}  // namespace rankcrank
