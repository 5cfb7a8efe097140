#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "ohara/error.hpp"
#include "ohara/qpoly.hpp"

namespace ohara {

/// Integer partition stored by its rows, weakly decreasing, positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw Error(Errc::invalid_partition, "parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(Errc::invalid_partition, "parts must be weakly decreasing");
            size_ += parts_[i];
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (1^n): a single column of height n.
    static Partition column(int n) {
        if (n < 0) throw Error(Errc::invalid_partition, "negative size");
        return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based row access; 0 past the last row.
    int row(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i) - 1] : 0;
    }
    int first() const noexcept { return row(1); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> cols(static_cast<std::size_t>(p.first()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

/// m_j: number of rows equal to j.
inline int mult(const Partition& p, int j) {
    return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), j));
}

/// b(p) = sum_i (i-1) p_i.
inline long long b_stat(const Partition& p) {
    long long s = 0;
    for (std::size_t i = 0; i < p.parts().size(); ++i) s += static_cast<long long>(i) * p.parts()[i];
    return s;
}

/// Q_j(p): cells in the first j columns, i.e. sum_i min(p_i, j).
inline int q_stat(const Partition& p, int j) {
    int s = 0;
    for (int part : p.parts()) s += std::min(part, j);
    return s;
}

/// Distinct row lengths, increasing.
inline std::vector<int> distinct_rows(const Partition& p) {
    std::vector<int> out(p.parts().rbegin(), p.parts().rend());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // the remaining rows cannot hold more than part * (max_len - 1) cells
        if (static_cast<long long>(part) * max_len < remaining) break;
        cur.push_back(part);
        partitions_rec(remaining - part, part, max_len - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// Partitions of n with parts <= max_part and at most max_len rows, in
/// lexicographically decreasing order.
inline std::vector<Partition> enumerate_partitions_bounded(int n, int max_part, int max_len) {
    std::vector<Partition> out;
    if (n < 0 || max_part < 0 || max_len < 0) return out;
    std::vector<int> cur;
    detail::partitions_rec(n, max_part, max_len, cur, out);
    return out;
}

inline std::vector<Partition> enumerate_partitions(int n) {
    return enumerate_partitions_bounded(n, n, n);
}

namespace detail {

class RectangleCounts {
public:
    BigInt get(int n, int k, int r) {
        if (r < 0 || n < 0 || k < 0) return 0;
        if (static_cast<long long>(r) > static_cast<long long>(n) * k) return 0;
        if (r == 0) return 1;
        const Key key{n, k, r};
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        // p_r(n,k) = p_r(n,k-1) + p_{r-k}(n-1,k)
        BigInt value = get(n, k - 1, r) + get(n - 1, k, r - k);
        std::unique_lock lock(mutex_);
        memo_.try_emplace(key, value);
        return value;
    }

private:
    using Key = std::tuple<int, int, int>;
    std::shared_mutex mutex_;
    std::map<Key, BigInt> memo_;
};

inline RectangleCounts& rectangle_counts() {
    static RectangleCounts counts;
    return counts;
}

} // namespace detail

/// p_r(n,k): partitions of r fitting inside a k x n box (at most k rows,
/// parts at most n). Memoized and safe for concurrent callers.
inline BigInt count_in_rectangle(int n, int k, int r) {
    return detail::rectangle_counts().get(n, k, r);
}

inline std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + ")";
}

} // namespace ohara
