#pragma once

/**
 * @file marking.hpp
 * @brief Successive differences of products of symmetric unimodal
 * polynomials, and the marking vectors that count them.
 *
 * For p(a; q) = prod_i [a_i + 1]_q with coefficients c_k, and k <= |a|/2,
 *
 *     c_k - c_{k-1} = #{ (k_1, ..., k_t) : 0 = k_1 <= ... <= k_t = k,
 *                        k_{i+1} - k_i <= min(a_1 + ... + a_i - 2 k_i, a_{i+1}) }.
 *
 * A marked tree is a tree together with such a vector on its ordered
 * leaves, with k_t = r - sigma/2.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ohara/error.hpp"
#include "ohara/qpoly.hpp"

namespace ohara {

/// Membership of (i, j) in
///   R_k(r, s) = { 0 <= i <= r/2, 0 <= j <= s/2, 0 <= k - i - j <= min(r - 2i, s - 2j) }.
inline bool region_contains(int r, int s, int k, int i, int j) {
    if (i < 0 || j < 0 || 2 * i > r || 2 * j > s) return false;
    const int rest = k - i - j;
    return rest >= 0 && rest <= std::min(r - 2 * i, s - 2 * j);
}

/// Lower half of the successive differences of a symmetric unimodal
/// polynomial of the given degree: diffs[i] = a_i - a_{i-1}, 0 <= i <= degree/2.
struct DifferenceProfile {
    int degree = 0;
    std::vector<BigInt> diffs;
};

inline DifferenceProfile difference_profile(const QPoly& p) {
    DifferenceProfile out{p.degree(), {}};
    for (int i = 0; 2 * i <= p.degree(); ++i) out.diffs.push_back(p[i] - p[i - 1]);
    return out;
}

namespace detail {

inline void check_profile(const DifferenceProfile& p) {
    if (p.degree < 0 || p.diffs.size() != static_cast<std::size_t>(p.degree / 2) + 1)
        throw Error(Errc::degree_mismatch, "profile of degree " + std::to_string(p.degree) + " needs " +
                                               std::to_string(p.degree / 2 + 1) + " entries, has " +
                                               std::to_string(p.diffs.size()));
}

// Profile of the product, each entry summed over the region R_k.
inline DifferenceProfile combine_profiles(const DifferenceProfile& x, const DifferenceProfile& y) {
    DifferenceProfile out{x.degree + y.degree, {}};
    for (int k = 0; 2 * k <= out.degree; ++k) {
        BigInt c = 0;
        for (int i = 0; 2 * i <= x.degree; ++i)
            for (int j = 0; 2 * j <= y.degree; ++j)
                if (region_contains(x.degree, y.degree, k, i, j))
                    c += x.diffs[static_cast<std::size_t>(i)] * y.diffs[static_cast<std::size_t>(j)];
        out.diffs.push_back(std::move(c));
    }
    return out;
}

} // namespace detail

/// c_k - c_{k-1} of the product of the profiled polynomials, folding the
/// pairwise region formula left to right. Needs k <= (total degree)/2.
inline BigInt product_difference(std::span<const DifferenceProfile> profiles, int k) {
    if (profiles.empty()) throw Error(Errc::precondition_violation, "no profiles");
    for (const auto& p : profiles) detail::check_profile(p);
    DifferenceProfile acc = profiles.front();
    for (std::size_t i = 1; i < profiles.size(); ++i) acc = detail::combine_profiles(acc, profiles[i]);
    if (2 * k > acc.degree) throw Error(Errc::precondition_violation, "k exceeds half the total degree");
    if (k < 0) return 0;
    return acc.diffs[static_cast<std::size_t>(k)];
}

/// Number of marking vectors on leaves a with k_t = target. Dynamic
/// programming over (position, current value).
inline BigInt count_markings(std::span<const int> a, int target) {
    if (a.empty() || target < 0) return 0;
    // ways[v]: vectors on the first i leaves ending at k_i = v (v <= target)
    std::vector<BigInt> ways(static_cast<std::size_t>(target) + 1);
    ways[0] = 1;
    long long prefix = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        std::vector<BigInt> next(ways.size());
        for (int v = 0; v <= target; ++v) {
            const auto& w = ways[static_cast<std::size_t>(v)];
            if (w == 0) continue;
            const long long step = std::min<long long>(prefix - 2LL * v, a[i]);
            for (long long d = 0; d <= step && v + d <= target; ++d) next[static_cast<std::size_t>(v + d)] += w;
        }
        ways = std::move(next);
        prefix += a[i];
    }
    return ways[static_cast<std::size_t>(target)];
}

inline BigInt count_markings(const std::vector<int>& a, int target) {
    return count_markings(std::span<const int>(a), target);
}

/// The marking vectors themselves, lexicographically increasing.
inline std::vector<std::vector<int>> enumerate_markings(std::span<const int> a, int target) {
    std::vector<std::vector<int>> out;
    if (a.empty() || target < 0) return out;
    std::vector<int> cur{0};
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long prefix) {
        const int v = cur.back();
        if (i == a.size()) {
            if (v == target) out.push_back(cur);
            return;
        }
        const long long step = std::min<long long>(prefix - 2LL * v, a[i]);
        for (long long d = 0; d <= step && v + d <= target; ++d) {
            cur.push_back(v + static_cast<int>(d));
            rec(i + 1, prefix + a[i]);
            cur.pop_back();
        }
    };
    rec(1, a[0]);
    return out;
}

inline std::vector<std::vector<int>> enumerate_markings(const std::vector<int>& a, int target) {
    return enumerate_markings(std::span<const int>(a), target);
}

/// Required final mark k_t = r - (total - leaf_sum)/2 = r - sigma/2.
inline int marking_target(long long leaf_sum, long long total, long long r) {
    const long long s = total - leaf_sum;
    if (s % 2 != 0) throw Error(Errc::parity_violation, "total - leaf_sum = " + std::to_string(s) + " is odd");
    return static_cast<int>(r - s / 2);
}

/// Sum over trees (given by their ordered leaf lists) of the number of
/// valid markings at r; needs 2r <= total.
inline BigInt count_marked_trees(std::span<const std::vector<int>> leaf_lists, long long total, long long r,
                                 std::vector<BigInt>* per_tree = nullptr) {
    if (2 * r > total)
        throw Error(Errc::precondition_violation, "r = " + std::to_string(r) + " exceeds half of " + std::to_string(total));
    BigInt sum = 0;
    if (per_tree) per_tree->assign(leaf_lists.size(), BigInt(0));
    for (std::size_t t = 0; t < leaf_lists.size(); ++t) {
        const auto& ls = leaf_lists[t];
        long long leaf_sum = 0;
        for (int x : ls) leaf_sum += x;
        BigInt c = count_markings(ls, marking_target(leaf_sum, total, r));
        if (per_tree) (*per_tree)[t] = c;
        sum += c;
    }
    return sum;
}

} // namespace ohara
