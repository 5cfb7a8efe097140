#pragma once

/**
 * @file goh.hpp
 * @brief Admissible configurations and GOH trees for principal
 * specializations s_lambda(1, q, ..., q^k).
 *
 * For lambda with n = |lambda| and l rows, a configuration is a chain
 * nu^(0) = (1^n), nu^(1), ..., nu^(l) = empty with |nu^(i)| equal to the
 * number of cells of lambda below row i, such that every second difference
 *
 *     P_j^i = Q_j(nu^(i+1)) - 2 Q_j(nu^(i)) + Q_j(nu^(i-1)),  1 <= i < l,
 *
 * is nonnegative for 1 <= j <= n. A GOH tree picks a configuration with
 * m = l(nu^(1)) <= k, then one KOH tree of type (P_j^i, m_j(nu^(i))) for
 * every nonzero multiplicity (edge (i, j)), plus one KOH tree of type
 * (n, k - m) when m < k (unlabelled edge, always last).
 */

#include <cstddef>
#include <iterator>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ohara/error.hpp"
#include "ohara/koh.hpp"
#include "ohara/limits.hpp"
#include "ohara/partitions.hpp"
#include "ohara/qpoly.hpp"

namespace ohara {

struct Configuration {
    Partition lambda;
    std::vector<Partition> nus;  // nu^(0) .. nu^(l)

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Second difference P_j^i of the column statistics; needs 1 <= i < l(lambda)
/// and 1 <= j <= |lambda|.
inline int p_stat(const Configuration& c, int i, int j) {
    const int len = c.lambda.length();
    if (i < 1 || i >= len || j < 1 || j > c.lambda.size() || static_cast<int>(c.nus.size()) != len + 1)
        throw Error(Errc::index_out_of_range,
                    "P_j^i needs 1 <= i < " + std::to_string(len) + " and 1 <= j <= " + std::to_string(c.lambda.size()) +
                        ", got i=" + std::to_string(i) + " j=" + std::to_string(j));
    const auto idx = static_cast<std::size_t>(i);
    return q_stat(c.nus[idx + 1], j) - 2 * q_stat(c.nus[idx], j) + q_stat(c.nus[idx - 1], j);
}

/// m = first column length of nu^(1), i.e. its number of rows.
inline int m_stat(const Configuration& c) {
    return c.nus.size() > 1 ? c.nus[1].length() : 0;
}

/// tau = sum over 1 <= i < l, 1 <= j <= n of alpha_j^(i) (alpha_j^(i) - alpha_j^(i+1))
/// where alpha^(i) is the conjugate of nu^(i), padded with zeros.
inline long long tau_stat(const Configuration& c) {
    const int len = c.lambda.length();
    const int n = c.lambda.size();
    long long tau = 0;
    for (int i = 1; i < len; ++i) {
        const auto alpha = conjugate(c.nus[static_cast<std::size_t>(i)]);
        const auto below = conjugate(c.nus[static_cast<std::size_t>(i) + 1]);
        for (int j = 1; j <= n; ++j) {
            const long long x = alpha.row(j);
            tau += x * (x - below.row(j));
        }
    }
    return tau;
}

namespace detail {

inline bool second_differences_nonnegative(const Partition& prev, const Partition& cur, const Partition& next, int n) {
    for (int j = 1; j <= n; ++j)
        if (q_stat(next, j) - 2 * q_stat(cur, j) + q_stat(prev, j) < 0) return false;
    return true;
}

inline void configurations_rec(const Partition& lambda, std::vector<int>& tail_sizes, std::vector<Partition>& chain,
                               std::vector<Configuration>& out) {
    const int n = lambda.size();
    const int len = lambda.length();
    const auto level = static_cast<int>(chain.size());  // index of the partition to choose next
    if (level == len) {
        const Partition empty;
        if (len >= 2 && !second_differences_nonnegative(chain[chain.size() - 2], chain.back(), empty, n)) return;
        chain.push_back(empty);
        out.push_back({lambda, chain});
        chain.pop_back();
        return;
    }
    for (const auto& nu : enumerate_partitions_bounded(tail_sizes[static_cast<std::size_t>(level)], n, n)) {
        // choosing nu^(level) fixes P^(level-1)
        if (level >= 2 && !second_differences_nonnegative(chain[chain.size() - 2], chain.back(), nu, n)) continue;
        chain.push_back(nu);
        configurations_rec(lambda, tail_sizes, chain, out);
        chain.pop_back();
    }
}

} // namespace detail

/// All admissible configurations of lambda, nu^(1) varying slowest, each
/// level in lexicographically decreasing order.
inline std::vector<Configuration> enumerate_configurations(const Partition& lambda) {
    if (lambda.empty()) throw Error(Errc::precondition_violation, "configurations need a nonempty partition");
    const int len = lambda.length();
    std::vector<int> tail_sizes(static_cast<std::size_t>(len) + 1, 0);
    for (int i = len - 1; i >= 0; --i)
        tail_sizes[static_cast<std::size_t>(i)] = tail_sizes[static_cast<std::size_t>(i) + 1] + lambda.row(i + 1);
    tail_sizes[0] = lambda.size();
    std::vector<Partition> chain{Partition::column(lambda.size())};
    std::vector<Configuration> out;
    detail::configurations_rec(lambda, tail_sizes, chain, out);
    return out;
}

/// Child slots of a GOH root for a configuration: edge (i, j) and the KOH
/// type it mandates, in lexicographic edge order.
struct GohSlot {
    std::pair<int, int> edge;
    ChildType type;
};

inline std::vector<GohSlot> goh_slots(const Configuration& c) {
    std::vector<GohSlot> out;
    const int len = c.lambda.length();
    const int n = c.lambda.size();
    for (int i = 1; i < len; ++i)
        for (int j = 1; j <= n; ++j)
            if (int m = mult(c.nus[static_cast<std::size_t>(i)], j); m != 0) out.push_back({{i, j}, {p_stat(c, i, j), m}});
    return out;
}

/// Direct evaluation of the GOH sum
///   sum_m (n+k-m choose k-m)_q sum_{nu : m(nu) = m} q^tau prod (P + m_j choose m_j)_q.
inline QPoly goh_rhs_closed(const Partition& lambda, int k) {
    if (k < 0) throw Error(Errc::precondition_violation, "k must be nonnegative");
    if (lambda.empty()) return QPoly{1};
    const int n = lambda.size();
    QPoly total;
    for (const auto& c : enumerate_configurations(lambda)) {
        const int m = m_stat(c);
        if (m > k) continue;
        QPoly term = q_binomial(n, k - m);
        for (const auto& slot : goh_slots(c)) {
            if (slot.type.a < 0) {  // unreachable for admissible configurations
                term = {};
                break;
            }
            term *= q_binomial(slot.type.a, slot.type.b);
        }
        if (!term.is_zero()) total += shift(term, static_cast<int>(tau_stat(c)));
    }
    return total;
}

struct GohTree {
    Partition lambda;
    Configuration config;
    int k = 0;
    std::map<std::pair<int, int>, KohTreePtr> labeled_children;
    KohTreePtr extra_child;  // null when m(config) == k
};

inline bool operator==(const GohTree& x, const GohTree& y) {
    if (!(x.lambda == y.lambda) || !(x.config == y.config) || x.k != y.k) return false;
    if (x.labeled_children.size() != y.labeled_children.size()) return false;
    for (auto ix = x.labeled_children.begin(), iy = y.labeled_children.begin(); ix != x.labeled_children.end(); ++ix, ++iy)
        if (ix->first != iy->first || !(*ix->second == *iy->second)) return false;
    if (bool(x.extra_child) != bool(y.extra_child)) return false;
    return !x.extra_child || *x.extra_child == *y.extra_child;
}

/// All GOH trees of type (lambda, k): configurations in canonical order,
/// then child choices with the first slot varying slowest. Configurations
/// are processed on up to limits.workers threads.
inline std::vector<GohTree> enumerate_goh_trees(const Partition& lambda, int k, const Limits& limits = {}) {
    if (k < 1) throw Error(Errc::precondition_violation, "GOH tree type needs k >= 1");
    const int n = lambda.size();
    const auto configs = enumerate_configurations(lambda);
    Limits inner = limits;
    inner.workers = 1;
    std::vector<std::vector<GohTree>> per_config(configs.size());
    detail::parallel_for(configs.size(), limits.workers, [&](std::size_t ci) {
        const auto& c = configs[ci];
        const int m = m_stat(c);
        if (m > k) return;
        const auto slots = goh_slots(c);
        std::vector<std::vector<KohTreePtr>> choices;
        for (const auto& s : slots) choices.push_back(enumerate_koh_trees(s.type.a, s.type.b, inner));
        if (m < k) choices.push_back(enumerate_koh_trees(n, k - m, inner));
        std::size_t total = 1;
        for (const auto& ch : choices) {
            total *= ch.size();
            detail::check_budget(total, limits);
        }
        auto& out = per_config[ci];
        out.reserve(total);
        std::vector<std::size_t> idx(choices.size(), 0);
        for (std::size_t t = 0; t < total; ++t) {
            GohTree g{lambda, c, k, {}, nullptr};
            for (std::size_t s = 0; s < slots.size(); ++s) g.labeled_children.emplace(slots[s].edge, choices[s][idx[s]]);
            if (m < k) g.extra_child = choices.back()[idx.back()];
            out.push_back(std::move(g));
            for (std::size_t s = choices.size(); s-- > 0;) {
                if (++idx[s] < choices[s].size()) break;
                idx[s] = 0;
            }
        }
    });
    std::vector<GohTree> out;
    for (auto& part : per_config) {
        detail::check_budget(out.size() + part.size(), limits);
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

/// Leaves of the labelled children in increasing (i, j) order, then the
/// unlabelled child.
inline std::vector<int> goh_leaves(const GohTree& t) {
    std::vector<int> out;
    for (const auto& [edge, child] : t.labeled_children) {
        auto ls = leaves(*child);
        out.insert(out.end(), ls.begin(), ls.end());
    }
    if (t.extra_child) {
        auto ls = leaves(*t.extra_child);
        out.insert(out.end(), ls.begin(), ls.end());
    }
    return out;
}

inline long long goh_sigma(const GohTree& t) {
    const auto ls = goh_leaves(t);
    const long long total = static_cast<long long>(t.lambda.size()) * t.k;
    const long long s = total - std::accumulate(ls.begin(), ls.end(), 0LL);
    if (s < 0 || s > total || s % 2 != 0)
        throw Error(Errc::structure_violation, "sigma = " + std::to_string(s) + " is not an even value in [0, |lambda|k]");
    return s;
}

inline QPoly goh_term(const GohTree& t) {
    return leaf_product_term(goh_sigma(t) / 2, goh_leaves(t));
}

/// Checks the root-level rules (slot set, slot types, extra child) and
/// validates every child KOH tree. Throws STRUCTURE_VIOLATION.
inline void validate_goh_tree(const GohTree& t) {
    auto fail = [&](const std::string& why) {
        throw Error(Errc::structure_violation, "GOH tree of type (" + to_string(t.lambda) + ", " + std::to_string(t.k) + "): " + why);
    };
    if (!(t.config.lambda == t.lambda)) fail("configuration belongs to another partition");
    const int m = m_stat(t.config);
    if (m > t.k) fail("m(nu) > k");
    const auto slots = goh_slots(t.config);
    if (slots.size() != t.labeled_children.size()) fail("wrong number of labelled children");
    auto it = t.labeled_children.begin();
    for (const auto& s : slots) {
        if (it->first != s.edge) fail("unexpected edge label");
        if (!it->second || it->second->label.a != s.type.a || it->second->label.b != s.type.b) fail("child type mismatch");
        validate_koh_tree(*it->second);
        ++it;
    }
    if ((m < t.k) != bool(t.extra_child)) fail("extra child must be present exactly when m(nu) < k");
    if (t.extra_child) {
        if (t.extra_child->label.a != t.lambda.size() || t.extra_child->label.b != t.k - m) fail("extra child type mismatch");
        validate_koh_tree(*t.extra_child);
    }
}

} // namespace ohara
