#pragma once

/**
 * @file koh.hpp
 * @brief KOH trees: the recursive unwinding of the KOH q-binomial identity.
 *
 * A node is labelled (mu, a, b) with mu a partition of b. A node with b = 1
 * is a leaf ((1), a, 1). Otherwise it has one child per distinct row length
 * j of mu (increasing j, left to right) of type
 *
 *     a' = (a + 2) j - 2 Q_j(mu),   b' = m_j(mu),
 *
 * and the child is any KOH tree of that type. Choices of mu that produce a
 * negative a' are discarded. The type of a tree is the (a, b) of its root.
 *
 * Summing q^(sigma/2) * prod [a_leaf + 1]_q over all trees of type (n, k),
 * with sigma = nk - sum of leaf labels, recovers (n+k choose k)_q.
 */

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "ohara/error.hpp"
#include "ohara/limits.hpp"
#include "ohara/partitions.hpp"
#include "ohara/qpoly.hpp"

namespace ohara {

struct KohLabel {
    Partition mu;
    int a = 0;
    int b = 1;

    friend bool operator==(const KohLabel&, const KohLabel&) = default;
};

struct KohTree;
using KohTreePtr = std::shared_ptr<const KohTree>;

struct KohEdge {
    int edge = 0;
    KohTreePtr tree;
};

/// Immutable once built; subtrees of a recurring type are shared.
struct KohTree {
    KohLabel label;
    std::vector<KohEdge> children;

    bool is_leaf() const noexcept { return children.empty(); }
};

inline bool operator==(const KohTree& x, const KohTree& y) {
    if (!(x.label == y.label) || x.children.size() != y.children.size()) return false;
    for (std::size_t i = 0; i < x.children.size(); ++i) {
        const auto& cx = x.children[i];
        const auto& cy = y.children[i];
        if (cx.edge != cy.edge || !cx.tree || !cy.tree || !(*cx.tree == *cy.tree)) return false;
    }
    return true;
}

inline KohTreePtr make_koh_leaf(int a) {
    return std::make_shared<const KohTree>(KohTree{KohLabel{Partition{1}, a, 1}, {}});
}

struct ChildType {
    int a = 0;
    int b = 0;
    friend bool operator==(const ChildType&, const ChildType&) = default;
};

/// Type of the child hanging off row length j of mu under a node (mu, a, .).
/// The returned a may be negative, which marks a pruned branch.
inline ChildType koh_child_type(const Partition& mu, int a, int j) {
    const int m = mult(mu, j);
    if (j < 1 || m == 0)
        throw Error(Errc::invalid_row_length, "row length " + std::to_string(j) + " does not occur in " + to_string(mu));
    return {(a + 2) * j - 2 * q_stat(mu, j), m};
}

namespace detail {

using KohTreeList = std::vector<KohTreePtr>;
using KohTreeListPtr = std::shared_ptr<const KohTreeList>;

// Trees of type (a, b), memoized by type. Concurrent insertion of the same
// key is idempotent: every thread computes the same list.
class KohCache {
public:
    KohTreeListPtr find(int a, int b) const {
        std::shared_lock lock(mutex_);
        auto it = lists_.find({a, b});
        return it == lists_.end() ? nullptr : it->second;
    }

    KohTreeListPtr insert(int a, int b, KohTreeListPtr list) {
        std::unique_lock lock(mutex_);
        return lists_.try_emplace({a, b}, std::move(list)).first->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<int, int>, KohTreeListPtr> lists_;
};

inline KohCache& koh_cache() {
    static KohCache cache;
    return cache;
}

inline void check_budget(std::size_t count, const Limits& limits) {
    if (count > limits.max_trees)
        throw Error(Errc::budget_exceeded, "more than " + std::to_string(limits.max_trees) + " trees");
}

inline KohTreeListPtr koh_trees_of_type(int a, int b, const Limits& limits);

// Trees whose root partition is mu, for a node of type (a, |mu|).
inline KohTreeList koh_trees_with_root(const Partition& mu, int a, const Limits& limits) {
    const auto rows = distinct_rows(mu);
    std::vector<KohTreeListPtr> slots;
    slots.reserve(rows.size());
    for (int j : rows) {
        const auto t = koh_child_type(mu, a, j);
        if (t.a < 0) return {};
        slots.push_back(koh_trees_of_type(t.a, t.b, limits));
        if (slots.back()->empty()) return {};
    }
    std::size_t total = 1;
    for (const auto& s : slots) {
        total *= s->size();
        check_budget(total, limits);
    }
    KohTreeList out;
    out.reserve(total);
    // odometer over child slots, first slot outermost
    std::vector<std::size_t> idx(slots.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        KohTree t{KohLabel{mu, a, mu.size()}, {}};
        t.children.reserve(slots.size());
        for (std::size_t s = 0; s < slots.size(); ++s) t.children.push_back({rows[s], (*slots[s])[idx[s]]});
        out.push_back(std::make_shared<const KohTree>(std::move(t)));
        for (std::size_t s = slots.size(); s-- > 0;) {
            if (++idx[s] < slots[s]->size()) break;
            idx[s] = 0;
        }
    }
    return out;
}

inline KohTreeListPtr koh_trees_of_type(int a, int b, const Limits& limits) {
    if (auto hit = koh_cache().find(a, b)) {
        check_budget(hit->size(), limits);
        return hit;
    }
    KohTreeList out;
    if (a >= 0 && b == 1) {
        out.push_back(make_koh_leaf(a));
    } else if (a >= 0 && b >= 2) {
        for (const auto& mu : enumerate_partitions(b)) {
            auto part = koh_trees_with_root(mu, a, limits);
            out.insert(out.end(), part.begin(), part.end());
            check_budget(out.size(), limits);
        }
    }
    return koh_cache().insert(a, b, std::make_shared<const KohTreeList>(std::move(out)));
}

} // namespace detail

/// All KOH trees of type (n, k) in canonical order: root partitions in
/// lexicographically decreasing order, then child choices with the first
/// slot varying slowest. Root partitions are processed on up to
/// limits.workers threads; the output order does not depend on it.
inline std::vector<KohTreePtr> enumerate_koh_trees(int n, int k, const Limits& limits = {}) {
    if (k < 1) throw Error(Errc::precondition_violation, "KOH tree type needs k >= 1");
    if (n < 0) return {};
    if (auto hit = detail::koh_cache().find(n, k)) {
        detail::check_budget(hit->size(), limits);
        return *hit;
    }
    if (k == 1 || limits.workers <= 1) return *detail::koh_trees_of_type(n, k, limits);

    const auto roots = enumerate_partitions(k);
    std::vector<detail::KohTreeList> per_root(roots.size());
    detail::parallel_for(roots.size(), limits.workers, [&](std::size_t i) {
        per_root[i] = detail::koh_trees_with_root(roots[i], n, limits);
    });
    detail::KohTreeList out;
    for (auto& part : per_root) {
        out.insert(out.end(), part.begin(), part.end());
        detail::check_budget(out.size(), limits);
    }
    return *detail::koh_cache().insert(n, k, std::make_shared<const detail::KohTreeList>(std::move(out)));
}

namespace detail {
inline void collect_leaves(const KohTree& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.label.a);
        return;
    }
    for (const auto& c : t.children) collect_leaves(*c.tree, out);
}
} // namespace detail

/// Leaf labels in depth-first, left-to-right order.
inline std::vector<int> leaves(const KohTree& t) {
    std::vector<int> out;
    detail::collect_leaves(t, out);
    return out;
}

/// sigma = ab - (sum of leaf labels) for a root of type (a, b); always even
/// and within [0, ab] for a valid tree.
inline long long sigma(const KohTree& t) {
    const auto ls = leaves(t);
    const long long total = static_cast<long long>(t.label.a) * t.label.b;
    const long long s = total - std::accumulate(ls.begin(), ls.end(), 0LL);
    if (s < 0 || s > total || s % 2 != 0)
        throw Error(Errc::structure_violation, "sigma = " + std::to_string(s) + " is not an even value in [0, ab]");
    return s;
}

/// q^(sigma/2) * prod over leaves of [a+1]_q.
inline QPoly leaf_product_term(long long half_sigma, const std::vector<int>& leaf_labels) {
    QPoly term{1};
    for (int a : leaf_labels) term *= q_int(a);
    return shift(term, static_cast<int>(half_sigma));
}

inline QPoly koh_term(const KohTree& t) {
    return leaf_product_term(sigma(t) / 2, leaves(t));
}

/// Direct one-level evaluation of the KOH identity:
/// sum over lambda |- k of q^(2 b(lambda)) prod_j ((n+2)j - 2Q_j + m_j choose m_j)_q,
/// where a Gaussian binomial with negative top parameter vanishes.
inline QPoly koh_rhs_closed(int n, int k) {
    if (n < 0 || k < 1) throw Error(Errc::precondition_violation, "koh_rhs_closed needs n >= 0, k >= 1");
    QPoly total;
    for (const auto& lambda : enumerate_partitions(k)) {
        QPoly term{1};
        for (int j : distinct_rows(lambda)) {
            const int m = mult(lambda, j);
            const int top = (n + 2) * j - 2 * q_stat(lambda, j) + m;
            if (top < m) {  // bottom exceeds top (including top < 0): zero
                term = {};
                break;
            }
            term *= q_binomial(top - m, m);
        }
        if (!term.is_zero()) total += shift(term, static_cast<int>(2 * b_stat(lambda)));
    }
    return total;
}

/// Checks every local rule on the whole tree: label shape, one child per
/// distinct row length with increasing edges, the child-type equations,
/// nonnegative labels, and a'b' <= ab with equality exactly for single-row
/// parents. Throws STRUCTURE_VIOLATION naming the first failure.
inline void validate_koh_tree(const KohTree& t) {
    const auto& [mu, a, b] = t.label;
    auto fail = [&](const std::string& why) {
        throw Error(Errc::structure_violation,
                    "node (" + to_string(mu) + ", " + std::to_string(a) + ", " + std::to_string(b) + "): " + why);
    };
    if (a < 0) fail("negative a");
    if (b < 1 || mu.size() != b) fail("|mu| != b");
    if (b == 1) {
        if (!(mu == Partition{1}) || !t.is_leaf()) fail("b = 1 must be the leaf ((1), a, 1)");
        return;
    }
    const auto rows = distinct_rows(mu);
    if (t.children.size() != rows.size()) fail("wrong number of children");
    const bool single_row = mu.length() == 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& c = t.children[i];
        if (c.edge != rows[i]) fail("edge labels must be the increasing distinct row lengths");
        if (!c.tree) fail("missing child");
        const auto want = koh_child_type(mu, a, rows[i]);
        if (c.tree->label.a != want.a || c.tree->label.b != want.b) fail("child type mismatch at edge " + std::to_string(c.edge));
        const long long parent = static_cast<long long>(a) * b;
        const long long child = static_cast<long long>(want.a) * want.b;
        if (child > parent) fail("a'b' > ab");
        if ((child == parent) != single_row) fail("a'b' = ab must hold exactly for single-row parents");
        validate_koh_tree(*c.tree);
    }
}

} // namespace ohara
