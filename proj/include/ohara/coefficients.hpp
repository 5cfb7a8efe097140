#pragma once

/**
 * @file coefficients.hpp
 * @brief Two-row rectangular Kronecker coefficients and two-row plethysm
 * coefficients, each computable by counting marked trees or as a
 * successive difference of a generating function.
 *
 *   g((nk-r, r), (n^k), (n^k)) = p_r(n,k) - p_{r-1}(n,k)        = |marked KOH trees|
 *   a^{(nk-r, r)}_{mu,(k)}      = [q^r] (1-q) s_mu(1, ..., q^k)  = |marked GOH trees|
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ohara/error.hpp"
#include "ohara/goh.hpp"
#include "ohara/koh.hpp"
#include "ohara/limits.hpp"
#include "ohara/marking.hpp"
#include "ohara/partitions.hpp"
#include "ohara/qpoly.hpp"

namespace ohara {

enum class Method { marked_trees, difference_formula, both };

constexpr std::string_view method_name(Method m) noexcept {
    switch (m) {
    case Method::marked_trees: return "marked_trees";
    case Method::difference_formula: return "difference_formula";
    case Method::both: return "both";
    }
    return "unknown";
}

struct CoefficientReport {
    BigInt value = 0;
    Method method = Method::both;
    /// Marking counts per tree index (canonical enumeration order), nonzero
    /// entries only; filled whenever the marked-tree path runs.
    std::optional<std::map<std::size_t, BigInt>> witness_count_by_tree;
};

/// s_mu(1, q, ..., q^k) by the q-hook-content formula
///   q^{b(mu)} prod_{cells (i,j)} (1 - q^{k+1+j-i}) / (1 - q^{hook(i,j)}),
/// evaluated with exact polynomial division.
inline QPoly hook_content(const Partition& mu, int k) {
    if (k < 0) throw Error(Errc::precondition_violation, "k must be nonnegative");
    const auto cols = conjugate(mu);
    QPoly num{1};
    QPoly den{1};
    for (int i = 1; i <= mu.length(); ++i) {
        for (int j = 1; j <= mu.row(i); ++j) {
            const int e = k + 1 + j - i;
            if (e <= 0) return {};  // more than k+1 rows
            num *= QPoly{1} - QPoly::monomial(1, e);
            den *= QPoly{1} - QPoly::monomial(1, mu.row(i) + cols.row(j) - i - j + 1);
        }
    }
    return shift(exact_div(num, den), static_cast<int>(b_stat(mu)));
}

/// Independent oracle: sum of q^(entry sum) over semistandard fillings of mu
/// with entries in {0, ..., k}, by backtracking. Throws BUDGET_EXCEEDED once
/// more than limits.max_fillings fillings are produced.
inline QPoly schur_specialization_oracle(const Partition& mu, int k, const Limits& limits = {}) {
    if (k < 0) throw Error(Errc::precondition_violation, "k must be nonnegative");
    const int rows = mu.length();
    std::vector<std::vector<int>> filling(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) filling[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(mu.row(i + 1)), 0);
    std::vector<BigInt> counts(static_cast<std::size_t>(mu.size()) * static_cast<std::size_t>(k) + 1);
    std::size_t produced = 0;

    auto rec = [&](auto&& self, int i, int j, int sum) -> void {
        if (i == rows) {
            if (++produced > limits.max_fillings)
                throw Error(Errc::budget_exceeded, "more than " + std::to_string(limits.max_fillings) + " fillings");
            counts[static_cast<std::size_t>(sum)] += 1;
            return;
        }
        if (j == mu.row(i + 1)) {
            self(self, i + 1, 0, sum);
            return;
        }
        auto& row = filling[static_cast<std::size_t>(i)];
        int lo = j > 0 ? row[static_cast<std::size_t>(j) - 1] : 0;
        if (i > 0) lo = std::max(lo, filling[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)] + 1);
        for (int v = lo; v <= k; ++v) {
            row[static_cast<std::size_t>(j)] = v;
            self(self, i, j + 1, sum + v);
        }
    };
    rec(rec, 0, 0, 0);
    return QPoly(std::move(counts));
}

namespace detail {

inline void require_nonnegative(const BigInt& v, const std::string& what) {
    if (v < 0) throw Error(Errc::positivity_violation, what + " produced the negative value " + v.str());
}

template <class Trees, class LeafFn>
std::vector<std::vector<int>> leaf_lists(const Trees& trees, LeafFn&& leaf_fn) {
    std::vector<std::vector<int>> out;
    out.reserve(trees.size());
    for (const auto& t : trees) out.push_back(leaf_fn(t));
    return out;
}

inline CoefficientReport cross_checked(Method method, const std::function<BigInt()>& difference,
                                       const std::function<CoefficientReport()>& marked, const std::string& what) {
    if (method == Method::difference_formula) {
        CoefficientReport r{difference(), method, std::nullopt};
        require_nonnegative(r.value, what);
        return r;
    }
    CoefficientReport r = marked();
    r.method = method;
    require_nonnegative(r.value, what);
    if (method == Method::both) {
        const BigInt d = difference();
        if (d != r.value) {
            std::ostringstream os;
            os << what << ": marked trees give " << r.value << ", difference formula gives " << d
               << "; per-tree marking counts:";
            for (const auto& [id, c] : *r.witness_count_by_tree) os << " #" << id << "=" << c;
            throw Error(Errc::cross_check_failed, os.str());
        }
    }
    return r;
}

inline std::map<std::size_t, BigInt> nonzero_entries(const std::vector<BigInt>& v) {
    std::map<std::size_t, BigInt> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.emplace(i, v[i]);
    return out;
}

} // namespace detail

/// g((nk - r, r), (n^k), (n^k)) for 2r <= nk.
inline CoefficientReport kronecker_two_row(int n, int k, int r, Method method = Method::both, const Limits& limits = {}) {
    if (n < 1 || k < 1 || r < 0 || 2LL * r > static_cast<long long>(n) * k)
        throw Error(Errc::precondition_violation, "kronecker needs n, k >= 1 and 0 <= r <= nk/2");
    const std::string what = "g((" + std::to_string(n * k - r) + "," + std::to_string(r) + "), (" + std::to_string(n) +
                             "^" + std::to_string(k) + "), (" + std::to_string(n) + "^" + std::to_string(k) + "))";
    return detail::cross_checked(
        method, [&] { return count_in_rectangle(n, k, r) - count_in_rectangle(n, k, r - 1); },
        [&] {
            const auto trees = enumerate_koh_trees(n, k, limits);
            const auto lists = detail::leaf_lists(trees, [](const KohTreePtr& t) { return leaves(*t); });
            std::vector<BigInt> per_tree;
            BigInt v = count_marked_trees(lists, static_cast<long long>(n) * k, r, &per_tree);
            return CoefficientReport{v, Method::marked_trees, detail::nonzero_entries(per_tree)};
        },
        what);
}

/// a^{(|mu|k - r, r)}_{mu,(k)} for 2r <= |mu| k.
inline CoefficientReport plethysm_two_row(const Partition& mu, int k, int r, Method method = Method::both,
                                          const Limits& limits = {}) {
    const long long total = static_cast<long long>(mu.size()) * k;
    if (mu.empty() || k < 1 || r < 0 || 2LL * r > total)
        throw Error(Errc::precondition_violation, "plethysm needs nonempty mu, k >= 1 and 0 <= r <= |mu|k/2");
    const std::string what = "a^{(" + std::to_string(total - r) + "," + std::to_string(r) + ")}_{" + to_string(mu) +
                             ",(" + std::to_string(k) + ")}";
    return detail::cross_checked(
        method,
        [&] {
            const auto s = hook_content(mu, k);
            return s[r] - s[r - 1];
        },
        [&] {
            const auto trees = enumerate_goh_trees(mu, k, limits);
            const auto lists = detail::leaf_lists(trees, [](const GohTree& t) { return goh_leaves(t); });
            std::vector<BigInt> per_tree;
            BigInt v = count_marked_trees(lists, total, r, &per_tree);
            return CoefficientReport{v, Method::marked_trees, detail::nonzero_entries(per_tree)};
        },
        what);
}

/// a^lambda_{mu,nu} for l(lambda) <= 2, reduced to an inner plethysm with
/// nu = (k): zero when l(nu) >= 3 or lambda_2 < |mu| nu_2, otherwise the
/// coefficient at theta = lambda - (|mu| nu_2, |mu| nu_2) with k = nu_1 - nu_2.
/// When nu_1 = nu_2, s_mu[(x1 x2)^b] is (x1 x2)^{b|mu|} for l(mu) <= 1 and 0
/// otherwise, so the answer is 1 iff theta is empty and l(mu) <= 1.
inline BigInt plethysm_two_row_general(const Partition& lambda, const Partition& mu, const Partition& nu,
                                       Method method = Method::difference_formula, const Limits& limits = {}) {
    if (lambda.length() > 2) throw Error(Errc::precondition_violation, "lambda must have at most two rows");
    if (static_cast<long long>(lambda.size()) != static_cast<long long>(mu.size()) * nu.size())
        throw Error(Errc::size_mismatch, "|lambda| = " + std::to_string(lambda.size()) + " but |mu||nu| = " +
                                             std::to_string(static_cast<long long>(mu.size()) * nu.size()));
    if (mu.empty()) return 1;  // s_empty = 1, and |lambda| = 0 forces lambda empty
    if (nu.length() >= 3) return 0;
    const int m = mu.size();
    const int shift_rows = m * nu.row(2);
    if (lambda.row(2) < shift_rows) return 0;
    const int theta1 = lambda.row(1) - shift_rows;
    const int theta2 = lambda.row(2) - shift_rows;
    const int k = nu.row(1) - nu.row(2);
    if (k == 0) return (theta1 == 0 && theta2 == 0 && mu.length() <= 1) ? 1 : 0;
    return plethysm_two_row(mu, k, theta2, method, limits).value;
}

} // namespace ohara
