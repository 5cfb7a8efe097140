#pragma once

// Identity sweeps behind `ohara verify`. Each check covers one tree type
// and reports the identity, the marked-tree counts at every r up to half
// the degree, and the structural rules of every enumerated tree.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "ohara/coefficients.hpp"
#include "ohara/error.hpp"
#include "ohara/goh.hpp"
#include "ohara/koh.hpp"
#include "ohara/limits.hpp"
#include "ohara/marking.hpp"
#include "ohara/serialize.hpp"

namespace ohara {

struct TypeCheck {
    std::string params;
    std::size_t trees = 0;
    bool identity_ok = true;
    bool marked_ok = true;
    bool structure_ok = true;
    std::string diagnostic;  // first failure, empty when everything passed

    bool ok() const noexcept { return identity_ok && marked_ok && structure_ok; }
};

namespace detail {

inline void note(TypeCheck& c, const std::string& msg) {
    if (c.diagnostic.empty()) c.diagnostic = msg;
}

inline bool term_shape_ok(const QPoly& term, long long total) {
    return is_symmetric(term, static_cast<int>(total)) && is_unimodal(term);
}

} // namespace detail

inline TypeCheck check_koh_type(int n, int k, const Limits& limits = {}) {
    TypeCheck c;
    c.params = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    const long long total = static_cast<long long>(n) * k;
    const auto trees = enumerate_koh_trees(n, k, limits);
    c.trees = trees.size();

    QPoly sum;
    std::vector<std::vector<int>> lists;
    for (const auto& t : trees) {
        try {
            validate_koh_tree(*t);
            const auto term = koh_term(*t);
            if (!detail::term_shape_ok(term, total)) throw Error(Errc::structure_violation, "term is not symmetric unimodal");
            sum += term;
        } catch (const Error& e) {
            c.structure_ok = false;
            detail::note(c, std::string(e.what()) + "\n" + to_json(*t).dump());
        }
        lists.push_back(leaves(*t));
    }
    const auto binom = q_binomial(n, k);
    const auto closed = koh_rhs_closed(n, k);
    if (!(sum == binom) || !(closed == binom)) {
        c.identity_ok = false;
        detail::note(c, "tree sum " + to_string(sum) + "\nq-binomial " + to_string(binom) + "\nclosed form " + to_string(closed));
    }
    for (long long r = 0; 2 * r <= total; ++r) {
        std::vector<BigInt> per_tree;
        const BigInt marked = count_marked_trees(lists, total, r, &per_tree);
        const BigInt diff = count_in_rectangle(n, k, static_cast<int>(r)) - count_in_rectangle(n, k, static_cast<int>(r) - 1);
        if (marked != diff || diff < 0) {
            c.marked_ok = false;
            std::ostringstream os;
            os << "r=" << r << ": marked trees " << marked << ", p_r - p_{r-1} = " << diff << "; witnesses:";
            for (std::size_t i = 0; i < per_tree.size(); ++i)
                if (per_tree[i] != 0) os << "\n  " << per_tree[i] << " x " << to_json(*trees[i]).dump();
            detail::note(c, os.str());
        }
    }
    return c;
}

inline TypeCheck check_goh_type(const Partition& mu, int k, const Limits& limits = {}) {
    TypeCheck c;
    c.params = "mu=" + to_string(mu) + " k=" + std::to_string(k);
    const long long total = static_cast<long long>(mu.size()) * k;
    const auto trees = enumerate_goh_trees(mu, k, limits);
    c.trees = trees.size();

    QPoly sum;
    std::vector<std::vector<int>> lists;
    for (const auto& t : trees) {
        try {
            validate_goh_tree(t);
            const auto term = goh_term(t);
            if (!detail::term_shape_ok(term, total)) throw Error(Errc::structure_violation, "term is not symmetric unimodal");
            sum += term;
        } catch (const Error& e) {
            c.structure_ok = false;
            detail::note(c, std::string(e.what()) + "\n" + to_json(t).dump());
        }
        lists.push_back(goh_leaves(t));
    }
    const auto hook = hook_content(mu, k);
    const auto closed = goh_rhs_closed(mu, k);
    const auto oracle = schur_specialization_oracle(mu, k, limits);
    if (!(sum == hook) || !(closed == hook) || !(oracle == hook)) {
        c.identity_ok = false;
        detail::note(c, "tree sum " + to_string(sum) + "\nhook-content " + to_string(hook) + "\nclosed form " +
                            to_string(closed) + "\ntableaux " + to_string(oracle));
    }
    for (long long r = 0; 2 * r <= total; ++r) {
        std::vector<BigInt> per_tree;
        const BigInt marked = count_marked_trees(lists, total, r, &per_tree);
        const BigInt diff = hook[static_cast<int>(r)] - hook[static_cast<int>(r) - 1];
        if (marked != diff || diff < 0) {
            c.marked_ok = false;
            std::ostringstream os;
            os << "r=" << r << ": marked trees " << marked << ", hook-content difference " << diff << "; witnesses:";
            for (std::size_t i = 0; i < per_tree.size(); ++i)
                if (per_tree[i] != 0) os << "\n  " << per_tree[i] << " x " << to_json(trees[i]).dump();
            detail::note(c, os.str());
        }
    }
    return c;
}

} // namespace ohara
