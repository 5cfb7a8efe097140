#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and Graphviz DOT forms of KOH and GOH trees.
 *
 * KOH: {"mu": [..], "a": int, "b": int, "children": [{"edge": j, "tree": {..}}]}
 * GOH: {"lambda": [..], "config": [[..], ..], "k": int,
 *       "children": [{"edge": [i, j] | null, "koh": {..}}]}
 *
 * A marked tree carries the extra keys "r", "marks" and "leaves" (the leaf
 * order the marks refer to); parsers ignore them.
 */

#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ohara/error.hpp"
#include "ohara/goh.hpp"
#include "ohara/koh.hpp"
#include "ohara/partitions.hpp"
#include "ohara/qpoly.hpp"

namespace ohara {

using json = nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw Error(Errc::parse_error, "partition must be a JSON array");
    return Partition(j.get<std::vector<int>>());
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

inline json to_json(const QPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

inline json to_json(const KohTree& t) {
    json children = json::array();
    for (const auto& c : t.children) children.push_back({{"edge", c.edge}, {"tree", to_json(*c.tree)}});
    return {{"mu", to_json(t.label.mu)}, {"a", t.label.a}, {"b", t.label.b}, {"children", std::move(children)}};
}

inline KohTreePtr koh_from_json(const json& j) {
    try {
        KohTree t{KohLabel{partition_from_json(j.at("mu")), j.at("a").get<int>(), j.at("b").get<int>()}, {}};
        for (const auto& c : j.at("children")) t.children.push_back({c.at("edge").get<int>(), koh_from_json(c.at("tree"))});
        return std::make_shared<const KohTree>(std::move(t));
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, e.what());
    }
}

inline json to_json(const Configuration& c) {
    json out = json::array();
    for (const auto& nu : c.nus) out.push_back(to_json(nu));
    return out;
}

inline json to_json(const GohTree& t) {
    json children = json::array();
    for (const auto& [edge, child] : t.labeled_children)
        children.push_back({{"edge", json::array({edge.first, edge.second})}, {"koh", to_json(*child)}});
    if (t.extra_child) children.push_back({{"edge", nullptr}, {"koh", to_json(*t.extra_child)}});
    return {{"lambda", to_json(t.lambda)}, {"config", to_json(t.config)}, {"k", t.k}, {"children", std::move(children)}};
}

inline GohTree goh_from_json(const json& j) {
    try {
        GohTree t;
        t.lambda = partition_from_json(j.at("lambda"));
        t.config.lambda = t.lambda;
        for (const auto& nu : j.at("config")) t.config.nus.push_back(partition_from_json(nu));
        t.k = j.at("k").get<int>();
        for (const auto& c : j.at("children")) {
            auto child = koh_from_json(c.at("koh"));
            const auto& edge = c.at("edge");
            if (edge.is_null()) {
                if (t.extra_child) throw Error(Errc::parse_error, "two unlabelled children");
                t.extra_child = std::move(child);
            } else {
                t.labeled_children.emplace(std::pair{edge.at(0).get<int>(), edge.at(1).get<int>()}, std::move(child));
            }
        }
        return t;
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, e.what());
    }
}

/// Adds the marking keys to a serialized tree.
inline json with_marks(json tree, const std::vector<int>& leaf_labels, const std::vector<int>& marks, int r) {
    tree["r"] = r;
    tree["leaves"] = leaf_labels;
    tree["marks"] = marks;
    return tree;
}

namespace detail {

inline std::string dot_partition(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
    return s + "]";
}

inline std::string dot_label(const KohLabel& l) {
    if (l.b == 1) return std::to_string(l.a);
    return "(" + dot_partition(l.mu) + ", " + std::to_string(l.a) + ", " + std::to_string(l.b) + ")";
}

class DotWriter {
public:
    explicit DotWriter(std::ostream& os) : os_(os) {}

    std::string node(const std::string& label, const std::string& extra = "") {
        std::string id = "n" + std::to_string(next_++);
        os_ << "    " << id << " [label=\"" << label << "\"" << extra << "];\n";
        return id;
    }

    void edge(const std::string& from, const std::string& to, const std::string& label, const std::string& extra = "") {
        os_ << "    " << from << " -> " << to;
        if (!label.empty() || !extra.empty()) {
            os_ << " [";
            if (!label.empty()) os_ << "label=\"" << label << "\"";
            if (!extra.empty()) os_ << (label.empty() ? "" : ", ") << extra;
            os_ << "]";
        }
        os_ << ";\n";
    }

    // Emits a KOH subtree; leaf ids are appended in DFS order.
    std::string koh(const KohTree& t, std::vector<std::string>& leaf_ids) {
        const auto id = node(dot_label(t.label), t.is_leaf() ? ", shape=plaintext" : "");
        if (t.is_leaf()) leaf_ids.push_back(id);
        for (const auto& c : t.children) edge(id, koh(*c.tree, leaf_ids), std::to_string(c.edge));
        return id;
    }

    void marks(const std::vector<std::string>& leaf_ids, const std::vector<int>& marks) {
        for (std::size_t i = 0; i < leaf_ids.size() && i < marks.size(); ++i) {
            const auto m = node(std::to_string(marks[i]), ", shape=circle");
            edge(leaf_ids[i], m, "", "style=dotted, arrowhead=none");
        }
    }

    void open_cluster(std::size_t index, const std::string& caption) {
        os_ << "  subgraph cluster_" << index << " {\n    label=\"" << caption << "\";\n";
    }
    void close_cluster() { os_ << "  }\n"; }

private:
    std::ostream& os_;
    std::size_t next_ = 0;
};

} // namespace detail

/// One digraph with a cluster per tree. `marks`, when non-empty, holds one
/// marking per tree, drawn as circled values under the leaves.
inline std::string koh_dot(std::span<const KohTreePtr> trees, std::span<const std::vector<int>> marks = {},
                           const std::string& caption = "") {
    std::ostringstream os;
    os << "digraph koh {\n  node [fontname=\"Helvetica\"];\n";
    detail::DotWriter w(os);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        w.open_cluster(i, caption + "#" + std::to_string(i));
        std::vector<std::string> leaf_ids;
        w.koh(*trees[i], leaf_ids);
        if (!marks.empty()) w.marks(leaf_ids, marks[i]);
        w.close_cluster();
    }
    os << "}\n";
    return os.str();
}

inline std::string goh_dot(std::span<const GohTree> trees, std::span<const std::vector<int>> marks = {},
                           const std::string& caption = "") {
    std::ostringstream os;
    os << "digraph goh {\n  node [fontname=\"Helvetica\"];\n";
    detail::DotWriter w(os);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const auto& t = trees[i];
        w.open_cluster(i, caption + "#" + std::to_string(i));
        std::string config = "(";
        for (std::size_t c = 0; c < t.config.nus.size(); ++c)
            config += (c ? "," : "") + detail::dot_partition(t.config.nus[c]);
        config += ")";
        const auto root = w.node("(" + detail::dot_partition(t.lambda) + ", " + config + ", " + std::to_string(t.k) + ")",
                                 ", shape=box");
        std::vector<std::string> leaf_ids;
        for (const auto& [edge, child] : t.labeled_children)
            w.edge(root, w.koh(*child, leaf_ids), std::to_string(edge.first) + "," + std::to_string(edge.second));
        if (t.extra_child) w.edge(root, w.koh(*t.extra_child, leaf_ids), "");
        if (!marks.empty()) w.marks(leaf_ids, marks[i]);
        w.close_cluster();
    }
    os << "}\n";
    return os.str();
}

} // namespace ohara
