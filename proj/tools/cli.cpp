#include "cli.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ohara/ohara.hpp"

namespace ohara::cli {
namespace {

enum class Format { text, json, dot };

struct UsageError {
    std::string message;
};

Partition parse_partition(std::string text, const std::string& flag) {
    std::erase_if(text, [](char c) { return c == '[' || c == ']' || c == '(' || c == ')' || c == ' '; });
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw UsageError{flag + ": empty part in partition"};
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError{flag + ": '" + item + "' is not an integer"};
        }
        if (used != item.size()) throw UsageError{flag + ": '" + item + "' is not an integer"};
        parts.push_back(v);
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw UsageError{flag + ": " + e.what()};
    }
}

const std::map<std::string, Method> method_names{
    {"marked_trees", Method::marked_trees}, {"marked-trees", Method::marked_trees},
    {"difference", Method::difference_formula}, {"difference_formula", Method::difference_formula},
    {"both", Method::both}};

const std::map<std::string, Format> format_names{{"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}};

struct RunConfig {
    int n = 0;
    int k = 0;
    std::optional<int> r;
    std::string mu, lambda, nu;
    Method method = Method::both;
    Format format = Format::text;
    int max_n = 0, max_k = 0, max_size = 0;
    Limits limits;
};

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

json report_json(const CoefficientReport& rep) {
    json j{{"value", to_json(rep.value)}, {"method", std::string(method_name(rep.method))}};
    if (rep.witness_count_by_tree) {
        json w = json::object();
        for (const auto& [id, c] : *rep.witness_count_by_tree) w[std::to_string(id)] = to_json(c);
        j["witness_count_by_tree"] = std::move(w);
    }
    return j;
}

void print_report(std::ostream& out, Format format, const std::string& what, json header, const CoefficientReport& rep) {
    if (format == Format::json) {
        header.update(report_json(rep));
        out << header.dump(2) << "\n";
        return;
    }
    out << what << " = " << rep.value << "\n";
    if (rep.method == Method::both) out << "method: both (marked_trees agrees with difference_formula)\n";
    else out << "method: " << method_name(rep.method) << "\n";
}

int cmd_kronecker(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.r) throw UsageError{"--r is required"};
    const int r = *cfg.r;
    const auto rep = kronecker_two_row(cfg.n, cfg.k, r, cfg.method, cfg.limits);
    const std::string nk = std::to_string(cfg.n) + "^" + std::to_string(cfg.k);
    print_report(out, cfg.format, "g((" + std::to_string(cfg.n * cfg.k - r) + "," + std::to_string(r) + "), (" + nk + "), (" + nk + "))",
                 {{"command", "kronecker"}, {"n", cfg.n}, {"k", cfg.k}, {"r", r}, {"lambda", {cfg.n * cfg.k - r, r}}}, rep);
    return exit_ok;
}

int cmd_plethysm(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.r) throw UsageError{"--r is required"};
    const int r = *cfg.r;
    const auto mu = parse_partition(cfg.mu, "--mu");
    const auto rep = plethysm_two_row(mu, cfg.k, r, cfg.method, cfg.limits);
    const int total = mu.size() * cfg.k;
    print_report(out, cfg.format,
                 "a^{(" + std::to_string(total - r) + "," + std::to_string(r) + ")}_{" + to_string(mu) + ",(" + std::to_string(cfg.k) + ")}",
                 {{"command", "plethysm"}, {"mu", to_json(mu)}, {"k", cfg.k}, {"r", r}, {"lambda", {total - r, r}}}, rep);
    return exit_ok;
}

int cmd_plethysm_general(const RunConfig& cfg, std::ostream& out) {
    const auto lambda = parse_partition(cfg.lambda, "--lambda");
    const auto mu = parse_partition(cfg.mu, "--mu");
    const auto nu = parse_partition(cfg.nu, "--nu");
    const auto value = plethysm_two_row_general(lambda, mu, nu, cfg.method, cfg.limits);
    if (cfg.format == Format::json) {
        out << json{{"command", "plethysm-general"}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)},
                    {"nu", to_json(nu)}, {"value", to_json(value)}}
                   .dump(2)
            << "\n";
    } else {
        out << "a^{" << to_string(lambda) << "}_{" << to_string(mu) << "," << to_string(nu) << "} = " << value << "\n";
    }
    return exit_ok;
}

void outline(std::ostream& out, const KohTree& t, int depth, const std::string& edge) {
    out << std::string(static_cast<std::size_t>(2 * depth), ' ') << edge;
    if (t.is_leaf()) out << t.label.a << "\n";
    else out << "(" << to_string(t.label.mu) << ", " << t.label.a << ", " << t.label.b << ")\n";
    for (const auto& c : t.children) outline(out, *c.tree, depth + 1, std::to_string(c.edge) + ": ");
}

void outline(std::ostream& out, const GohTree& t) {
    out << "  (" << to_string(t.lambda) << ", (";
    for (std::size_t i = 0; i < t.config.nus.size(); ++i) out << (i ? "," : "") << to_string(t.config.nus[i]);
    out << "), " << t.k << ")\n";
    for (const auto& [edge, child] : t.labeled_children)
        outline(out, *child, 2, std::to_string(edge.first) + "," + std::to_string(edge.second) + ": ");
    if (t.extra_child) outline(out, *t.extra_child, 2, "-: ");
}

// Shared driver for `trees koh` and `trees goh`: Tree is KohTreePtr or GohTree.
template <class Tree, class LeafFn, class JsonFn, class OutlineFn, class DotFn>
int emit_trees(const RunConfig& cfg, std::ostream& out, const std::vector<Tree>& trees, long long total, json header,
               const std::string& caption, LeafFn leaf_fn, JsonFn json_fn, OutlineFn outline_fn, DotFn dot_fn) {
    if (!cfg.r) {
        if (cfg.format == Format::json) {
            header["count"] = trees.size();
            header["trees"] = json::array();
            for (const auto& t : trees) header["trees"].push_back(json_fn(t));
            out << header.dump(2) << "\n";
        } else if (cfg.format == Format::dot) {
            out << dot_fn(std::span<const Tree>(trees), std::span<const std::vector<int>>{}, caption);
        } else {
            out << caption << ": " << trees.size() << " trees\n";
            for (std::size_t i = 0; i < trees.size(); ++i) {
                const auto ls = leaf_fn(trees[i]);
                long long sum = 0;
                for (int a : ls) sum += a;
                out << "#" << i << " leaves=" << join(ls) << " sigma=" << (total - sum) << "\n";
                outline_fn(out, trees[i]);
            }
        }
        return exit_ok;
    }

    const int r = *cfg.r;
    if (r < 0 || 2LL * r > total) throw UsageError{"--r must satisfy 0 <= r <= " + std::to_string(total / 2)};
    std::vector<Tree> marked_trees;
    std::vector<std::vector<int>> marks;
    std::vector<std::size_t> tree_index;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const auto ls = leaf_fn(trees[i]);
        long long sum = 0;
        for (int a : ls) sum += a;
        for (auto& m : enumerate_markings(ls, marking_target(sum, total, r))) {
            if (marks.size() >= cfg.limits.max_trees)
                throw Error(Errc::budget_exceeded, "more than " + std::to_string(cfg.limits.max_trees) + " marked trees");
            marked_trees.push_back(trees[i]);
            marks.push_back(std::move(m));
            tree_index.push_back(i);
        }
    }
    if (cfg.format == Format::json) {
        header["r"] = r;
        header["count"] = marks.size();
        header["trees"] = json::array();
        for (std::size_t i = 0; i < marks.size(); ++i) {
            auto j = with_marks(json_fn(marked_trees[i]), leaf_fn(marked_trees[i]), marks[i], r);
            j["tree_index"] = tree_index[i];
            header["trees"].push_back(std::move(j));
        }
        out << header.dump(2) << "\n";
    } else if (cfg.format == Format::dot) {
        out << dot_fn(std::span<const Tree>(marked_trees), std::span<const std::vector<int>>(marks),
                      caption + " r=" + std::to_string(r) + " ");
    } else {
        out << caption << ", r=" << r << ": " << marks.size() << " marked trees\n";
        for (std::size_t i = 0; i < marks.size(); ++i)
            out << "#" << tree_index[i] << " leaves=" << join(leaf_fn(marked_trees[i])) << " marks=" << join(marks[i]) << "\n";
    }
    return exit_ok;
}

int cmd_trees_koh(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k < 1) throw UsageError{"--k must be at least 1"};
    if (cfg.n < 0) throw UsageError{"--n must be nonnegative"};
    const auto trees = enumerate_koh_trees(cfg.n, cfg.k, cfg.limits);
    return emit_trees(
        cfg, out, trees, static_cast<long long>(cfg.n) * cfg.k, json{{"kind", "koh"}, {"n", cfg.n}, {"k", cfg.k}},
        "KOH type (" + std::to_string(cfg.n) + "," + std::to_string(cfg.k) + ")",
        [](const KohTreePtr& t) { return leaves(*t); }, [](const KohTreePtr& t) { return to_json(*t); },
        [](std::ostream& os, const KohTreePtr& t) { outline(os, *t, 1, ""); },
        [](std::span<const KohTreePtr> ts, std::span<const std::vector<int>> ms, const std::string& c) {
            return koh_dot(ts, ms, c);
        });
}

int cmd_trees_goh(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k < 1) throw UsageError{"--k must be at least 1"};
    const auto mu = parse_partition(cfg.mu, "--mu");
    if (mu.empty()) throw UsageError{"--mu must be nonempty"};
    const auto trees = enumerate_goh_trees(mu, cfg.k, cfg.limits);
    return emit_trees(
        cfg, out, trees, static_cast<long long>(mu.size()) * cfg.k, json{{"kind", "goh"}, {"mu", to_json(mu)}, {"k", cfg.k}},
        "GOH type (" + to_string(mu) + "," + std::to_string(cfg.k) + ")", [](const GohTree& t) { return goh_leaves(t); },
        [](const GohTree& t) { return to_json(t); }, [](std::ostream& os, const GohTree& t) { outline(os, t); },
        [](std::span<const GohTree> ts, std::span<const std::vector<int>> ms, const std::string& c) {
            return goh_dot(ts, ms, c);
        });
}

int report_checks(const std::vector<TypeCheck>& checks, Format format, std::ostream& out) {
    const TypeCheck* first_failure = nullptr;
    std::size_t passed = 0;
    for (const auto& c : checks) {
        if (c.ok()) ++passed;
        else if (!first_failure) first_failure = &c;
    }
    if (format == Format::json) {
        json rows = json::array();
        for (const auto& c : checks)
            rows.push_back({{"params", c.params}, {"trees", c.trees}, {"identity", c.identity_ok},
                            {"marked", c.marked_ok}, {"structure", c.structure_ok}});
        json j{{"rows", rows}, {"passed", passed}, {"total", checks.size()}};
        if (first_failure) j["counterexample"] = {{"params", first_failure->params}, {"detail", first_failure->diagnostic}};
        out << j.dump(2) << "\n";
    } else {
        auto yn = [](bool b) { return b ? "ok" : "FAIL"; };
        out << "type                        trees  identity  marked  structure  status\n";
        for (const auto& c : checks) {
            std::string p = c.params;
            p.resize(std::max<std::size_t>(p.size(), 26), ' ');
            std::string trees = std::to_string(c.trees);
            trees.insert(0, trees.size() < 5 ? 5 - trees.size() : 0, ' ');
            out << p << "  " << trees << "  " << yn(c.identity_ok) << "        " << yn(c.marked_ok) << "      "
                << yn(c.structure_ok) << "         " << (c.ok() ? "PASS" : "FAIL") << "\n";
        }
        out << "summary: " << passed << "/" << checks.size() << " types passed\n";
        if (first_failure) out << "first counterexample (" << first_failure->params << "):\n" << first_failure->diagnostic << "\n";
    }
    return first_failure ? exit_verification_failed : exit_ok;
}

int cmd_verify_koh(const RunConfig& cfg, std::ostream& out) {
    if (cfg.max_n < 0 || cfg.max_k < 1) throw UsageError{"--max-n must be >= 0 and --max-k >= 1"};
    std::vector<std::pair<int, int>> types;
    for (int n = 0; n <= cfg.max_n; ++n)
        for (int k = 1; k <= cfg.max_k; ++k) types.emplace_back(n, k);
    std::vector<TypeCheck> checks(types.size());
    Limits inner = cfg.limits;
    inner.workers = 1;
    detail::parallel_for(types.size(), cfg.limits.workers,
                         [&](std::size_t i) { checks[i] = check_koh_type(types[i].first, types[i].second, inner); });
    return report_checks(checks, cfg.format, out);
}

int cmd_verify_goh(const RunConfig& cfg, std::ostream& out) {
    if (cfg.max_size < 1 || cfg.max_k < 1) throw UsageError{"--max-size and --max-k must be >= 1"};
    std::vector<std::pair<Partition, int>> types;
    for (int size = 1; size <= cfg.max_size; ++size)
        for (const auto& mu : enumerate_partitions(size))
            for (int k = 1; k <= cfg.max_k; ++k) types.emplace_back(mu, k);
    std::vector<TypeCheck> checks(types.size());
    Limits inner = cfg.limits;
    inner.workers = 1;
    detail::parallel_for(types.size(), cfg.limits.workers,
                         [&](std::size_t i) { checks[i] = check_goh_type(types[i].first, types[i].second, inner); });
    return report_checks(checks, cfg.format, out);
}

bool is_usage_code(Errc code) {
    return code == Errc::precondition_violation || code == Errc::invalid_partition || code == Errc::size_mismatch ||
           code == Errc::parse_error || code == Errc::invalid_row_length;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Marked KOH/GOH trees: two-row Kronecker and plethysm coefficients", "ohara"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    unsigned jobs = 1;
    std::size_t max_trees = cfg.limits.max_trees;
    std::size_t max_fillings = cfg.limits.max_fillings;
    app.add_option("--jobs", jobs, "worker threads for enumeration and sweeps")->envname("OHARA_JOBS")->check(CLI::PositiveNumber);
    app.add_option("--max-trees", max_trees, "tree enumeration budget")->envname("OHARA_MAX_TREES")->check(CLI::PositiveNumber);
    app.add_option("--max-fillings", max_fillings, "tableau oracle budget")->envname("OHARA_MAX_FILLINGS")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "text, json or dot")->transform(CLI::CheckedTransformer(format_names));

    auto add_method = [&](CLI::App* sub) {
        sub->add_option("--method", cfg.method, "marked_trees, difference or both")
            ->transform(CLI::CheckedTransformer(method_names));
    };

    auto* kron = app.add_subcommand("kronecker", "g((nk-r,r), (n^k), (n^k))");
    kron->add_option("--n", cfg.n)->required();
    kron->add_option("--k", cfg.k)->required();
    kron->add_option("--r", cfg.r)->required();
    add_method(kron);

    auto* pleth = app.add_subcommand("plethysm", "a^{(|mu|k-r,r)}_{mu,(k)}");
    pleth->add_option("--mu", cfg.mu)->required();
    pleth->add_option("--k", cfg.k)->required();
    pleth->add_option("--r", cfg.r)->required();
    add_method(pleth);

    auto* general = app.add_subcommand("plethysm-general", "a^lambda_{mu,nu} for two-row lambda");
    general->add_option("--lambda", cfg.lambda)->required();
    general->add_option("--mu", cfg.mu)->required();
    general->add_option("--nu", cfg.nu)->required();
    add_method(general);

    auto add_tree_commands = [&](CLI::App* parent) {
        parent->require_subcommand(1);
        auto* koh = parent->add_subcommand("koh", "KOH trees of type (n, k)");
        koh->add_option("--n", cfg.n)->required();
        koh->add_option("--k", cfg.k)->required();
        koh->add_option("--r", cfg.r, "list marked trees at r");
        auto* goh = parent->add_subcommand("goh", "GOH trees of type (mu, k)");
        goh->add_option("--mu", cfg.mu)->required();
        goh->add_option("--k", cfg.k)->required();
        goh->add_option("--r", cfg.r, "list marked trees at r");
        return std::pair{koh, goh};
    };
    auto* trees = app.add_subcommand("trees", "list (marked) trees");
    auto [trees_koh, trees_goh] = add_tree_commands(trees);
    auto* exp = app.add_subcommand("export", "like trees, DOT output by default");
    auto [export_koh, export_goh] = add_tree_commands(exp);

    auto* verify = app.add_subcommand("verify", "identity sweeps");
    verify->require_subcommand(1);
    auto* verify_koh = verify->add_subcommand("koh", "KOH identity and marked counts");
    verify_koh->add_option("--max-n", cfg.max_n)->required();
    verify_koh->add_option("--max-k", cfg.max_k)->required();
    auto* verify_goh = verify->add_subcommand("goh", "GOH identity and marked counts");
    verify_goh->add_option("--max-size", cfg.max_size)->required();
    verify_goh->add_option("--max-k", cfg.max_k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    cfg.limits.workers = jobs;
    cfg.limits.max_trees = max_trees;
    cfg.limits.max_fillings = max_fillings;
    const bool format_given = app.get_option("--format")->count() > 0;

    try {
        if (kron->parsed()) return cmd_kronecker(cfg, out);
        if (pleth->parsed()) return cmd_plethysm(cfg, out);
        if (general->parsed()) {
            if (kron->get_option("--method")->count() == 0 && general->get_option("--method")->count() == 0)
                cfg.method = Method::difference_formula;
            return cmd_plethysm_general(cfg, out);
        }
        if (exp->parsed() && !format_given) cfg.format = Format::dot;
        if (trees_koh->parsed() || export_koh->parsed()) return cmd_trees_koh(cfg, out);
        if (trees_goh->parsed() || export_goh->parsed()) return cmd_trees_goh(cfg, out);
        if (verify_koh->parsed()) return cmd_verify_koh(cfg, out);
        if (verify_goh->parsed()) return cmd_verify_goh(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.message << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_usage_code(e.code()) ? exit_usage : exit_verification_failed;
    }
    err << "usage error: no subcommand\n";
    return exit_usage;
}

} // namespace ohara::cli
