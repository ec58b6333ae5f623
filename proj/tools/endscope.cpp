// endscope: covering properties of ray spaces of finitely presented trees,
// plus the finite graph constructions.
//
// Exit codes: 0 success, 1 internal error, 2 input error, 3 precondition error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "endscope/covering.hpp"
#include "endscope/error.hpp"
#include "endscope/generators.hpp"
#include "endscope/json_io.hpp"
#include "endscope/oracle.hpp"
#include "endscope/partitions.hpp"

namespace fs = std::filesystem;
using namespace endscope;

namespace {

constexpr int kInputError = 2;
constexpr int kPreconditionError = 3;

class InputFileError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputFileError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TreePresentation load_tree(const std::string& path) {
    try {
        return parse_tree(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

FiniteGraph load_graph(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (!part.empty()) {
            out.push_back(part);
        }
    }
    return out;
}

const char* yes_no(bool b) { return b ? "YES" : "NO"; }

std::string rank_text(const std::optional<std::size_t>& r) { return r ? std::to_string(*r) : "none"; }

void print_report_text(std::ostream& out, const TreePresentation& p, const PropertyReport& r) {
    out << p.name() << '\n';
    out << "  Pruned: " << yes_no(r.pruned) << '\n';
    out << "  Empty: " << yes_no(r.empty) << '\n';
    out << "  Compact: " << yes_no(r.compact) << '\n';
    out << "  Lindelof degree: " << r.lindelof_degree.to_string() << '\n';
    out << "  Extent: " << r.extent.to_string() << '\n';
    out << "  Scattered: " << yes_no(r.scattered) << '\n';
    out << "  Rothberger: " << yes_no(r.rothberger) << '\n';
    out << "  Menger: " << yes_no(r.menger) << '\n';
    out << "  Sigma-compact: " << yes_no(r.sigma_compact) << '\n';
    out << "  Scatter rank: " << rank_text(r.scatter_rank) << '\n';
    out << "  K-Baire rank: " << rank_text(r.kb_rank) << '\n';
    if (r.binary) {
        out << "  Binary witness: depth " << r.binary->depth << ", " << r.binary->map.size() << " images, bottom "
            << r.binary->map.at("").to_string() << '\n';
    }
    if (r.baire) {
        out << "  Baire witness: depth " << r.baire->depth << ", width " << r.baire->width << ", "
            << r.baire->phi.size() << " images, first fan at " << r.baire->t_of.at({}).to_string() << '\n';
    }
}

struct AnalyzeOptions {
    std::string input;
    std::string batch;
    bool json = false;
    std::size_t witness_depth = 3;
};

int cmd_analyze(const AnalyzeOptions& o) {
    std::vector<std::string> files;
    if (!o.batch.empty()) {
        if (!fs::is_directory(o.batch)) {
            throw InputFileError("'" + o.batch + "' is not a directory");
        }
        for (const auto& entry : fs::directory_iterator(o.batch)) {
            if (entry.is_regular_file() && entry.path().extension() == ".tree") {
                files.push_back(entry.path().string());
            }
        }
        std::sort(files.begin(), files.end());
    }
    if (!o.input.empty()) {
        files.insert(files.begin(), o.input);
    }
    if (files.empty()) {
        throw InputFileError("no input given");
    }
    Json all = Json::array();
    for (const std::string& path : files) {
        const TreePresentation p = load_tree(path);
        const PropertyReport r = report(p, o.witness_depth);
        if (o.json) {
            all.push_back(report_to_json(p, r));
        } else {
            print_report_text(std::cout, p, r);
        }
    }
    if (o.json) {
        std::cout << (all.size() == 1 && o.batch.empty() ? all[0] : all).dump(2) << '\n';
    }
    return 0;
}

int cmd_derive(const std::string& input, const std::string& op) {
    const TreePresentation p = load_tree(input);
    DerivativeOperator which;
    try {
        which = derivative_operator_from_string(op);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    std::cout << trace_to_json(p, derive(p, which)).dump(2) << '\n';
    return 0;
}

RootedSpanTree tree_from_parents(const FiniteGraph& g, const std::string& root, const std::string& parents) {
    RootedSpanTree t;
    t.root = g.index_of(root);
    t.member.assign(g.vertex_count(), false);
    t.parent.assign(g.vertex_count(), std::nullopt);
    t.member[t.root] = true;
    for (const std::string& pair : split_names(parents)) {
        auto colon = pair.find(':');
        if (colon == std::string::npos) {
            throw ParseError("expected child:parent, got '" + pair + "'");
        }
        VertexIndex child = g.index_of(pair.substr(0, colon));
        t.member[child] = true;
        t.parent[child] = g.index_of(pair.substr(colon + 1));
    }
    validate(g, t);
    return t;
}

struct GraphOptions {
    std::string input;
    std::string root;
    std::string parents;
    std::string dominating;
    std::string remove;
};

int cmd_graph(const std::string& sub, const GraphOptions& o) {
    const FiniteGraph g = load_graph(o.input);
    if (g.merged_duplicates() > 0) {
        std::cerr << "warning: merged " << g.merged_duplicates() << " duplicate edge(s)\n";
    }
    if (sub == "normal-tree") {
        std::cout << tree_to_json(g, dfs_normal_tree(g, g.index_of(o.root))).dump(2) << '\n';
    } else if (sub == "check-normal") {
        const RootedSpanTree t = tree_from_parents(g, o.root, o.parents);
        const NormalityVerdict v = is_normal(g, t);
        Json path = Json::array();
        for (VertexIndex x : v.violating_path) {
            path.push_back(g.name_of(x));
        }
        std::cout << Json{{"normal", v.normal}, {"violatingPath", std::move(path)}}.dump(2) << '\n';
    } else if (sub == "hg") {
        std::cout << hg_to_json(hg_transform(g, vertex_set(g, split_names(o.dominating)))).dump(2) << '\n';
    } else {
        std::cout << Json(components(g, vertex_set(g, split_names(o.remove)))).dump() << '\n';
    }
    return 0;
}

int cmd_refine(const std::string& input, const std::string& partition, const std::string& cover) {
    const TreePresentation p = load_tree(input);
    ConeFamily part{parse_unode_list(partition), ConeFamily::Kind::Partition};
    const auto cover_members = parse_unode_list(cover);
    std::cout << refinement_to_json(part, refine_partition(p, part, cover_members)).dump(2) << '\n';
    return 0;
}

int cmd_kernel(const std::string& input, const std::string& assignment) {
    const TreePresentation p = load_tree(input);
    ConeFamily a{parse_unode_list(assignment), ConeFamily::Kind::Cover};
    std::cout << kernel_to_json(d_kernel(p, a)).dump(2) << '\n';
    return 0;
}

int cmd_sigma_cover(const std::string& input, std::size_t pieces) {
    const TreePresentation p = load_tree(input);
    auto cover = sigma_cover(p, pieces);
    Json out{{"name", p.name()}, {"menger", cover.has_value()}};
    if (!cover) {
        out["pieces"] = nullptr;
    } else {
        Json list = Json::array();
        for (const TreePresentation& q : *cover) {
            list.push_back(Json{{"name", q.name()}, {"compact", is_compact(q)}, {"tree", format_tree(q)}});
        }
        out["pieces"] = std::move(list);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

struct OracleOptions {
    std::string input;
    OracleSettings settings;
    bool fuzz = false;
    std::uint64_t seed = 1;
    std::size_t count = 500;
};

std::string agreement_text(bool agrees, bool nonempty) {
    return std::string(agrees ? "agree" : "DISAGREE") + " (" + (nonempty ? "nonempty" : "empty") + ")";
}

int cmd_oracle(const OracleOptions& o) {
    if (!o.fuzz) {
        const TreePresentation p = load_tree(o.input);
        const OracleComparison c = compare_with_oracle(p, o.settings);
        std::cout << "SCATTER: " << agreement_text(c.scatter_agrees(), c.scatter_nonempty)
                  << ", COMPACT: " << agreement_text(c.compact_agrees(), c.compact_nonempty) << '\n';
        return 0;
    }
    Rng rng(o.seed);
    std::size_t scatter_bad = 0;
    std::size_t compact_bad = 0;
    for (std::size_t i = 0; i < o.count; ++i) {
        const TreePresentation p = random_presentation(rng);
        OracleSettings s = o.settings;
        s.depth = std::max<std::uint32_t>(s.depth, static_cast<std::uint32_t>(s.embedding_depth * p.node_count() + 1));
        const OracleComparison c = compare_with_oracle(p, s);
        if (!c.scatter_agrees() || !c.compact_agrees()) {
            std::cout << "# disagreement (scatter " << agreement_text(c.scatter_agrees(), c.scatter_nonempty)
                      << ", compact " << agreement_text(c.compact_agrees(), c.compact_nonempty) << ")\n"
                      << format_tree(p);
        }
        scatter_bad += c.scatter_agrees() ? 0 : 1;
        compact_bad += c.compact_agrees() ? 0 : 1;
    }
    std::cout << "presentations: " << o.count << ", SCATTER disagreements: " << scatter_bad
              << ", COMPACT disagreements: " << compact_bad << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covering properties of ray spaces of finitely presented trees"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    auto* a = app.add_subcommand("analyze", "Property report of a .tree file");
    a->add_option("input", analyze.input, ".tree file");
    a->add_option("--batch", analyze.batch, "Analyze every .tree file in a directory");
    a->add_flag("--json", analyze.json, "JSON output");
    a->add_option("--witness-depth", analyze.witness_depth, "Depth of attached witnesses")
        ->check(CLI::PositiveNumber);

    std::string derive_input;
    std::string derive_op = "SCATTER";
    auto* d = app.add_subcommand("derive", "Derivative trace as JSON");
    d->add_option("input", derive_input, ".tree file")->required();
    d->add_option("--operator", derive_op, "SCATTER or COMPACT");

    GraphOptions graph;
    auto* g = app.add_subcommand("graph", "Finite graph constructions");
    g->require_subcommand(1);
    auto* g_tree = g->add_subcommand("normal-tree", "Depth-first normal spanning tree");
    auto* g_check = g->add_subcommand("check-normal", "Check a rooted tree for normality");
    auto* g_hg = g->add_subcommand("hg", "Expand vertices into cliques of their incidences");
    auto* g_comp = g->add_subcommand("components", "Components after removing vertices");
    for (auto* sub : {g_tree, g_check, g_hg, g_comp}) {
        sub->add_option("input", graph.input, ".graph file")->required();
    }
    g_tree->add_option("--root", graph.root, "Root vertex")->required();
    g_check->add_option("--root", graph.root, "Root vertex")->required();
    g_check->add_option("--parents", graph.parents, "Tree as child:parent pairs, comma separated");
    g_hg->add_option("--dominating", graph.dominating, "Vertices to expand, comma separated");
    g_comp->add_option("--remove", graph.remove, "Vertices to remove, comma separated");

    std::string refine_input, refine_partition_text, refine_cover_text;
    auto* r = app.add_subcommand("refine", "Refine a cone partition by a cone cover");
    r->add_option("input", refine_input, ".tree file")->required();
    r->add_option("--partition", refine_partition_text, "Partition cones, comma separated")->required();
    r->add_option("--cover", refine_cover_text, "Cover cones, comma separated")->required();

    std::string kernel_input, kernel_assignment;
    auto* k = app.add_subcommand("kernel", "Closed discrete kernel of a cone assignment");
    k->add_option("input", kernel_input, ".tree file")->required();
    k->add_option("--assignment", kernel_assignment, "Covering cones, comma separated")->required();

    std::string sigma_input;
    std::size_t pieces = 3;
    auto* s = app.add_subcommand("sigma-cover", "Cover by compact ray spaces");
    s->add_option("input", sigma_input, ".tree file")->required();
    s->add_option("--pieces", pieces, "Number of pieces")->check(CLI::PositiveNumber);

    OracleOptions oracle;
    auto* o = app.add_subcommand("oracle", "Compare derivative verdicts with brute-force search");
    o->add_option("input", oracle.input, ".tree file");
    o->add_option("--depth", oracle.settings.depth, "Truncation depth")->check(CLI::PositiveNumber);
    o->add_option("--width", oracle.settings.width, "Sampled width of infinite edges")->check(CLI::PositiveNumber);
    o->add_flag("--fuzz", oracle.fuzz, "Run on random presentations instead of a file");
    o->add_option("--seed", oracle.seed, "Random seed for --fuzz");
    o->add_option("--count", oracle.count, "Number of random presentations")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (a->parsed()) {
            return cmd_analyze(analyze);
        }
        if (d->parsed()) {
            return cmd_derive(derive_input, derive_op);
        }
        if (g->parsed()) {
            return cmd_graph(g->get_subcommands().front()->get_name(), graph);
        }
        if (r->parsed()) {
            return cmd_refine(refine_input, refine_partition_text, refine_cover_text);
        }
        if (k->parsed()) {
            return cmd_kernel(kernel_input, kernel_assignment);
        }
        if (s->parsed()) {
            return cmd_sigma_cover(sigma_input, pieces);
        }
        if (o->parsed()) {
            if (!oracle.fuzz && oracle.input.empty()) {
                throw InputFileError("oracle needs an input file or --fuzz");
            }
            return cmd_oracle(oracle);
        }
    } catch (const InputFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPreconditionError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
