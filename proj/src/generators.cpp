#include "endscope/generators.hpp"

#include <map>

#include "endscope/error.hpp"

namespace endscope {

namespace {

const std::map<std::string, std::string>& named_sources() {
    static const std::map<std::string, std::string> sources = {
        {"bin", "tree bin\nroot v\nedge v v 2\n"},
        {"baire", "tree baire\nroot v\nedge v v *\n"},
        {"star", "tree star\nroot r\nedge r c *\nedge c c 1\n"},
        {"uncountable-star", "tree uncountable-star\nroot r\nedge r c w1\nedge c c 1\n"},
        {"single-loop", "tree single-loop\nroot v\nedge v v 1\n"},
        {"comb", "tree comb\nroot s\nedge s s 1\nedge s c 1\nedge c c 1\n"},
    };
    return sources;
}

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string numbered(const std::string& prefix, std::size_t i) { return prefix + std::to_string(i); }

} // namespace

TreePresentation named_presentation(const std::string& name) {
    auto it = named_sources().find(name);
    if (it == named_sources().end()) {
        throw PreconditionError("no presentation named '" + name + "'");
    }
    return parse_tree(it->second);
}

std::vector<std::string> named_presentation_list() {
    std::vector<std::string> out;
    for (const auto& [name, text] : named_sources()) {
        out.push_back(name);
    }
    return out;
}

TreePresentation random_presentation(Rng& rng, const RandomPresentationOptions& opt) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, opt.max_nodes));
    const auto m = static_cast<std::size_t>(uniform(rng, 1, opt.max_edges));
    std::vector<std::string> nodes;
    for (std::size_t i = 0; i < n; ++i) {
        nodes.push_back(numbered("n", i));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
        Edge e{static_cast<NodeId>(uniform(rng, 0, n - 1)), static_cast<NodeId>(uniform(rng, 0, n - 1)),
               Cardinal::finite(uniform(rng, 1, opt.max_finite))};
        if (coin(rng, opt.uncountable_rate)) {
            e.mult = Cardinal::aleph(1);
        } else if (coin(rng, opt.infinite_rate)) {
            e.mult = Cardinal::aleph(0);
        }
        edges.push_back(e);
    }
    return TreePresentation("random", std::move(nodes), 0, std::move(edges));
}

FiniteGraph random_connected_graph(Rng& rng, std::size_t max_vertices, double extra_edge_rate) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, max_vertices));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(numbered("v", i));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    // Random tree first, then extra chords.
    for (std::size_t i = 1; i < n; ++i) {
        edges.emplace_back(names[i], names[uniform(rng, 0, i - 1)]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng, extra_edge_rate)) {
                edges.emplace_back(names[i], names[j]);
            }
        }
    }
    return FiniteGraph("random", std::move(names), edges);
}

std::vector<UNode> random_partition(const TreePresentation& p, Rng& rng, std::size_t max_depth, std::size_t splits) {
    std::vector<UNode> members{UNode{}};
    if (p.is_empty()) {
        return members;
    }
    for (std::size_t round = 0; round < splits; ++round) {
        const auto pick = static_cast<std::size_t>(uniform(rng, 0, members.size() - 1));
        const UNode m = members[pick];
        const NodeId v = tag(p, m);
        if (m.depth() >= max_depth || p.out_edges(v).empty()) {
            continue;
        }
        std::vector<UNode> parts;
        for (EdgeOrdinal e : p.out_edges(v)) {
            const Multiplicity& mult = p.edge(e).mult;
            if (!mult.is_infinite()) {
                for (std::uint64_t i = 0; i < mult.value(); ++i) {
                    parts.push_back(m.child({e, i, false}));
                }
                continue;
            }
            const std::uint64_t explicit_count = uniform(rng, 0, 2);
            for (std::uint64_t i = 0; i < explicit_count; ++i) {
                parts.push_back(m.child({e, i, false}));
            }
            parts.push_back(m.child({e, explicit_count, true}));
        }
        members.erase(members.begin() + static_cast<std::ptrdiff_t>(pick));
        members.insert(members.end(), parts.begin(), parts.end());
    }
    return members;
}

std::vector<UNode> random_cones(const TreePresentation& p, Rng& rng, std::size_t max_depth, std::size_t count) {
    std::vector<UNode> out;
    if (p.is_empty()) {
        return out;
    }
    for (std::size_t k = 0; k < count; ++k) {
        UNode t;
        const auto depth = static_cast<std::size_t>(uniform(rng, 0, max_depth));
        while (t.depth() < depth) {
            const auto& outs = p.out_edges(tag(p, t));
            if (outs.empty()) {
                break;
            }
            const EdgeOrdinal e = outs[uniform(rng, 0, outs.size() - 1)];
            const Multiplicity& mult = p.edge(e).mult;
            if (mult.is_infinite()) {
                t = t.child({e, uniform(rng, 0, 3), coin(rng, 0.15)});
            } else {
                t = t.child({e, uniform(rng, 0, mult.value() - 1), false});
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

DocumentedExample clique_with_rays(std::size_t n, std::size_t length) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string base = "r" + std::to_string(i) + "_";
        for (std::size_t j = 0; j < length; ++j) {
            vertices.push_back(base + std::to_string(j));
            if (j > 0) {
                edges.emplace_back(base + std::to_string(j - 1), base + std::to_string(j));
            }
        }
        for (std::size_t k = 0; k < i; ++k) {
            edges.emplace_back("r" + std::to_string(k) + "_0", base + "0");
        }
    }
    return {"clique-with-rays", FiniteGraph("clique-with-rays", std::move(vertices), edges),
            named_presentation("uncountable-star"),
            "Removing the clique leaves one component per ray, and each ray is an isolated end: the star of "
            "aleph_1 rays, Lindelof degree aleph_1. The clique's own end compactifies that discrete family "
            "(one-point compactification, compact); that point has uncountable character, so the full end "
            "space has no presentation of height omega."};
}

DocumentedExample successor_cliques(std::size_t branching, std::size_t height) {
    std::vector<std::string> vertices{"x"};
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> level{"x"};
    for (std::size_t h = 0; h < height; ++h) {
        std::vector<std::string> next;
        for (const std::string& s : level) {
            std::vector<std::string> kids;
            for (std::size_t i = 0; i < branching; ++i) {
                kids.push_back(s + "." + std::to_string(i));
                edges.emplace_back(s, kids.back());
                for (std::size_t j = 0; j + 1 < kids.size(); ++j) {
                    edges.emplace_back(kids[j], kids.back());
                }
            }
            next.insert(next.end(), kids.begin(), kids.end());
        }
        vertices.insert(vertices.end(), next.begin(), next.end());
        level = std::move(next);
    }
    // Node n stands for a vertex s; b walks along the successor clique of s,
    // stepping into successor i (edge to n) or on to later successors (b).
    auto p = parse_tree(
        "tree successor-cliques\nroot n\nedge n n 1\nedge n b 1\nedge b n 1\nedge b b 1\n");
    return {"successor-cliques", FiniteGraph("successor-cliques", std::move(vertices), edges), std::move(p),
            "Ends: one per branch of omega^omega and one per successor clique; the successors of s converge to "
            "the end of their clique. Every node of the presentation branches finitely, so the space is "
            "compact, hence Menger, yet it contains a copy of the Baire space. It is not scattered, so not "
            "Rothberger."};
}

DocumentedExample binary_with_cliques(std::size_t height, std::size_t clique) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> level{"t"};
    for (std::size_t h = 0; h <= height; ++h) {
        std::vector<std::string> next;
        for (const std::string& s : level) {
            vertices.push_back(s);
            for (std::size_t i = 0; i < clique; ++i) {
                const std::string k = "k" + s.substr(1) + "_" + std::to_string(i);
                vertices.push_back(k);
                edges.emplace_back(s, k);
                for (std::size_t j = 0; j < i; ++j) {
                    edges.emplace_back("k" + s.substr(1) + "_" + std::to_string(j), k);
                }
            }
            if (h < height) {
                for (const char bit : {'0', '1'}) {
                    next.push_back(s + bit);
                    edges.emplace_back(s, next.back());
                }
            }
        }
        level = std::move(next);
    }
    auto p = parse_tree("tree binary-with-cliques\nroot v\nedge v v 2\nedge v k 1\nedge k k 1\n");
    return {"binary-with-cliques", FiniteGraph("binary-with-cliques", std::move(vertices), edges), std::move(p),
            "No vertex is timid, yet the edge-end space contains the Cantor space: compact, Menger, not "
            "Rothberger."};
}

} // namespace endscope
