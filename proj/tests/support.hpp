#pragma once

// Helpers shared by the unit tests and the acceptance run. Everything here
// recomputes facts from first principles (walks, paths, explicit sets) and
// never calls the derivative code.

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "endscope/generators.hpp"
#include "endscope/graphs.hpp"
#include "endscope/presentation.hpp"
#include "endscope/witnesses.hpp"

namespace support {

using namespace endscope;

inline std::string data_path(const std::string& file) { return std::string(ENDSCOPE_DATA) + "/" + file; }

inline TreePresentation load_tree(const std::string& file) {
    std::ifstream in(data_path(file));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tree(buf.str());
}

inline FiniteGraph load_graph(const std::string& file) {
    std::ifstream in(data_path(file));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

/// Fixed corpus: the same seed and options everywhere.
inline std::vector<TreePresentation> corpus(std::size_t count, std::uint64_t seed = 1,
                                            const RandomPresentationOptions& opt = {}) {
    Rng rng(seed);
    std::vector<TreePresentation> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_presentation(rng, opt));
    }
    return out;
}

/// Is there a walk with `len` edges starting at v? (Presentation nodes only.)
inline bool has_walk(const TreePresentation& p, NodeId v, std::size_t len) {
    std::vector<bool> can(p.node_count(), true);
    for (std::size_t k = 0; k < len; ++k) {
        std::vector<bool> next(p.node_count(), false);
        for (const Edge& e : p.edges()) {
            if (can[e.dst]) {
                next[e.src] = true;
            }
        }
        can = std::move(next);
    }
    return can[v];
}

/// Nodes reachable from the root that start arbitrarily long walks. A walk
/// longer than the node count repeats a node, so that length suffices.
inline std::set<std::string> extendable_nodes(const TreePresentation& p) {
    std::set<std::string> out;
    if (p.is_empty()) {
        return out;
    }
    std::vector<bool> reach(p.node_count(), false);
    std::vector<NodeId> stack{p.root()};
    reach[p.root()] = true;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (EdgeOrdinal e : p.out_edges(v)) {
            if (!reach[p.edge(e).dst]) {
                reach[p.edge(e).dst] = true;
                stack.push_back(p.edge(e).dst);
            }
        }
    }
    for (NodeId v = 0; v < p.node_count(); ++v) {
        if (reach[v] && has_walk(p, v, p.node_count() + 1)) {
            out.insert(p.node_name(v));
        }
    }
    return out;
}

struct LassoRay {
    /// The ray written out to the requested depth.
    UNode prefix;
    /// Edges of the repeating cycle.
    std::vector<EdgeOrdinal> cycle;
    /// Largest index used on an infinite edge anywhere along the ray.
    std::uint64_t max_infinite_index = 0;
    bool uses_infinite_edge = false;
};

/// Eventually periodic rays: a simple path from the root followed by a simple
/// cycle repeated forever. Child indices follow `index_pattern`: a ray crosses
/// the k-th edge with index pattern[k % size] (clamped on finite edges); the
/// cycle reuses the same indices on every lap.
inline std::vector<LassoRay> lasso_rays(const TreePresentation& p, std::size_t depth,
                                        const std::vector<std::uint64_t>& index_pattern) {
    std::vector<LassoRay> out;
    if (p.is_empty()) {
        return out;
    }
    std::vector<EdgeOrdinal> path;
    std::vector<NodeId> on_path{p.root()};
    auto index_for = [&](EdgeOrdinal e, std::size_t k) -> std::uint64_t {
        const std::uint64_t want = index_pattern[k % index_pattern.size()];
        const Multiplicity& m = p.edge(e).mult;
        return m.is_infinite() ? want : std::min<std::uint64_t>(want, m.value() - 1);
    };
    auto emit = [&](std::size_t cycle_from) {
        // path[cycle_from..] closes a cycle back to on_path[cycle_from].
        LassoRay r;
        r.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(cycle_from), path.end());
        std::vector<std::uint64_t> idx;
        for (std::size_t k = 0; k < path.size(); ++k) {
            idx.push_back(index_for(path[k], k));
        }
        for (std::size_t k = 0; k < path.size(); ++k) {
            if (p.edge(path[k]).mult.is_infinite()) {
                r.uses_infinite_edge = true;
                r.max_infinite_index = std::max(r.max_infinite_index, idx[k]);
            }
        }
        const std::size_t lap = path.size() - cycle_from;
        for (std::size_t k = 0; k < depth; ++k) {
            const std::size_t at = k < path.size() ? k : cycle_from + (k - cycle_from) % lap;
            r.prefix.steps.push_back({path[at], idx[at], false});
        }
        out.push_back(std::move(r));
    };
    auto walk = [&](auto&& self, NodeId v) -> void {
        for (EdgeOrdinal e : p.out_edges(v)) {
            const NodeId w = p.edge(e).dst;
            path.push_back(e);
            auto seen = std::find(on_path.begin(), on_path.end(), w);
            if (seen != on_path.end()) {
                emit(static_cast<std::size_t>(seen - on_path.begin()));
            } else {
                on_path.push_back(w);
                self(self, w);
                on_path.pop_back();
            }
            path.pop_back();
        }
    };
    walk(walk, p.root());
    return out;
}

/// Vertices of the tree as names.
inline std::set<std::string> member_names(const FiniteGraph& g, const RootedSpanTree& t) {
    std::set<std::string> out;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (t.member[v]) {
            out.insert(g.name_of(v));
        }
    }
    return out;
}

/// Every simple path from x to y, by exhaustive search.
inline void simple_paths(const FiniteGraph& g, VertexIndex x, VertexIndex y,
                         const std::function<bool(const std::vector<VertexIndex>&)>& visit) {
    std::vector<VertexIndex> path{x};
    std::vector<bool> on(g.vertex_count(), false);
    on[x] = true;
    bool stop = false;
    auto go = [&](auto&& self, VertexIndex a) -> void {
        if (stop) {
            return;
        }
        if (a == y) {
            stop = !visit(path);
            return;
        }
        for (VertexIndex b : g.neighbors(a)) {
            if (!on[b]) {
                on[b] = true;
                path.push_back(b);
                self(self, b);
                path.pop_back();
                on[b] = false;
            }
        }
    };
    go(go, x);
}

/// Corrupts one field of a witness so that it must fail verification. `choice`
/// selects the kind of corruption; every kind breaks a stated invariant.
inline BinaryEmbeddingPrefix mutate(BinaryEmbeddingPrefix w, std::uint64_t choice) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : w.map) {
        keys.push_back(k);
    }
    switch (choice % 4) {
    case 0: {
        // Two domain strings share an image: equal images are neither
        // strictly ordered nor incomparable.
        const std::string& a = keys[choice / 4 % keys.size()];
        const std::string& b = keys[(choice / 4 + 1) % keys.size()];
        w.map[a] = w.map[b];
        break;
    }
    case 1:
        w.map.erase(keys[choice / 4 % keys.size()]);
        break;
    case 2:
        w.depth += 1;
        break;
    default: {
        // A leaf image replaced by its bottom's image: order reversed.
        std::string leaf = keys.back();
        w.map[leaf] = w.map.at("");
        break;
    }
    }
    return w;
}

inline BairePatternPrefix mutate(BairePatternPrefix w, std::uint64_t choice) {
    std::vector<BaireKey> keys;
    for (const auto& [k, v] : w.phi) {
        keys.push_back(k);
    }
    std::vector<BaireKey> inner;
    for (const auto& [k, v] : w.t_of) {
        inner.push_back(k);
    }
    switch (choice % 4) {
    case 0: {
        const BaireKey& a = keys[choice / 4 % keys.size()];
        const BaireKey& b = keys[(choice / 4 + 1) % keys.size()];
        w.phi[a] = w.phi[b];
        break;
    }
    case 1: {
        // The fan node moved onto one of its own fan images: that image is
        // then no child of it.
        const BaireKey& s = inner[choice / 4 % inner.size()];
        BaireKey first = s;
        first.push_back(0);
        w.t_of[s] = w.phi.at(first);
        break;
    }
    case 2:
        w.width += 1;
        break;
    default:
        w.phi.erase(keys[choice / 4 % keys.size()]);
        break;
    }
    return w;
}

} // namespace support
