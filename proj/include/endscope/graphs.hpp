#pragma once

// Finite graphs: normal spanning trees, separators, minimal normal
// extensions, and the clique expansion of declared edge-dominating vertices.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace endscope {

using VertexIndex = std::uint32_t;
using VertexSet = std::vector<bool>;

/// Simple undirected graph. Vertices are kept sorted by name, so index order
/// is lexicographic name order and adjacency lists are sorted.
class FiniteGraph {
public:
    FiniteGraph() = default;
    /// Duplicate edges are merged; self-loops and unknown endpoints throw.
    FiniteGraph(std::string name, std::vector<std::string> vertices,
                const std::vector<std::pair<std::string, std::string>>& edges);

    const std::string& name() const noexcept { return name_; }
    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept;
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name_of(VertexIndex v) const { return names_.at(v); }
    std::optional<VertexIndex> find(std::string_view name) const;
    VertexIndex index_of(std::string_view name) const;

    const std::vector<VertexIndex>& neighbors(VertexIndex v) const { return adj_.at(v); }
    bool adjacent(VertexIndex a, VertexIndex b) const;
    /// Sorted name pairs (first < second), sorted.
    std::vector<std::pair<std::string, std::string>> edge_list() const;

    /// Number of duplicate edge lines merged while building.
    std::size_t merged_duplicates() const noexcept { return merged_; }

private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::vector<VertexIndex>> adj_;
    std::size_t merged_ = 0;
};

/// `.graph` format: `graph <name>`, `edge <u> <v>`, `vertex <v>`, `#` comments.
FiniteGraph parse_graph(std::string_view text);

/// Rooted tree inside a graph. Vertices with `member` false are not in the tree.
struct RootedSpanTree {
    VertexIndex root = 0;
    std::vector<bool> member;
    std::vector<std::optional<VertexIndex>> parent;

    std::size_t size() const;
    /// Path from `v` down to the root, inclusive (the down-closure of `v`).
    std::vector<VertexIndex> down_closure(VertexIndex v) const;
    /// x <= y in the tree order.
    bool leq(VertexIndex x, VertexIndex y) const;
    bool comparable(VertexIndex x, VertexIndex y) const { return leq(x, y) || leq(y, x); }
};

/// Throws PreconditionError unless `t` is a rooted tree in `g`.
void validate(const FiniteGraph& g, const RootedSpanTree& t);

/// Depth-first spanning tree of the component of `root`, neighbours visited
/// in lexicographic order.
RootedSpanTree dfs_normal_tree(const FiniteGraph& g, VertexIndex root);

struct NormalityVerdict {
    bool normal = true;
    /// A path between tree-incomparable vertices whose interior avoids the tree.
    std::vector<VertexIndex> violating_path;

    explicit operator bool() const noexcept { return normal; }
};

/// Brute-force normality check: no path between incomparable tree vertices
/// has all inner vertices outside the tree. Works for any rooted subtree.
NormalityVerdict is_normal(const FiniteGraph& g, const RootedSpanTree& t);

/// Do the common predecessors of incomparable x and y separate them in g?
bool separator_check(const FiniteGraph& g, const RootedSpanTree& t, VertexIndex x, VertexIndex y);

/// Smallest down-closed subtree of the normal tree `s` containing the
/// down-closed `base` and the vertices `h`.
RootedSpanTree extend_normal_tree(const FiniteGraph& g, const RootedSpanTree& s, const VertexSet& base,
                                  const VertexSet& h);

struct HgResult {
    FiniteGraph graph;
    /// For every vertex of `graph`: the original vertex, and for clique
    /// vertices the neighbour whose incidence it stands for.
    std::map<std::string, std::pair<std::string, std::optional<std::string>>> naming;
};

/// Name of the clique vertex for neighbour `u` of the expanded vertex `v`.
std::string clique_vertex_name(std::string_view u, std::string_view v);

/// Replaces each vertex of `dominating` by a clique on its incidences and
/// reconnects the incidences to the other side of each edge.
HgResult hg_transform(const FiniteGraph& g, const VertexSet& dominating);

/// Components of g minus `removed`, each as sorted names, ordered by least name.
std::vector<std::vector<std::string>> components(const FiniteGraph& g, const VertexSet& removed);

/// Vertex set from names; unknown names throw PreconditionError.
VertexSet vertex_set(const FiniteGraph& g, const std::vector<std::string>& names);

} // namespace endscope
