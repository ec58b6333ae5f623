#pragma once

// Named presentations, random instances for fuzzing, and finite truncations
// of the worked graph examples with their hand-derived ray presentations.

#include <random>
#include <string>
#include <vector>

#include "endscope/graphs.hpp"
#include "endscope/presentation.hpp"

namespace endscope {

using Rng = std::mt19937_64;

/// bin, baire, star, uncountable-star, single-loop, comb.
TreePresentation named_presentation(const std::string& name);
std::vector<std::string> named_presentation_list();

struct RandomPresentationOptions {
    std::size_t max_nodes = 6;
    std::size_t max_edges = 8;
    std::uint64_t max_finite = 3;
    /// Chance that an edge is countably infinite, and (rarer) uncountable.
    double infinite_rate = 0.25;
    double uncountable_rate = 0.04;
};

TreePresentation random_presentation(Rng& rng, const RandomPresentationOptions& opt = {});

/// Connected graph on 1..max_vertices vertices named v0, v1, ...
FiniteGraph random_connected_graph(Rng& rng, std::size_t max_vertices = 10, double extra_edge_rate = 0.3);

/// Partition of the ray space into cones: start from the root cone and split
/// random members into children. Infinite edges split into explicit indices
/// plus one tail cone, so the family stays finite.
std::vector<UNode> random_partition(const TreePresentation& p, Rng& rng, std::size_t max_depth, std::size_t splits);

/// Up to `count` random legal cones of depth <= max_depth (not necessarily covering).
std::vector<UNode> random_cones(const TreePresentation& p, Rng& rng, std::size_t max_depth, std::size_t count);

struct DocumentedExample {
    std::string name;
    /// Finite truncation of the infinite graph.
    FiniteGraph graph;
    /// Presentation of the relevant end space, derived by hand.
    TreePresentation presentation;
    std::string notes;
};

/// Disjoint rays whose initial vertices form a clique, truncated to `n` rays of
/// `length` vertices. Each ray is its own end; the presentation is the
/// uncountable star, whose ray space is that family of ends without the
/// clique's end.
DocumentedExample clique_with_rays(std::size_t n, std::size_t length);

/// omega^{<omega} with the successors of every node made into a clique,
/// truncated to `branching` successors and `height` levels. The end space is
/// compact: every node's successors converge to the end of their clique.
DocumentedExample successor_cliques(std::size_t branching, std::size_t height);

/// 2^{<omega} with an infinite clique K_s joined to every node s, truncated
/// to `height` levels and cliques of `clique` vertices. Every vertex
/// edge-dominates a ray. Edge-ends: a Cantor space plus one isolated end per
/// clique.
DocumentedExample binary_with_cliques(std::size_t height, std::size_t clique);

} // namespace endscope
