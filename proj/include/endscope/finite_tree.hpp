#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "endscope/presentation.hpp"

namespace endscope {

/// Depth/width bounded truncation of an unfolding.
///
/// Subtrees that are identical by construction (same presentation node, same
/// depth) are stored once, so the value is a rooted DAG whose path expansion
/// is the truncated tree. Node 0 is the root unless the tree is empty.
class FiniteTree {
public:
    struct Link {
        Step step;
        /// Child came from an infinite edge (one of the sampled indices).
        bool sampled = false;
        std::uint32_t node = 0;
    };

    struct Node {
        NodeId tag = kNoNode;
        std::uint32_t depth = 0;
        bool live = false;
        bool truncated_infinite = false;
        std::vector<Link> children;
    };

    bool empty() const noexcept { return nodes_.empty(); }
    std::uint32_t max_depth() const noexcept { return max_depth_; }
    std::uint64_t width() const noexcept { return width_; }

    /// Shared storage; a stored node may stand for many tree nodes.
    const std::vector<Node>& shared_nodes() const noexcept { return nodes_; }
    const Node& node(std::uint32_t id) const { return nodes_.at(id); }
    std::uint32_t root() const noexcept { return 0; }

    /// Number of nodes of the expanded tree.
    std::uint64_t size() const;

    /// Visits every node of the expanded tree in preorder. Returning false
    /// from the visitor skips that node's subtree.
    void visit(const std::function<bool(const UNode&, const Node&)>& visitor) const;

private:
    friend FiniteTree truncate(const TreePresentation&, std::uint32_t, std::uint64_t);

    std::vector<Node> nodes_;
    std::uint32_t max_depth_ = 0;
    std::uint64_t width_ = 0;
};

/// All unfolding nodes up to `depth`, infinite branching sampled at `width`.
/// A node is live iff its tag survives pruning.
FiniteTree truncate(const TreePresentation& p, std::uint32_t depth, std::uint64_t width);

} // namespace endscope
