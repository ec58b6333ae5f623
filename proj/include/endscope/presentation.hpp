#pragma once

// Regular tree presentations: finite pointed multigraphs whose unfolding from
// the root is an infinite rooted tree of height at most omega.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace endscope {

using NodeId = std::uint32_t;
using EdgeOrdinal = std::uint32_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

/// A cardinal on the ladder 1 < 2 < ... < aleph_0 < aleph_1 < ...
///
/// Used both for edge multiplicities (where Finite(0) is rejected) and for
/// reported cardinal invariants such as the Lindelof degree.
class Cardinal {
public:
    enum class Kind : std::uint8_t { Finite, Aleph };

    static Cardinal finite(std::uint64_t n) { return Cardinal(Kind::Finite, n); }
    static Cardinal aleph(std::uint64_t k) { return Cardinal(Kind::Aleph, k); }

    Kind kind() const noexcept { return kind_; }
    std::uint64_t value() const noexcept { return value_; }
    bool is_infinite() const noexcept { return kind_ == Kind::Aleph; }
    bool is_uncountable() const noexcept { return kind_ == Kind::Aleph && value_ > 0; }

    /// `finite:<n>` or `aleph:<k>`.
    std::string to_string() const;
    static Cardinal from_string(std::string_view text);

    friend auto operator<=>(const Cardinal&, const Cardinal&) = default;

private:
    Cardinal(Kind kind, std::uint64_t value) : kind_(kind), value_(value) {}

    Kind kind_;
    std::uint64_t value_;
};

using Multiplicity = Cardinal;

struct Edge {
    NodeId src;
    NodeId dst;
    Multiplicity mult;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multigraph with a designated root. Edge order is significant: it
/// fixes the ordinals used to address children of the unfolding.
///
/// A presentation with no nodes is the EMPTY presentation, whose unfolding
/// has no rays.
class TreePresentation {
public:
    TreePresentation() = default;
    TreePresentation(std::string name, std::vector<std::string> nodes, NodeId root,
                     std::vector<Edge> edges);

    static TreePresentation empty(std::string name = "empty");

    const std::string& name() const noexcept { return name_; }
    bool is_empty() const noexcept { return nodes_.empty(); }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    NodeId root() const noexcept { return root_; }

    const std::vector<std::string>& node_names() const noexcept { return nodes_; }
    const std::string& node_name(NodeId v) const { return nodes_.at(v); }
    std::optional<NodeId> find_node(std::string_view name) const;

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeOrdinal e) const { return edges_.at(e); }
    /// Ordinals of the edges leaving `v`, ascending.
    const std::vector<EdgeOrdinal>& out_edges(NodeId v) const { return out_.at(v); }

    bool has_infinite_edge() const;

    /// Same nodes (by name, in order), root and edge list.
    friend bool operator==(const TreePresentation& a, const TreePresentation& b) {
        return a.nodes_ == b.nodes_ && a.root_ == b.root_ && a.edges_ == b.edges_;
    }

private:
    std::string name_;
    std::vector<std::string> nodes_;
    NodeId root_ = kNoNode;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeOrdinal>> out_;
};

/// Parses the line-based `.tree` format.
TreePresentation parse_tree(std::string_view text);
std::string format_tree(const TreePresentation& p);

/// Nodes of `p` lying on a ray of the unfolding: reachable from the root and
/// able to reach a directed cycle.
std::vector<bool> live_nodes(const TreePresentation& p);

struct PruneResult {
    TreePresentation presentation;
    /// For every edge of the input, its ordinal in the pruned presentation.
    std::vector<std::optional<EdgeOrdinal>> edge_map;
};

PruneResult prune_with_map(const TreePresentation& p);
TreePresentation prune(const TreePresentation& p);
bool is_pruned(const TreePresentation& p);

// ---------------------------------------------------------------------------
// Unfolding nodes and cones

/// One step of a walk: follow edge `edge` to child number `index`. A `tail`
/// step (only legal on infinite edges) stands for every child index >= `index`.
struct Step {
    EdgeOrdinal edge = 0;
    std::uint64_t index = 0;
    bool tail = false;

    friend auto operator<=>(const Step&, const Step&) = default;
};

/// A node of the unfolding, identified with the basic open set of rays through
/// it. When some step is a tail the value denotes the union of the cones of
/// all matching nodes; such generalized cones only occur in cone families.
struct UNode {
    std::vector<Step> steps;

    std::size_t depth() const noexcept { return steps.size(); }
    bool is_root() const noexcept { return steps.empty(); }
    bool is_concrete() const noexcept;

    UNode child(Step s) const;
    UNode prefix(std::size_t len) const;

    /// `@` for the root, else `e<edge>.<index>` joined by `/`; a tail step
    /// prints as `e<edge>.<index>+`.
    std::string to_string() const;
    static UNode parse(std::string_view text);

    friend auto operator<=>(const UNode&, const UNode&) = default;
};

/// Comma separated list of serialized UNodes (empty string = empty list).
std::vector<UNode> parse_unode_list(std::string_view text);

/// Throws PreconditionError unless `t` is a legal walk in `p`.
void validate(const TreePresentation& p, const UNode& t);
bool is_legal(const TreePresentation& p, const UNode& t);
/// Presentation node at the end of the walk.
NodeId tag(const TreePresentation& p, const UNode& t);

/// Cone algebra. `contains(a, b)` is [b] included in [a]; for concrete nodes
/// this is a <= b in the tree order.
bool contains(const UNode& a, const UNode& b);
bool disjoint(const UNode& a, const UNode& b);
/// Strict tree order on concrete nodes: `a` is a proper prefix of `b`.
bool precedes(const UNode& a, const UNode& b);
bool comparable(const UNode& a, const UNode& b);

struct Children {
    std::vector<UNode> nodes;
    bool truncated_infinite = false;
};

/// Children of `t`; infinite edges are sampled at indices 0..sampleWidth-1.
Children children(const TreePresentation& p, const UNode& t, std::uint64_t sample_width);

} // namespace endscope
