#pragma once

// Tree derivatives computed on presentation nodes.
//
// The subtree above an unfolding node depends only on its tag, so whether a
// node is trivial at some stage is a property of the tag. Each stage is then a
// set of presentation nodes and the iteration stabilizes after at most
// |nodes| steps. Stage counts are therefore not ordinal ranks of the tree, but
// the emptiness of the fixpoint is exact.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "endscope/presentation.hpp"

namespace endscope {

enum class DerivativeOperator {
    /// Removes nodes whose up-set is a chain.
    Scatter,
    /// Removes nodes above which every node is finitely branching.
    Compact,
};

std::string to_string(DerivativeOperator op);
DerivativeOperator derivative_operator_from_string(const std::string& text);

/// Membership mask over the nodes of a presentation.
using NodeSet = std::vector<bool>;

struct DerivativeTrace {
    DerivativeOperator op = DerivativeOperator::Scatter;
    /// S_0 (the live nodes) followed by every derived stage. The list ends with
    /// the empty set, or repeats the nonempty fixpoint once.
    std::vector<NodeSet> stages;
    bool fixpoint_empty = true;
    /// Stage index at which a node was removed; absent for fixpoint nodes.
    std::map<NodeId, std::size_t> rank_of;

    const NodeSet& fixpoint() const { return stages.back(); }
};

/// Is the unfolding above a node tagged `v`, restricted to `s`, a chain?
bool is_chain_above(const TreePresentation& p, const NodeSet& s, NodeId v);

/// Does every node above `v` (inclusive) have finitely many successors in `s`?
bool is_compactly_trivial(const TreePresentation& p, const NodeSet& s, NodeId v);

DerivativeTrace derive(const TreePresentation& p, DerivativeOperator op);

/// Number of stages until the fixpoint empties; nullopt if it never does.
std::optional<std::size_t> rank(const DerivativeTrace& trace);

/// Sorted node names of a stage.
std::vector<std::string> stage_names(const TreePresentation& p, const NodeSet& s);

} // namespace endscope
