#include "endscope/derivatives.hpp"

#include <algorithm>
#include <cctype>

#include "endscope/error.hpp"

namespace endscope {

std::string to_string(DerivativeOperator op) { return op == DerivativeOperator::Scatter ? "SCATTER" : "COMPACT"; }

DerivativeOperator derivative_operator_from_string(const std::string& text) {
    std::string upper = text;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    if (upper == "SCATTER") {
        return DerivativeOperator::Scatter;
    }
    if (upper == "COMPACT") {
        return DerivativeOperator::Compact;
    }
    throw PreconditionError("unknown derivative operator '" + text + "'");
}

namespace {

void require_member(const TreePresentation& p, const NodeSet& s, NodeId v) {
    if (s.size() != p.node_count()) {
        throw PreconditionError("node set does not match the presentation");
    }
    if (v >= p.node_count() || !s[v]) {
        throw PreconditionError("node is not in the stage set");
    }
}

} // namespace

bool is_chain_above(const TreePresentation& p, const NodeSet& s, NodeId v) {
    require_member(p, s, v);
    std::vector<bool> seen(p.node_count(), false);
    NodeId at = v;
    while (!seen[at]) {
        seen[at] = true;
        std::optional<EdgeOrdinal> only;
        for (EdgeOrdinal e : p.out_edges(at)) {
            if (!s[p.edge(e).dst]) {
                continue;
            }
            if (only) {
                return false;
            }
            only = e;
        }
        if (!only) {
            return true;
        }
        const Multiplicity& m = p.edge(*only).mult;
        if (m != Cardinal::finite(1)) {
            return false;
        }
        at = p.edge(*only).dst;
    }
    return true;
}

bool is_compactly_trivial(const TreePresentation& p, const NodeSet& s, NodeId v) {
    require_member(p, s, v);
    std::vector<bool> seen(p.node_count(), false);
    std::vector<NodeId> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
        NodeId at = stack.back();
        stack.pop_back();
        for (EdgeOrdinal e : p.out_edges(at)) {
            const Edge& edge = p.edge(e);
            if (!s[edge.dst]) {
                continue;
            }
            if (edge.mult.is_infinite()) {
                return false;
            }
            if (!seen[edge.dst]) {
                seen[edge.dst] = true;
                stack.push_back(edge.dst);
            }
        }
    }
    return true;
}

DerivativeTrace derive(const TreePresentation& p, DerivativeOperator op) {
    DerivativeTrace trace;
    trace.op = op;
    NodeSet current = live_nodes(p);
    trace.stages.push_back(current);
    if (std::none_of(current.begin(), current.end(), [](bool b) { return b; })) {
        trace.fixpoint_empty = true;
        return trace;
    }
    for (std::size_t stage = 0;; ++stage) {
        // All trivial nodes of a stage are removed together.
        NodeSet next = current;
        bool removed_any = false;
        bool remaining = false;
        for (NodeId v = 0; v < p.node_count(); ++v) {
            if (!current[v]) {
                continue;
            }
            bool trivial = op == DerivativeOperator::Scatter ? is_chain_above(p, current, v)
                                                             : is_compactly_trivial(p, current, v);
            if (trivial) {
                next[v] = false;
                trace.rank_of[v] = stage;
                removed_any = true;
            } else {
                remaining = true;
            }
        }
        trace.stages.push_back(next);
        if (!remaining) {
            trace.fixpoint_empty = true;
            return trace;
        }
        if (!removed_any) {
            trace.fixpoint_empty = false;
            return trace;
        }
        current = std::move(next);
    }
}

std::optional<std::size_t> rank(const DerivativeTrace& trace) {
    if (!trace.fixpoint_empty) {
        return std::nullopt;
    }
    return trace.stages.size() - 1;
}

std::vector<std::string> stage_names(const TreePresentation& p, const NodeSet& s) {
    std::vector<std::string> out;
    for (NodeId v = 0; v < s.size() && v < p.node_count(); ++v) {
        if (s[v]) {
            out.push_back(p.node_name(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace endscope
