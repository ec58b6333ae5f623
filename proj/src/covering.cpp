#include "endscope/covering.hpp"

namespace endscope {

bool is_compact(const TreePresentation& p) { return !prune(p).has_infinite_edge(); }

Cardinal lindelof_degree(const TreePresentation& p) {
    Cardinal degree = Cardinal::aleph(0);
    const TreePresentation pruned = prune(p);
    for (const Edge& e : pruned.edges()) {
        if (e.mult > degree) {
            degree = e.mult;
        }
    }
    return degree;
}

Cardinal extent(const TreePresentation& p) { return lindelof_degree(p); }

bool is_rothberger(const TreePresentation& p) {
    return lindelof_degree(p) == Cardinal::aleph(0) && derive(p, DerivativeOperator::Scatter).fixpoint_empty;
}

bool is_menger(const TreePresentation& p) {
    return lindelof_degree(p) == Cardinal::aleph(0) && derive(p, DerivativeOperator::Compact).fixpoint_empty;
}

bool is_sigma_compact(const TreePresentation& p) { return is_menger(p); }

std::optional<std::vector<TreePresentation>> sigma_cover(const TreePresentation& p, std::size_t pieces) {
    if (!is_menger(p)) {
        return std::nullopt;
    }
    const TreePresentation base = prune(p);
    std::vector<TreePresentation> out;
    out.reserve(pieces);
    for (std::size_t k = 1; k <= pieces; ++k) {
        if (base.is_empty()) {
            out.push_back(base);
            continue;
        }
        std::vector<Edge> edges = base.edges();
        for (Edge& e : edges) {
            if (e.mult == Cardinal::aleph(0)) {
                e.mult = Cardinal::finite(k);
            }
        }
        out.emplace_back(base.name() + "-cap" + std::to_string(k), base.node_names(), base.root(), std::move(edges));
    }
    return out;
}

PropertyReport report(const TreePresentation& p, std::size_t witness_depth, std::uint64_t witness_width) {
    PropertyReport r;
    const TreePresentation pruned = prune(p);
    r.pruned = pruned == p;
    r.empty = pruned.is_empty();
    r.compact = !pruned.has_infinite_edge();
    r.lindelof_degree = lindelof_degree(p);
    r.extent = r.lindelof_degree;
    r.scatter_trace = derive(p, DerivativeOperator::Scatter);
    r.compact_trace = derive(p, DerivativeOperator::Compact);
    r.scatter_rank = rank(r.scatter_trace);
    r.kb_rank = rank(r.compact_trace);
    const bool lindelof = r.lindelof_degree == Cardinal::aleph(0);
    r.scattered = r.scatter_trace.fixpoint_empty;
    r.rothberger = lindelof && r.scattered;
    r.menger = lindelof && r.compact_trace.fixpoint_empty;
    r.sigma_compact = r.menger;
    if (!r.scattered) {
        r.binary = binary_witness(p, r.scatter_trace, witness_depth);
    }
    // An uncountable edge already rules out Menger; no pattern is attached.
    if (lindelof && !r.menger) {
        r.baire = baire_witness(p, r.compact_trace, witness_depth, witness_width);
    }
    return r;
}

std::vector<std::string> report_invariant_violations(const PropertyReport& r) {
    std::vector<std::string> out;
    const bool lindelof = r.lindelof_degree == Cardinal::aleph(0);
    if (r.rothberger && !r.menger) {
        out.emplace_back("rothberger without menger");
    }
    if (r.menger && !lindelof) {
        out.emplace_back("menger without lindelof");
    }
    if (r.compact && !r.menger) {
        out.emplace_back("compact without menger");
    }
    if (r.menger != r.sigma_compact) {
        out.emplace_back("menger differs from sigma-compact");
    }
    if (r.extent != r.lindelof_degree) {
        out.emplace_back("extent differs from lindelof degree");
    }
    if (r.scattered == r.binary.has_value()) {
        out.emplace_back("binary witness does not match scatteredness");
    }
    if ((lindelof && !r.menger) != r.baire.has_value()) {
        out.emplace_back("baire witness does not match the menger verdict");
    }
    return out;
}

} // namespace endscope
