#include "endscope/oracle.hpp"

#include <algorithm>

#include "endscope/derivatives.hpp"

namespace endscope {

namespace {

using Table = std::vector<std::vector<char>>;

// Deepest shared nodes first, so children are always done before parents.
template <typename Fn>
void bottom_up(const FiniteTree& f, Fn fn) {
    const auto n = static_cast<std::uint32_t>(f.shared_nodes().size());
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t id = 0; id < n; ++id) {
        order[id] = id;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return f.node(a).depth > f.node(b).depth; });
    for (std::uint32_t id : order) {
        fn(id, f.node(id));
    }
}

} // namespace

bool oracle_embedding_search(const FiniteTree& f, std::size_t d) {
    if (f.empty()) {
        return false;
    }
    const std::size_t n = f.shared_nodes().size();
    // at[k][x]: 2^{<=k} embeds with bottom x. below[k][x]: it embeds with
    // bottom somewhere in the subtree of x.
    Table at(d + 1, std::vector<char>(n, 0));
    Table below(d + 1, std::vector<char>(n, 0));
    // split[k][x]: some node in the subtree of x has two distinct children
    // each carrying a copy of 2^{<=k-1} somewhere above.
    Table split(d + 1, std::vector<char>(n, 0));
    for (std::size_t k = 0; k <= d; ++k) {
        bottom_up(f, [&](std::uint32_t id, const FiniteTree::Node& node) {
            if (k > 0) {
                std::size_t hits = 0;
                for (const auto& l : node.children) {
                    hits += below[k - 1][l.node] ? 1 : 0;
                    split[k][id] = split[k][id] || split[k][l.node];
                }
                split[k][id] = split[k][id] || hits >= 2;
                at[k][id] = node.live && split[k][id];
            } else {
                at[k][id] = node.live;
            }
            below[k][id] = at[k][id];
            for (const auto& l : node.children) {
                below[k][id] = below[k][id] || below[k][l.node];
            }
        });
    }
    return below[d][f.root()];
}

bool oracle_baire_search(const FiniteTree& f, std::size_t d, std::uint64_t w) {
    if (f.empty()) {
        return false;
    }
    const std::size_t n = f.shared_nodes().size();
    Table at(d + 1, std::vector<char>(n, 0));
    Table fan(d + 1, std::vector<char>(n, 0));
    for (std::size_t k = 0; k <= d; ++k) {
        bottom_up(f, [&](std::uint32_t id, const FiniteTree::Node& node) {
            if (k == 0) {
                at[k][id] = node.live;
                return;
            }
            std::uint64_t hits = 0;
            for (const auto& l : node.children) {
                hits += (l.sampled && at[k - 1][l.node]) ? 1 : 0;
                fan[k][id] = fan[k][id] || fan[k][l.node];
            }
            fan[k][id] = fan[k][id] || (node.truncated_infinite && hits >= w);
            at[k][id] = node.live && fan[k][id];
        });
    }
    bool found = false;
    for (std::uint32_t id = 0; id < n && !found; ++id) {
        found = at[d][id];
    }
    // Every shared node is reachable from the root, so any hit is a tree node.
    return found;
}

std::size_t oracle_finite_derivative(const FiniteTree& f) {
    if (f.empty()) {
        return 0;
    }
    const std::size_t n = f.shared_nodes().size();
    // Equal shared nodes have equal subtrees, so they leave in the same round.
    std::vector<char> present(n, 1);
    std::size_t rounds = 0;
    while (present[f.root()]) {
        std::vector<char> chain(n, 0);
        bottom_up(f, [&](std::uint32_t id, const FiniteTree::Node& node) {
            if (!present[id]) {
                return;
            }
            std::size_t kept = 0;
            bool above_is_chain = true;
            for (const auto& l : node.children) {
                if (present[l.node]) {
                    ++kept;
                    above_is_chain = above_is_chain && chain[l.node];
                }
            }
            chain[id] = kept <= 1 && above_is_chain;
        });
        for (std::size_t id = 0; id < n; ++id) {
            if (chain[id]) {
                present[id] = 0;
            }
        }
        ++rounds;
    }
    return rounds;
}

bool oracle_cover_check(const FiniteTree& f, const std::vector<UNode>& family) {
    bool covered = true;
    f.visit([&](const UNode& t, const FiniteTree::Node& node) {
        if (!covered || !node.live) {
            return false;
        }
        if (std::any_of(family.begin(), family.end(), [&](const UNode& m) { return contains(m, t); })) {
            return false;
        }
        if (node.depth == f.max_depth()) {
            covered = false;
        }
        return true;
    });
    return covered;
}

OracleComparison compare_with_oracle(const TreePresentation& p, const OracleSettings& s) {
    OracleComparison out;
    out.scatter_nonempty = !derive(p, DerivativeOperator::Scatter).fixpoint_empty;
    out.compact_nonempty = !derive(p, DerivativeOperator::Compact).fixpoint_empty;
    const FiniteTree f = truncate(p, s.depth, s.width);
    out.embedding_found = oracle_embedding_search(f, s.embedding_depth);
    out.pattern_found = oracle_baire_search(f, s.pattern_depth, s.pattern_width);
    return out;
}

} // namespace endscope
