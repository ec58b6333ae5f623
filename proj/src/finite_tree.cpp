#include "endscope/finite_tree.hpp"

#include <map>

namespace endscope {

FiniteTree truncate(const TreePresentation& p, std::uint32_t depth, std::uint64_t width) {
    FiniteTree tree;
    tree.max_depth_ = depth;
    tree.width_ = width;
    if (p.is_empty()) {
        return tree;
    }
    const auto live = live_nodes(p);
    std::vector<bool> infinite_out(p.node_count(), false);
    for (const Edge& e : p.edges()) {
        if (e.mult.is_infinite()) {
            infinite_out[e.src] = true;
        }
    }

    // Built depth-first; (tag, depth) identifies a subtree, so it is stored once.
    std::map<std::pair<NodeId, std::uint32_t>, std::uint32_t> memo;
    auto build = [&](auto&& self, NodeId v, std::uint32_t d) -> std::uint32_t {
        if (auto it = memo.find({v, d}); it != memo.end()) {
            return it->second;
        }
        auto id = static_cast<std::uint32_t>(tree.nodes_.size());
        tree.nodes_.push_back({v, d, static_cast<bool>(live[v]), static_cast<bool>(infinite_out[v]), {}});
        std::vector<FiniteTree::Link> links;
        if (d < depth) {
            for (EdgeOrdinal e : p.out_edges(v)) {
                const Edge& edge = p.edge(e);
                const bool sampled = edge.mult.is_infinite();
                const std::uint64_t count = sampled ? width : edge.mult.value();
                if (count == 0) {
                    continue;
                }
                std::uint32_t child = self(self, edge.dst, d + 1);
                for (std::uint64_t i = 0; i < count; ++i) {
                    links.push_back({{e, i, false}, sampled, child});
                }
            }
        }
        tree.nodes_[id].children = std::move(links);
        memo.emplace(std::make_pair(v, d), id);
        return id;
    };
    // The root must land at index 0.
    tree.nodes_.reserve(p.node_count() * (static_cast<std::size_t>(depth) + 1));
    build(build, p.root(), 0);
    return tree;
}

std::uint64_t FiniteTree::size() const {
    if (nodes_.empty()) {
        return 0;
    }
    // A shared node is counted once per occurrence in the expansion.
    std::vector<std::uint64_t> memo(nodes_.size(), 0);
    std::vector<bool> done(nodes_.size(), false);
    auto count = [&](auto&& self, std::uint32_t id) -> std::uint64_t {
        if (done[id]) {
            return memo[id];
        }
        std::uint64_t total = 1;
        for (const Link& l : nodes_[id].children) {
            total += self(self, l.node);
        }
        done[id] = true;
        return memo[id] = total;
    };
    return count(count, root());
}

void FiniteTree::visit(const std::function<bool(const UNode&, const Node&)>& visitor) const {
    if (nodes_.empty()) {
        return;
    }
    UNode path;
    auto walk = [&](auto&& self, std::uint32_t id) -> void {
        const Node& n = nodes_[id];
        if (!visitor(path, n)) {
            return;
        }
        for (const Link& l : n.children) {
            path.steps.push_back(l.step);
            self(self, l.node);
            path.steps.pop_back();
        }
    };
    walk(walk, root());
}

} // namespace endscope
