#include "endscope/graphs.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "endscope/error.hpp"

namespace endscope {

namespace {

bool valid_vertex_name(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
               c == '-' || c == '.' || c == ':';
    });
}

} // namespace

FiniteGraph::FiniteGraph(std::string name, std::vector<std::string> vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges)
    : name_(std::move(name)) {
    std::set<std::string> all(vertices.begin(), vertices.end());
    for (const auto& [u, v] : edges) {
        all.insert(u);
        all.insert(v);
    }
    names_.assign(all.begin(), all.end());
    adj_.resize(names_.size());
    for (const auto& [u, v] : edges) {
        if (u == v) {
            throw PreconditionError("self-loop at '" + u + "'");
        }
        VertexIndex a = index_of(u);
        VertexIndex b = index_of(v);
        if (adjacent(a, b)) {
            ++merged_;
            continue;
        }
        adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
        adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
    }
}

std::size_t FiniteGraph::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& a : adj_) {
        total += a.size();
    }
    return total / 2;
}

std::optional<VertexIndex> FiniteGraph::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) {
        return std::nullopt;
    }
    return static_cast<VertexIndex>(it - names_.begin());
}

VertexIndex FiniteGraph::index_of(std::string_view name) const {
    auto v = find(name);
    if (!v) {
        throw PreconditionError("unknown vertex '" + std::string(name) + "'");
    }
    return *v;
}

bool FiniteGraph::adjacent(VertexIndex a, VertexIndex b) const {
    return std::binary_search(adj_.at(a).begin(), adj_.at(a).end(), b);
}

std::vector<std::pair<std::string, std::string>> FiniteGraph::edge_list() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (VertexIndex a = 0; a < adj_.size(); ++a) {
        for (VertexIndex b : adj_[a]) {
            if (a < b) {
                out.emplace_back(names_[a], names_[b]);
            }
        }
    }
    return out;
}

FiniteGraph parse_graph(std::string_view text) {
    std::optional<std::string> name;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::vector<std::pair<std::string_view, std::size_t>> toks;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
                ++i;
            }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
                ++i;
            }
            if (i > start) {
                toks.emplace_back(line.substr(start, i - start), start + 1);
            }
        }
        if (toks.empty() || toks[0].first.front() == '#') {
            continue;
        }
        auto arity = [&](std::size_t n) {
            if (toks.size() != n + 1) {
                throw ParseError("'" + std::string(toks[0].first) + "' expects " + std::to_string(n) + " argument(s)",
                                 line_no, toks[0].second);
            }
        };
        auto vertex = [&](std::size_t i) {
            if (!valid_vertex_name(toks[i].first)) {
                throw ParseError("invalid vertex name '" + std::string(toks[i].first) + "'", line_no, toks[i].second);
            }
            return std::string(toks[i].first);
        };
        if (toks[0].first == "graph") {
            arity(1);
            if (name) {
                throw ParseError("duplicate 'graph' line", line_no, toks[0].second);
            }
            name = std::string(toks[1].first);
        } else if (toks[0].first == "vertex") {
            arity(1);
            vertices.push_back(vertex(1));
        } else if (toks[0].first == "edge") {
            arity(2);
            auto u = vertex(1);
            auto v = vertex(2);
            if (u == v) {
                throw ParseError("self-loop at '" + u + "'", line_no, toks[2].second);
            }
            edges.emplace_back(std::move(u), std::move(v));
        } else {
            throw ParseError("unknown directive '" + std::string(toks[0].first) + "'", line_no, toks[0].second);
        }
    }
    return FiniteGraph(name.value_or("graph"), std::move(vertices), edges);
}

// ---------------------------------------------------------------------------
// Rooted trees

std::size_t RootedSpanTree::size() const { return static_cast<std::size_t>(std::count(member.begin(), member.end(), true)); }

std::vector<VertexIndex> RootedSpanTree::down_closure(VertexIndex v) const {
    if (v >= member.size() || !member[v]) {
        throw PreconditionError("vertex is not in the tree");
    }
    std::vector<VertexIndex> out{v};
    while (parent[out.back()]) {
        out.push_back(*parent[out.back()]);
    }
    return out;
}

bool RootedSpanTree::leq(VertexIndex x, VertexIndex y) const {
    for (VertexIndex a : down_closure(y)) {
        if (a == x) {
            return true;
        }
    }
    return false;
}

void validate(const FiniteGraph& g, const RootedSpanTree& t) {
    const auto n = g.vertex_count();
    if (t.member.size() != n || t.parent.size() != n) {
        throw PreconditionError("tree does not match the graph's vertex count");
    }
    if (t.root >= n || !t.member[t.root] || t.parent[t.root]) {
        throw PreconditionError("tree root is missing or has a parent");
    }
    for (VertexIndex v = 0; v < n; ++v) {
        if (!t.member[v]) {
            if (t.parent[v]) {
                throw PreconditionError("non-member '" + g.name_of(v) + "' has a parent");
            }
            continue;
        }
        if (v == t.root) {
            continue;
        }
        if (!t.parent[v] || !t.member[*t.parent[v]]) {
            throw PreconditionError("tree vertex '" + g.name_of(v) + "' has no parent in the tree");
        }
        if (!g.adjacent(v, *t.parent[v])) {
            throw PreconditionError("tree edge " + g.name_of(v) + "-" + g.name_of(*t.parent[v]) +
                                    " is not a graph edge");
        }
        // Parent chains must reach the root without repeating.
        std::size_t steps = 0;
        for (VertexIndex a = v; t.parent[a]; a = *t.parent[a]) {
            if (++steps > n) {
                throw PreconditionError("tree parent links contain a cycle");
            }
        }
    }
}

RootedSpanTree dfs_normal_tree(const FiniteGraph& g, VertexIndex root) {
    if (root >= g.vertex_count()) {
        throw PreconditionError("root is not a vertex");
    }
    RootedSpanTree t;
    t.root = root;
    t.member.assign(g.vertex_count(), false);
    t.parent.assign(g.vertex_count(), std::nullopt);
    // Iterative DFS keeping, per stack frame, the next neighbour to try.
    std::vector<std::pair<VertexIndex, std::size_t>> stack{{root, 0}};
    t.member[root] = true;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& nbrs = g.neighbors(v);
        if (next == nbrs.size()) {
            stack.pop_back();
            continue;
        }
        VertexIndex w = nbrs[next++];
        if (!t.member[w]) {
            t.member[w] = true;
            t.parent[w] = v;
            stack.emplace_back(w, 0);
        }
    }
    return t;
}

NormalityVerdict is_normal(const FiniteGraph& g, const RootedSpanTree& t) {
    validate(g, t);
    const auto n = g.vertex_count();
    for (VertexIndex x = 0; x < n; ++x) {
        if (!t.member[x]) {
            continue;
        }
        // Search from x through non-tree vertices; any tree vertex reached is
        // the far end of a path whose interior avoids the tree.
        std::vector<std::optional<VertexIndex>> via(n);
        std::vector<bool> seen(n, false);
        std::deque<VertexIndex> queue{x};
        seen[x] = true;
        while (!queue.empty()) {
            VertexIndex a = queue.front();
            queue.pop_front();
            for (VertexIndex b : g.neighbors(a)) {
                if (seen[b]) {
                    continue;
                }
                seen[b] = true;
                via[b] = a;
                if (!t.member[b]) {
                    queue.push_back(b);
                    continue;
                }
                if (!t.comparable(x, b)) {
                    NormalityVerdict bad;
                    bad.normal = false;
                    for (VertexIndex c = b;; c = *via[c]) {
                        bad.violating_path.push_back(c);
                        if (c == x) {
                            break;
                        }
                    }
                    std::reverse(bad.violating_path.begin(), bad.violating_path.end());
                    return bad;
                }
            }
        }
    }
    return {};
}

bool separator_check(const FiniteGraph& g, const RootedSpanTree& t, VertexIndex x, VertexIndex y) {
    validate(g, t);
    if (t.comparable(x, y)) {
        throw PreconditionError(g.name_of(x) + " and " + g.name_of(y) + " are comparable in the tree order");
    }
    std::vector<bool> blocked(g.vertex_count(), false);
    auto dx = t.down_closure(x);
    auto dy = t.down_closure(y);
    for (VertexIndex a : dx) {
        if (std::find(dy.begin(), dy.end(), a) != dy.end()) {
            blocked[a] = true;
        }
    }
    std::vector<bool> seen = blocked;
    std::deque<VertexIndex> queue{x};
    seen[x] = true;
    while (!queue.empty()) {
        VertexIndex a = queue.front();
        queue.pop_front();
        if (a == y) {
            return false;
        }
        for (VertexIndex b : g.neighbors(a)) {
            if (!seen[b]) {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    return true;
}

RootedSpanTree extend_normal_tree(const FiniteGraph& g, const RootedSpanTree& s, const VertexSet& base,
                                  const VertexSet& h) {
    validate(g, s);
    const auto n = g.vertex_count();
    if (base.size() != n || h.size() != n) {
        throw PreconditionError("vertex sets do not match the graph");
    }
    if (!is_normal(g, s)) {
        throw PreconditionError("the ambient tree is not normal");
    }
    if (!base[s.root]) {
        throw PreconditionError("the subtree must contain the root");
    }
    for (VertexIndex v = 0; v < n; ++v) {
        if (base[v] && (!s.member[v] || (s.parent[v] && !base[*s.parent[v]]))) {
            throw PreconditionError("the subtree is not down-closed at '" + g.name_of(v) + "'");
        }
        if (h[v] && !s.member[v]) {
            throw PreconditionError("'" + g.name_of(v) + "' is not in the ambient tree");
        }
    }
    RootedSpanTree out;
    out.root = s.root;
    out.member = base;
    out.parent.assign(n, std::nullopt);
    for (VertexIndex v = 0; v < n; ++v) {
        if (h[v]) {
            for (VertexIndex a : s.down_closure(v)) {
                out.member[a] = true;
            }
        }
    }
    for (VertexIndex v = 0; v < n; ++v) {
        if (out.member[v]) {
            out.parent[v] = s.parent[v];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Clique expansion

std::string clique_vertex_name(std::string_view u, std::string_view v) {
    // '^' is not a legal input character, so names cannot collide.
    return std::string(u) + '^' + std::string(v);
}

HgResult hg_transform(const FiniteGraph& g, const VertexSet& dominating) {
    const auto n = g.vertex_count();
    if (dominating.size() != n) {
        throw PreconditionError("vertex set does not match the graph");
    }
    HgResult out;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (VertexIndex v = 0; v < n; ++v) {
        const std::string& vn = g.name_of(v);
        if (!dominating[v]) {
            vertices.push_back(vn);
            out.naming.emplace(vn, std::make_pair(vn, std::nullopt));
            continue;
        }
        const auto& nbrs = g.neighbors(v);
        for (VertexIndex u : nbrs) {
            auto name = clique_vertex_name(g.name_of(u), vn);
            vertices.push_back(name);
            out.naming.emplace(name, std::make_pair(vn, g.name_of(u)));
        }
        // (i) the incidences of v form a clique
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                edges.emplace_back(clique_vertex_name(g.name_of(nbrs[i]), vn),
                                   clique_vertex_name(g.name_of(nbrs[j]), vn));
            }
        }
    }
    for (const auto& [a, b] : g.edge_list()) {
        const VertexIndex u = g.index_of(a);
        const VertexIndex v = g.index_of(b);
        if (!dominating[u] && !dominating[v]) {
            edges.emplace_back(a, b); // (ii)
        } else if (dominating[u] && dominating[v]) {
            edges.emplace_back(clique_vertex_name(b, a), clique_vertex_name(a, b)); // (iv)
        } else if (dominating[v]) {
            edges.emplace_back(a, clique_vertex_name(a, b)); // (iii)
        } else {
            edges.emplace_back(b, clique_vertex_name(b, a)); // (iii)
        }
    }
    out.graph = FiniteGraph(g.name() + "-hg", std::move(vertices), edges);
    return out;
}

std::vector<std::vector<std::string>> components(const FiniteGraph& g, const VertexSet& removed) {
    const auto n = g.vertex_count();
    if (removed.size() != n) {
        throw PreconditionError("vertex set does not match the graph");
    }
    std::vector<std::vector<std::string>> out;
    std::vector<bool> seen = removed;
    for (VertexIndex s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<VertexIndex> comp;
        std::deque<VertexIndex> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            VertexIndex a = queue.front();
            queue.pop_front();
            comp.push_back(a);
            for (VertexIndex b : g.neighbors(a)) {
                if (!seen[b]) {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        std::vector<std::string> names;
        for (VertexIndex v : comp) {
            names.push_back(g.name_of(v));
        }
        out.push_back(std::move(names));
    }
    // Scanning seeds in index order already sorts components by least name.
    return out;
}

VertexSet vertex_set(const FiniteGraph& g, const std::vector<std::string>& names) {
    VertexSet out(g.vertex_count(), false);
    for (const auto& name : names) {
        out[g.index_of(name)] = true;
    }
    return out;
}

} // namespace endscope
