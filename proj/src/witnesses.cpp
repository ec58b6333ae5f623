#include "endscope/witnesses.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "endscope/error.hpp"

namespace endscope {

std::string to_string(const BaireKey& key) {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i > 0) {
            out += '.';
        }
        out += std::to_string(key[i]);
    }
    return out;
}

BaireKey baire_key_from_string(const std::string& text) {
    BaireKey key;
    if (text.empty()) {
        return key;
    }
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, '.')) {
        try {
            std::size_t used = 0;
            key.push_back(std::stoull(part, &used));
            if (used != part.size()) {
                throw ParseError("malformed pattern key '" + text + "'");
            }
        } catch (const std::logic_error&) {
            throw ParseError("malformed pattern key '" + text + "'");
        }
    }
    return key;
}

namespace {

// Breadth-first search from `start` through unfolding nodes whose tags lie in
// `allowed`, following the least child of each edge. Returns the first node
// (in BFS order over tags) accepted by `found`.
template <typename Pred>
std::optional<UNode> search_up(const TreePresentation& p, const NodeSet& allowed, const UNode& start, Pred found) {
    std::vector<bool> seen(p.node_count(), false);
    std::deque<UNode> queue{start};
    seen[tag(p, start)] = true;
    while (!queue.empty()) {
        UNode t = std::move(queue.front());
        queue.pop_front();
        NodeId v = tag(p, t);
        if (found(v)) {
            return t;
        }
        for (EdgeOrdinal e : p.out_edges(v)) {
            NodeId w = p.edge(e).dst;
            if (allowed[w] && !seen[w]) {
                seen[w] = true;
                queue.push_back(t.child({e, 0, false}));
            }
        }
    }
    return std::nullopt;
}

// First two children (lexicographic) of a node tagged `v` inside `allowed`.
std::optional<std::pair<Step, Step>> branch_pair(const TreePresentation& p, const NodeSet& allowed, NodeId v) {
    std::optional<Step> first;
    for (EdgeOrdinal e : p.out_edges(v)) {
        const Edge& edge = p.edge(e);
        if (!allowed[edge.dst]) {
            continue;
        }
        if (first) {
            return std::make_pair(*first, Step{e, 0, false});
        }
        first = Step{e, 0, false};
        if (edge.mult.is_infinite() || edge.mult.value() >= 2) {
            return std::make_pair(*first, Step{e, 1, false});
        }
    }
    return std::nullopt;
}

std::optional<EdgeOrdinal> infinite_edge_into(const TreePresentation& p, const NodeSet& allowed, NodeId v) {
    for (EdgeOrdinal e : p.out_edges(v)) {
        if (allowed[p.edge(e).dst] && p.edge(e).mult.is_infinite()) {
            return e;
        }
    }
    return std::nullopt;
}

void require_operator(const DerivativeTrace& trace, DerivativeOperator op, const TreePresentation& p) {
    if (trace.op != op) {
        throw PreconditionError("witness extraction needs a " + to_string(op) + " trace");
    }
    if (trace.stages.empty() || trace.stages.front().size() != p.node_count()) {
        throw PreconditionError("trace was not computed from this presentation");
    }
}

} // namespace

std::optional<BinaryEmbeddingPrefix> binary_witness(const TreePresentation& p, const DerivativeTrace& trace,
                                                    std::size_t depth) {
    require_operator(trace, DerivativeOperator::Scatter, p);
    if (trace.fixpoint_empty) {
        return std::nullopt;
    }
    const NodeSet& core = trace.fixpoint();
    BinaryEmbeddingPrefix w;
    w.depth = depth;
    w.map.emplace("", UNode{});
    std::vector<std::string> frontier{""};
    for (std::size_t level = 0; level < depth; ++level) {
        std::vector<std::string> next;
        for (const std::string& s : frontier) {
            // Every node of the fixpoint is nontrivial in it, so a branching
            // node is reachable from any fixpoint node.
            auto at = search_up(p, core, w.map.at(s),
                                [&](NodeId v) { return branch_pair(p, core, v).has_value(); });
            if (!at) {
                throw Error("scatter fixpoint has a node with no branching above it");
            }
            auto [left, right] = *branch_pair(p, core, tag(p, *at));
            w.map.emplace(s + '0', at->child(left));
            w.map.emplace(s + '1', at->child(right));
            next.push_back(s + '0');
            next.push_back(s + '1');
        }
        frontier = std::move(next);
    }
    return w;
}

std::optional<BairePatternPrefix> baire_witness(const TreePresentation& p, const DerivativeTrace& trace,
                                                std::size_t depth, std::uint64_t width) {
    require_operator(trace, DerivativeOperator::Compact, p);
    if (trace.fixpoint_empty) {
        return std::nullopt;
    }
    const NodeSet& core = trace.fixpoint();
    BairePatternPrefix w;
    w.depth = depth;
    w.width = width;
    w.phi.emplace(BaireKey{}, UNode{});
    std::vector<BaireKey> frontier{BaireKey{}};
    for (std::size_t level = 0; level < depth; ++level) {
        std::vector<BaireKey> next;
        for (const BaireKey& s : frontier) {
            auto at = search_up(p, core, w.phi.at(s),
                                [&](NodeId v) { return infinite_edge_into(p, core, v).has_value(); });
            if (!at) {
                throw Error("compact fixpoint has a node with no infinite branching above it");
            }
            EdgeOrdinal e = *infinite_edge_into(p, core, tag(p, *at));
            w.t_of.emplace(s, *at);
            for (std::uint64_t n = 0; n < width; ++n) {
                BaireKey child = s;
                child.push_back(n);
                w.phi.emplace(child, at->child({e, n, false}));
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

WitnessVerdict reject(std::string why) { return {false, std::move(why)}; }

std::optional<std::string> image_problem(const TreePresentation& p, const std::vector<bool>& live, const UNode& t) {
    if (!t.is_concrete()) {
        return "image " + t.to_string() + " is not a node";
    }
    if (!is_legal(p, t)) {
        return "image " + t.to_string() + " is not a legal node";
    }
    if (!live[tag(p, t)]) {
        return "image " + t.to_string() + " lies on no ray";
    }
    return std::nullopt;
}

template <typename Key>
bool is_prefix(const Key& a, const Key& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// s < t iff phi(s) < phi(t), and incomparable strings map to incomparable nodes.
template <typename Map>
WitnessVerdict check_order_embedding(const Map& phi) {
    for (auto i = phi.begin(); i != phi.end(); ++i) {
        for (auto j = std::next(i); j != phi.end(); ++j) {
            const auto& [s, a] = *i;
            const auto& [t, b] = *j;
            const bool s_below = is_prefix(s, t);
            const bool t_below = is_prefix(t, s);
            if (s_below != precedes(a, b) || t_below != precedes(b, a)) {
                return reject("order not preserved between keys of length " + std::to_string(s.size()) + " and " +
                              std::to_string(t.size()) + ": " + a.to_string() + " vs " + b.to_string());
            }
            if (!s_below && !t_below && comparable(a, b)) {
                return reject("incomparable keys share a branch: " + a.to_string() + " vs " + b.to_string());
            }
        }
    }
    return {};
}

} // namespace

WitnessVerdict verify_witness(const TreePresentation& p, const BinaryEmbeddingPrefix& w) {
    const auto live = live_nodes(p);
    std::size_t expected = (std::size_t{1} << (w.depth + 1)) - 1;
    if (w.map.size() != expected) {
        return reject("domain has " + std::to_string(w.map.size()) + " keys, expected " + std::to_string(expected));
    }
    for (const auto& [s, t] : w.map) {
        if (s.size() > w.depth || s.find_first_not_of("01") != std::string::npos) {
            return reject("key '" + s + "' is not a binary string of length <= depth");
        }
        if (auto problem = image_problem(p, live, t)) {
            return reject(*problem);
        }
    }
    return check_order_embedding(w.map);
}

WitnessVerdict verify_witness(const TreePresentation& p, const BairePatternPrefix& w) {
    const auto live = live_nodes(p);
    if (w.width == 0) {
        return reject("width must be positive");
    }
    std::size_t level_size = 1;
    std::size_t expected_phi = 0;
    std::size_t expected_t = 0;
    for (std::size_t d = 0; d <= w.depth; ++d) {
        expected_phi += level_size;
        if (d < w.depth) {
            expected_t += level_size;
        }
        level_size *= w.width;
    }
    if (w.phi.size() != expected_phi || w.t_of.size() != expected_t) {
        return reject("domain sizes do not match depth and width");
    }
    for (const auto& [s, t] : w.phi) {
        if (s.size() > w.depth) {
            return reject("phi key '" + to_string(s) + "' is too long");
        }
        for (auto digit : s) {
            if (digit >= w.width) {
                return reject("phi key '" + to_string(s) + "' leaves the alphabet");
            }
        }
        if (auto problem = image_problem(p, live, t)) {
            return reject(*problem);
        }
    }
    for (const auto& [s, t] : w.t_of) {
        if (auto problem = image_problem(p, live, t)) {
            return reject(*problem);
        }
        auto base = w.phi.find(s);
        if (s.size() >= w.depth || base == w.phi.end()) {
            return reject("t_of key '" + to_string(s) + "' outside the pattern");
        }
        if (!contains(base->second, t)) {
            return reject("t_of(" + to_string(s) + ") = " + t.to_string() + " is not above phi");
        }
        for (std::uint64_t n = 0; n < w.width; ++n) {
            BaireKey key = s;
            key.push_back(n);
            const UNode& c = w.phi.at(key);
            if (c.depth() != t.depth() + 1 || !contains(t, c)) {
                return reject("phi(" + to_string(key) + ") = " + c.to_string() + " is not a child of t_of(" +
                              to_string(s) + ") = " + t.to_string());
            }
            if (!p.edge(c.steps.back().edge).mult.is_infinite()) {
                return reject("phi(" + to_string(key) + ") is reached along a finite edge");
            }
        }
    }
    return check_order_embedding(w.phi);
}

} // namespace endscope
