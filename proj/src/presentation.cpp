#include "endscope/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "endscope/error.hpp"

namespace endscope {

// ---------------------------------------------------------------------------
// Cardinal

std::string Cardinal::to_string() const {
    return (kind_ == Kind::Finite ? "finite:" : "aleph:") + std::to_string(value_);
}

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view s) {
    if (s.empty()) {
        return std::nullopt;
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

} // namespace

Cardinal Cardinal::from_string(std::string_view text) {
    auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        auto kind = text.substr(0, colon);
        auto value = parse_u64(text.substr(colon + 1));
        if (value) {
            if (kind == "finite") {
                return finite(*value);
            }
            if (kind == "aleph") {
                return aleph(*value);
            }
        }
    }
    throw ParseError("malformed cardinal '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// TreePresentation

TreePresentation::TreePresentation(std::string name, std::vector<std::string> nodes, NodeId root,
                                   std::vector<Edge> edges)
    : name_(std::move(name)), nodes_(std::move(nodes)), root_(root), edges_(std::move(edges)) {
    if (nodes_.empty()) {
        if (!edges_.empty()) {
            throw PreconditionError("empty presentation cannot carry edges");
        }
        root_ = kNoNode;
        return;
    }
    if (root_ >= nodes_.size()) {
        throw PreconditionError("root is not a node of the presentation");
    }
    out_.resize(nodes_.size());
    for (EdgeOrdinal e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (edge.src >= nodes_.size() || edge.dst >= nodes_.size()) {
            throw PreconditionError("edge " + std::to_string(e) + " has an endpoint outside the node set");
        }
        if (edge.mult.kind() == Cardinal::Kind::Finite && edge.mult.value() == 0) {
            throw PreconditionError("edge " + std::to_string(e) + " has multiplicity 0");
        }
        out_[edge.src].push_back(e);
    }
}

TreePresentation TreePresentation::empty(std::string name) {
    return TreePresentation(std::move(name), {}, kNoNode, {});
}

std::optional<NodeId> TreePresentation::find_node(std::string_view name) const {
    for (NodeId v = 0; v < nodes_.size(); ++v) {
        if (nodes_[v] == name) {
            return v;
        }
    }
    return std::nullopt;
}

bool TreePresentation::has_infinite_edge() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.mult.is_infinite(); });
}

// ---------------------------------------------------------------------------
// `.tree` format

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return out;
}

bool valid_identifier(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
               c == '-' || c == '.' || c == ':';
    });
}

Multiplicity parse_multiplicity(const Token& tok, std::size_t line) {
    std::string_view s = tok.text;
    if (s == "*") {
        return Cardinal::aleph(0);
    }
    if (s.size() > 1 && s[0] == 'w') {
        auto k = parse_u64(s.substr(1));
        if (k && *k >= 1) {
            return Cardinal::aleph(*k);
        }
        throw ParseError("uncountable multiplicity must be w<k> with k >= 1", line, tok.column);
    }
    auto n = parse_u64(s);
    if (!n) {
        throw ParseError("malformed multiplicity '" + std::string(s) + "'", line, tok.column);
    }
    if (*n == 0) {
        throw ParseError("multiplicity must be at least 1", line, tok.column);
    }
    return Cardinal::finite(*n);
}

} // namespace

TreePresentation parse_tree(std::string_view text) {
    struct PendingEdge {
        Token src, dst;
        Multiplicity mult;
        std::size_t line;
    };
    std::optional<std::string> name;
    std::optional<Token> root;
    std::vector<PendingEdge> pending;
    std::vector<std::pair<Token, std::size_t>> declared;

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

        auto toks = tokenize(line);
        if (toks.empty() || toks[0].text.front() == '#') {
            continue;
        }
        auto expect = [&](std::size_t n) {
            if (toks.size() != n) {
                throw ParseError("'" + std::string(toks[0].text) + "' expects " + std::to_string(n - 1) +
                                     " argument(s)",
                                 line_no, toks[0].column);
            }
        };
        auto ident = [&](const Token& t) {
            if (!valid_identifier(t.text)) {
                throw ParseError("invalid identifier '" + std::string(t.text) + "'", line_no, t.column);
            }
        };
        const auto keyword = toks[0].text;
        if (keyword == "tree") {
            expect(2);
            if (name) {
                throw ParseError("duplicate 'tree' line", line_no, toks[0].column);
            }
            name = std::string(toks[1].text);
        } else if (keyword == "root") {
            expect(2);
            ident(toks[1]);
            if (root) {
                throw ParseError("duplicate 'root' line", line_no, toks[0].column);
            }
            root = toks[1];
        } else if (keyword == "node") {
            expect(2);
            ident(toks[1]);
            declared.emplace_back(toks[1], line_no);
        } else if (keyword == "edge") {
            expect(4);
            ident(toks[1]);
            ident(toks[2]);
            pending.push_back({toks[1], toks[2], parse_multiplicity(toks[3], line_no), line_no});
        } else {
            throw ParseError("unknown directive '" + std::string(keyword) + "'", line_no, toks[0].column);
        }
    }
    if (!name) {
        throw ParseError("missing 'tree <name>' line");
    }
    if (!root) {
        throw ParseError("missing 'root <node>' line");
    }

    // Nodes are the root, every declared node and every edge source, in order
    // of first appearance. Edge targets must be among them.
    std::vector<std::string> nodes;
    std::map<std::string, NodeId, std::less<>> index;
    auto intern = [&](std::string_view id) {
        auto it = index.find(id);
        if (it != index.end()) {
            return it->second;
        }
        auto v = static_cast<NodeId>(nodes.size());
        nodes.emplace_back(id);
        index.emplace(std::string(id), v);
        return v;
    };
    NodeId root_id = intern(root->text);
    std::vector<std::pair<std::size_t, std::string_view>> order;
    for (const auto& [tok, line] : declared) {
        order.emplace_back(line, tok.text);
    }
    for (const auto& pe : pending) {
        order.emplace_back(pe.line, pe.src.text);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [line, id] : order) {
        intern(id);
    }

    std::vector<Edge> edges;
    for (const auto& pe : pending) {
        auto dst = index.find(pe.dst.text);
        if (dst == index.end()) {
            throw ParseError("unknown node '" + std::string(pe.dst.text) + "'", pe.line, pe.dst.column);
        }
        edges.push_back({index.at(std::string(pe.src.text)), dst->second, pe.mult});
    }
    return TreePresentation(*name, std::move(nodes), root_id, std::move(edges));
}

namespace {

std::string mult_token(const Multiplicity& m) {
    if (!m.is_infinite()) {
        return std::to_string(m.value());
    }
    return m.value() == 0 ? "*" : "w" + std::to_string(m.value());
}

} // namespace

std::string format_tree(const TreePresentation& p) {
    std::ostringstream out;
    out << "tree " << p.name() << '\n';
    if (p.is_empty()) {
        // The format has no spelling for EMPTY; a lone rayless root is the
        // closest file that prunes back to it.
        out << "root empty\n";
        return out.str();
    }
    out << "root " << p.node_name(p.root()) << '\n';
    // Declaring every node keeps the node order through a round trip.
    for (NodeId v = 0; v < p.node_count(); ++v) {
        if (v != p.root()) {
            out << "node " << p.node_name(v) << '\n';
        }
    }
    for (const Edge& e : p.edges()) {
        out << "edge " << p.node_name(e.src) << ' ' << p.node_name(e.dst) << ' ' << mult_token(e.mult) << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Pruning

std::vector<bool> live_nodes(const TreePresentation& p) {
    const auto n = p.node_count();
    std::vector<bool> live(n, false);
    if (p.is_empty()) {
        return live;
    }
    std::vector<bool> reach(n, false);
    std::vector<NodeId> stack{p.root()};
    reach[p.root()] = true;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (EdgeOrdinal e : p.out_edges(v)) {
            NodeId w = p.edge(e).dst;
            if (!reach[w]) {
                reach[w] = true;
                stack.push_back(w);
            }
        }
    }
    // A node admits an infinite walk iff it survives repeatedly deleting
    // nodes without successors.
    std::vector<bool> alive = reach;
    std::vector<std::size_t> out_degree(n, 0);
    std::vector<std::vector<NodeId>> preds(n);
    for (const Edge& e : p.edges()) {
        if (reach[e.src] && reach[e.dst]) {
            ++out_degree[e.src];
            preds[e.dst].push_back(e.src);
        }
    }
    std::vector<NodeId> dead;
    for (NodeId v = 0; v < n; ++v) {
        if (reach[v] && out_degree[v] == 0) {
            dead.push_back(v);
        }
    }
    while (!dead.empty()) {
        NodeId v = dead.back();
        dead.pop_back();
        alive[v] = false;
        for (NodeId u : preds[v]) {
            if (--out_degree[u] == 0) {
                dead.push_back(u);
            }
        }
    }
    for (NodeId v = 0; v < n; ++v) {
        live[v] = alive[v];
    }
    return live;
}

PruneResult prune_with_map(const TreePresentation& p) {
    PruneResult result;
    result.edge_map.assign(p.edges().size(), std::nullopt);
    auto live = live_nodes(p);
    if (p.is_empty() || !live[p.root()]) {
        result.presentation = TreePresentation::empty(p.name());
        return result;
    }
    std::vector<NodeId> renumber(p.node_count(), kNoNode);
    std::vector<std::string> nodes;
    for (NodeId v = 0; v < p.node_count(); ++v) {
        if (live[v]) {
            renumber[v] = static_cast<NodeId>(nodes.size());
            nodes.push_back(p.node_name(v));
        }
    }
    std::vector<Edge> edges;
    for (EdgeOrdinal e = 0; e < p.edges().size(); ++e) {
        const Edge& edge = p.edge(e);
        if (live[edge.src] && live[edge.dst]) {
            result.edge_map[e] = static_cast<EdgeOrdinal>(edges.size());
            edges.push_back({renumber[edge.src], renumber[edge.dst], edge.mult});
        }
    }
    result.presentation = TreePresentation(p.name(), std::move(nodes), renumber[p.root()], std::move(edges));
    return result;
}

TreePresentation prune(const TreePresentation& p) { return prune_with_map(p).presentation; }

bool is_pruned(const TreePresentation& p) { return prune(p) == p; }

// ---------------------------------------------------------------------------
// UNode

bool UNode::is_concrete() const noexcept {
    return std::none_of(steps.begin(), steps.end(), [](const Step& s) { return s.tail; });
}

UNode UNode::child(Step s) const {
    UNode out = *this;
    out.steps.push_back(s);
    return out;
}

UNode UNode::prefix(std::size_t len) const {
    UNode out;
    out.steps.assign(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(std::min(len, steps.size())));
    return out;
}

std::string UNode::to_string() const {
    if (steps.empty()) {
        return "@";
    }
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i > 0) {
            out += '/';
        }
        out += 'e' + std::to_string(steps[i].edge) + '.' + std::to_string(steps[i].index);
        if (steps[i].tail) {
            out += '+';
        }
    }
    return out;
}

UNode UNode::parse(std::string_view text) {
    auto fail = [&](std::size_t col) {
        throw ParseError("malformed node '" + std::string(text) + "'", 0, col);
    };
    if (text == "@") {
        return {};
    }
    UNode out;
    std::size_t pos = 0;
    while (true) {
        auto slash = text.find('/', pos);
        auto part = text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
        if (part.size() < 4 || part[0] != 'e') {
            fail(pos + 1);
        }
        auto dot = part.find('.');
        if (dot == std::string_view::npos) {
            fail(pos + 1);
        }
        Step step;
        auto index_text = part.substr(dot + 1);
        if (!index_text.empty() && index_text.back() == '+') {
            step.tail = true;
            index_text.remove_suffix(1);
        }
        auto edge = parse_u64(part.substr(1, dot - 1));
        auto index = parse_u64(index_text);
        if (!edge || !index || *edge > 0xffffffffULL) {
            fail(pos + 1);
        }
        step.edge = static_cast<EdgeOrdinal>(*edge);
        step.index = *index;
        out.steps.push_back(step);
        if (slash == std::string_view::npos) {
            break;
        }
        pos = slash + 1;
    }
    return out;
}

std::vector<UNode> parse_unode_list(std::string_view text) {
    std::vector<UNode> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        out.push_back(UNode::parse(item));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

namespace {

std::optional<std::string> legality_problem(const TreePresentation& p, const UNode& t) {
    if (p.is_empty()) {
        return std::string("the empty presentation has no nodes");
    }
    NodeId at = p.root();
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const Step& s = t.steps[i];
        if (s.edge >= p.edges().size()) {
            return "step " + std::to_string(i) + ": no edge e" + std::to_string(s.edge);
        }
        const Edge& e = p.edge(s.edge);
        if (e.src != at) {
            return "step " + std::to_string(i) + ": edge e" + std::to_string(s.edge) + " does not leave " +
                   p.node_name(at);
        }
        if (!e.mult.is_infinite()) {
            if (s.tail) {
                return "step " + std::to_string(i) + ": tail step on a finite edge";
            }
            if (s.index >= e.mult.value()) {
                return "step " + std::to_string(i) + ": child index " + std::to_string(s.index) +
                       " out of range for multiplicity " + std::to_string(e.mult.value());
            }
        }
        at = e.dst;
    }
    return std::nullopt;
}

} // namespace

void validate(const TreePresentation& p, const UNode& t) {
    if (auto problem = legality_problem(p, t)) {
        throw PreconditionError("illegal node " + t.to_string() + ": " + *problem);
    }
}

bool is_legal(const TreePresentation& p, const UNode& t) { return !legality_problem(p, t).has_value(); }

NodeId tag(const TreePresentation& p, const UNode& t) {
    validate(p, t);
    return t.steps.empty() ? p.root() : p.edge(t.steps.back().edge).dst;
}

// ---------------------------------------------------------------------------
// Cone algebra

namespace {

// Index set of `a` includes that of `b`.
bool step_contains(const Step& a, const Step& b) {
    if (a.edge != b.edge) {
        return false;
    }
    if (a.tail) {
        return b.index >= a.index;
    }
    return !b.tail && a.index == b.index;
}

bool step_disjoint(const Step& a, const Step& b) {
    if (a.edge != b.edge) {
        return true;
    }
    if (a.tail && b.tail) {
        return false;
    }
    if (a.tail) {
        return b.index < a.index;
    }
    if (b.tail) {
        return a.index < b.index;
    }
    return a.index != b.index;
}

} // namespace

bool contains(const UNode& a, const UNode& b) {
    if (a.depth() > b.depth()) {
        return false;
    }
    for (std::size_t i = 0; i < a.depth(); ++i) {
        if (!step_contains(a.steps[i], b.steps[i])) {
            return false;
        }
    }
    return true;
}

bool disjoint(const UNode& a, const UNode& b) {
    const auto n = std::min(a.depth(), b.depth());
    for (std::size_t i = 0; i < n; ++i) {
        if (step_disjoint(a.steps[i], b.steps[i])) {
            return true;
        }
    }
    return false;
}

bool precedes(const UNode& a, const UNode& b) { return a.depth() < b.depth() && contains(a, b); }

bool comparable(const UNode& a, const UNode& b) { return contains(a, b) || contains(b, a); }

Children children(const TreePresentation& p, const UNode& t, std::uint64_t sample_width) {
    if (!t.is_concrete()) {
        throw PreconditionError("children of a generalized cone " + t.to_string());
    }
    NodeId v = tag(p, t);
    Children out;
    for (EdgeOrdinal e : p.out_edges(v)) {
        const Multiplicity& m = p.edge(e).mult;
        std::uint64_t count = m.value();
        if (m.is_infinite()) {
            out.truncated_infinite = true;
            count = sample_width;
        }
        for (std::uint64_t i = 0; i < count; ++i) {
            out.nodes.push_back(t.child({e, i, false}));
        }
    }
    return out;
}

} // namespace endscope
