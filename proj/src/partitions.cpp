#include "endscope/partitions.hpp"

#include <algorithm>

#include "endscope/error.hpp"

namespace endscope {

namespace {

bool steps_overlap(const Step& a, const Step& b) { return !disjoint(UNode{{a}}, UNode{{b}}); }

// Largest child index that a member of `family` singles out right after a
// prefix overlapping `at`, along edge `e`. A tail from k singles out k-1.
// -1 when none does.
std::int64_t mentioned(const std::vector<UNode>& family, const UNode& at, EdgeOrdinal e) {
    std::int64_t best = -1;
    const auto d = at.depth();
    for (const UNode& m : family) {
        if (m.depth() <= d || m.steps[d].edge != e) {
            continue;
        }
        bool overlaps = true;
        for (std::size_t i = 0; i < d && overlaps; ++i) {
            overlaps = steps_overlap(m.steps[i], at.steps[i]);
        }
        if (overlaps) {
            const auto k = static_cast<std::int64_t>(m.steps[d].index);
            best = std::max(best, m.steps[d].tail ? k - 1 : k);
        }
    }
    return best;
}

void require_cover(const TreePresentation& p, const std::vector<UNode>& family, const char* what) {
    const CoverVerdict v = cone_cover_check(p, family);
    if (!v) {
        throw PreconditionError(std::string(what) + " does not cover the ray space (" +
                                (v.counterexample ? v.counterexample->to_string() : std::string("@")) + " escapes)");
    }
}

bool inside_some(const std::vector<UNode>& family, const UNode& c) {
    return std::any_of(family.begin(), family.end(), [&](const UNode& m) { return contains(m, c); });
}

std::size_t max_depth(const std::vector<UNode>& family) {
    std::size_t d = 0;
    for (const UNode& m : family) {
        d = std::max(d, m.depth());
    }
    return d;
}

void validate_all(const TreePresentation& p, const std::vector<UNode>& family) {
    for (const UNode& m : family) {
        validate(p, m);
    }
}

// Tag at the end of a (possibly generalized) cone; tails do not change it.
NodeId end_tag(const TreePresentation& p, const UNode& c) {
    return c.steps.empty() ? p.root() : p.edge(c.steps.back().edge).dst;
}

// Children of `at` through live edges. Finite edges give every child; an
// infinite edge gives the indices up to the largest one `family` mentions
// there, then one tail cone for the rest.
std::vector<UNode> split_children(const TreePresentation& p, const std::vector<bool>& live, const UNode& at,
                                  const std::vector<UNode>& family) {
    std::vector<UNode> out;
    for (EdgeOrdinal e : p.out_edges(end_tag(p, at))) {
        const Edge& edge = p.edge(e);
        if (!live[edge.dst]) {
            continue;
        }
        if (!edge.mult.is_infinite()) {
            for (std::uint64_t i = 0; i < edge.mult.value(); ++i) {
                out.push_back(at.child({e, i, false}));
            }
            continue;
        }
        const std::int64_t top = mentioned(family, at, e);
        for (std::int64_t i = 0; i <= top; ++i) {
            out.push_back(at.child({e, static_cast<std::uint64_t>(i), false}));
        }
        out.push_back(at.child({e, static_cast<std::uint64_t>(top + 1), true}));
    }
    return out;
}

// Splits the tail steps of `c` so that no member of `family` partially
// overlaps a piece at any step: each piece is then either inside a member or
// disjoint from it at every depth the member reaches.
void align(const TreePresentation& p, const UNode& c, std::size_t from, const std::vector<UNode>& family,
           std::vector<UNode>& out) {
    for (std::size_t i = from; i < c.depth(); ++i) {
        const Step& s = c.steps[i];
        if (!s.tail) {
            continue;
        }
        const std::int64_t top = mentioned(family, c.prefix(i), s.edge);
        if (top < static_cast<std::int64_t>(s.index)) {
            continue;
        }
        for (auto k = static_cast<std::int64_t>(s.index); k <= top; ++k) {
            UNode piece = c;
            piece.steps[i] = {s.edge, static_cast<std::uint64_t>(k), false};
            align(p, piece, i + 1, family, out);
        }
        UNode rest = c;
        rest.steps[i] = {s.edge, static_cast<std::uint64_t>(top + 1), true};
        align(p, rest, i + 1, family, out);
        return;
    }
    out.push_back(c);
}

} // namespace

CoverVerdict cone_cover_check(const TreePresentation& p, const std::vector<UNode>& family) {
    validate_all(p, family);
    const auto live = live_nodes(p);
    if (p.is_empty() || !live[p.root()]) {
        return {};
    }
    const std::size_t depth = max_depth(family);
    // Enumerate live nodes down to the family's depth. Along an infinite edge
    // only the indices up to one past the largest mentioned need visiting:
    // later siblings relate to every member exactly as that one does.
    std::optional<UNode> escape;
    auto walk = [&](auto&& self, const UNode& t) -> bool {
        if (inside_some(family, t)) {
            return true;
        }
        if (t.depth() >= depth) {
            escape = t;
            return false;
        }
        for (EdgeOrdinal e : p.out_edges(tag(p, t))) {
            const Edge& edge = p.edge(e);
            if (!live[edge.dst]) {
                continue;
            }
            std::uint64_t count = edge.mult.is_infinite()
                                      ? static_cast<std::uint64_t>(mentioned(family, t, e) + 2)
                                      : edge.mult.value();
            for (std::uint64_t i = 0; i < count; ++i) {
                if (!self(self, t.child({e, i, false}))) {
                    return false;
                }
            }
        }
        return true;
    };
    if (walk(walk, UNode{})) {
        return {};
    }
    return {false, escape};
}

bool is_partition(const TreePresentation& p, const std::vector<UNode>& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (!disjoint(family[i], family[j])) {
                return false;
            }
        }
    }
    return cone_cover_check(p, family).covered;
}

ConeFamily antichain_normalize(const TreePresentation& p, const std::vector<UNode>& family) {
    require_cover(p, family, "family");
    std::vector<UNode> work = family;
    ConeFamily out;
    out.kind = ConeFamily::Kind::Partition;
    while (true) {
        std::sort(work.begin(), work.end());
        work.erase(std::unique(work.begin(), work.end()), work.end());
        out.members.clear();
        for (std::size_t i = 0; i < work.size(); ++i) {
            bool absorbed = false;
            for (std::size_t j = 0; j < work.size() && !absorbed; ++j) {
                absorbed = j != i && contains(work[j], work[i]);
            }
            if (!absorbed) {
                out.members.push_back(work[i]);
            }
        }
        // Concrete cones are nested or disjoint. Tail cones can overlap
        // without nesting; split the wider tail and try again.
        std::optional<std::pair<std::size_t, std::vector<UNode>>> split;
        for (std::size_t i = 0; i < out.members.size() && !split; ++i) {
            for (std::size_t j = 0; j < out.members.size() && !split; ++j) {
                if (i == j || disjoint(out.members[i], out.members[j])) {
                    continue;
                }
                std::vector<UNode> pieces;
                align(p, out.members[i], 0, {out.members[j]}, pieces);
                if (pieces.size() > 1) {
                    split.emplace(i, std::move(pieces));
                }
            }
        }
        if (!split) {
            for (std::size_t i = 0; i < out.members.size(); ++i) {
                for (std::size_t j = i + 1; j < out.members.size(); ++j) {
                    if (!disjoint(out.members[i], out.members[j])) {
                        throw Error("cones " + out.members[i].to_string() + " and " + out.members[j].to_string() +
                                    " overlap without nesting");
                    }
                }
            }
            return out;
        }
        work = out.members;
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(split->first));
        work.insert(work.end(), split->second.begin(), split->second.end());
    }
}

Refinement refine_partition(const TreePresentation& p, const ConeFamily& part, const std::vector<UNode>& cover) {
    validate_all(p, part.members);
    if (!is_partition(p, part.members)) {
        throw PreconditionError("first argument is not a partition of the ray space");
    }
    require_cover(p, cover, "cover");
    const auto live = live_nodes(p);
    const std::size_t cover_depth = max_depth(cover);
    Refinement out;
    out.partition.kind = ConeFamily::Kind::Partition;

    auto descend = [&](auto&& self, const UNode& c, std::size_t owner) -> void {
        for (UNode& child : split_children(p, live, c, cover)) {
            if (inside_some(cover, child)) {
                out.partition.members.push_back(std::move(child));
                out.parent.push_back(owner);
            } else if (child.depth() >= cover_depth) {
                // Aligned and as deep as every cover member, so each member
                // contains it or misses it; a covering family cannot miss it.
                throw Error("cover check and refinement disagree at " + child.to_string());
            } else {
                self(self, child, owner);
            }
        }
    };
    for (std::size_t i = 0; i < part.members.size(); ++i) {
        const UNode& t = part.members[i];
        if (!live[end_tag(p, t)]) {
            continue;
        }
        std::vector<UNode> pieces;
        align(p, t, 0, cover, pieces);
        for (const UNode& piece : pieces) {
            descend(descend, piece, i);
        }
    }
    return out;
}

std::vector<KernelPoint> d_kernel(const TreePresentation& p, const ConeFamily& assignment) {
    ConeFamily selected = antichain_normalize(p, assignment.members);
    const auto live = live_nodes(p);
    std::vector<KernelPoint> out;
    for (const UNode& cone : selected.members) {
        NodeId at = end_tag(p, cone);
        if (!live[at]) {
            continue;
        }
        KernelPoint k;
        k.cone = cone;
        k.ray = cone;
        for (Step& s : k.ray.steps) {
            s.tail = false;
        }
        // Least live continuation; the walk is determined by the tag, so it
        // cycles as soon as a tag repeats.
        std::vector<std::optional<std::size_t>> first_seen(p.node_count());
        first_seen[at] = k.ray.depth();
        while (true) {
            std::optional<EdgeOrdinal> next;
            for (EdgeOrdinal e : p.out_edges(at)) {
                if (live[p.edge(e).dst]) {
                    next = e;
                    break;
                }
            }
            if (!next) {
                throw Error("live node without live successor");
            }
            k.ray.steps.push_back({*next, 0, false});
            at = p.edge(*next).dst;
            if (first_seen[at]) {
                k.cycle_start = *first_seen[at];
                break;
            }
            first_seen[at] = k.ray.depth();
        }
        out.push_back(std::move(k));
    }
    return out;
}

} // namespace endscope
