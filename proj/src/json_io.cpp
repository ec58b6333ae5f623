#include "endscope/json_io.hpp"

#include "endscope/error.hpp"

namespace endscope {

namespace {

Json optional_rank(const std::optional<std::size_t>& r) { return r ? Json(*r) : Json(nullptr); }

std::optional<std::size_t> rank_from_json(const Json& j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<std::size_t>();
}

Json names_of(const std::vector<UNode>& family) {
    Json out = Json::array();
    for (const UNode& t : family) {
        out.push_back(t.to_string());
    }
    return out;
}

} // namespace

Json cardinal_to_json(const Cardinal& c) { return c.to_string(); }

Cardinal cardinal_from_json(const Json& j) { return Cardinal::from_string(j.get<std::string>()); }

Json trace_to_json(const TreePresentation& p, const DerivativeTrace& t) {
    Json stages = Json::array();
    for (const NodeSet& s : t.stages) {
        stages.push_back(stage_names(p, s));
    }
    Json rank_of = Json::object();
    for (const auto& [v, stage] : t.rank_of) {
        rank_of[p.node_name(v)] = stage;
    }
    return Json{{"operator", to_string(t.op)},
                {"stages", std::move(stages)},
                {"rank", optional_rank(rank(t))},
                {"rankOf", std::move(rank_of)}};
}

Json witness_to_json(const BinaryEmbeddingPrefix& w) {
    Json map = Json::object();
    for (const auto& [key, t] : w.map) {
        map[key] = t.to_string();
    }
    return Json{{"kind", "binary"}, {"depth", w.depth}, {"map", std::move(map)}};
}

Json witness_to_json(const BairePatternPrefix& w) {
    Json phi = Json::object();
    for (const auto& [key, t] : w.phi) {
        phi[to_string(key)] = t.to_string();
    }
    Json t_of = Json::object();
    for (const auto& [key, t] : w.t_of) {
        t_of[to_string(key)] = t.to_string();
    }
    return Json{{"kind", "baire"},
                {"depth", w.depth},
                {"width", w.width},
                {"phi", std::move(phi)},
                {"tOf", std::move(t_of)}};
}

BinaryEmbeddingPrefix binary_witness_from_json(const Json& j) {
    try {
        BinaryEmbeddingPrefix w;
        w.depth = j.at("depth").get<std::size_t>();
        for (const auto& [key, value] : j.at("map").items()) {
            w.map.emplace(key, UNode::parse(value.get<std::string>()));
        }
        return w;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("binary witness: ") + e.what());
    }
}

BairePatternPrefix baire_witness_from_json(const Json& j) {
    try {
        BairePatternPrefix w;
        w.depth = j.at("depth").get<std::size_t>();
        w.width = j.at("width").get<std::uint64_t>();
        for (const auto& [key, value] : j.at("phi").items()) {
            w.phi.emplace(baire_key_from_string(key), UNode::parse(value.get<std::string>()));
        }
        for (const auto& [key, value] : j.at("tOf").items()) {
            w.t_of.emplace(baire_key_from_string(key), UNode::parse(value.get<std::string>()));
        }
        return w;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("baire witness: ") + e.what());
    }
}

Json report_to_json(const TreePresentation& p, const PropertyReport& r) {
    Json witnesses = Json::object();
    witnesses["binary"] = r.binary ? witness_to_json(*r.binary) : Json(nullptr);
    witnesses["baire"] = r.baire ? witness_to_json(*r.baire) : Json(nullptr);
    return Json{{"name", p.name()},
                {"pruned", r.pruned},
                {"empty", r.empty},
                {"compact", r.compact},
                {"lindelofDegree", cardinal_to_json(r.lindelof_degree)},
                {"extent", cardinal_to_json(r.extent)},
                {"scattered", r.scattered},
                {"rothberger", r.rothberger},
                {"menger", r.menger},
                {"sigmaCompact", r.sigma_compact},
                {"scatterRank", optional_rank(r.scatter_rank)},
                {"kbRank", optional_rank(r.kb_rank)},
                {"traces", {trace_to_json(p, r.scatter_trace), trace_to_json(p, r.compact_trace)}},
                {"witnesses", std::move(witnesses)}};
}

PropertyReport report_from_json(const Json& j) {
    try {
        PropertyReport r;
        r.pruned = j.at("pruned").get<bool>();
        r.empty = j.at("empty").get<bool>();
        r.compact = j.at("compact").get<bool>();
        r.lindelof_degree = cardinal_from_json(j.at("lindelofDegree"));
        r.extent = cardinal_from_json(j.at("extent"));
        r.scattered = j.at("scattered").get<bool>();
        r.rothberger = j.at("rothberger").get<bool>();
        r.menger = j.at("menger").get<bool>();
        r.sigma_compact = j.at("sigmaCompact").get<bool>();
        r.scatter_rank = rank_from_json(j.at("scatterRank"));
        r.kb_rank = rank_from_json(j.at("kbRank"));
        const Json& w = j.at("witnesses");
        if (!w.at("binary").is_null()) {
            r.binary = binary_witness_from_json(w.at("binary"));
        }
        if (!w.at("baire").is_null()) {
            r.baire = baire_witness_from_json(w.at("baire"));
        }
        return r;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

Json unodes_to_json(const std::vector<UNode>& family) { return names_of(family); }

Json refinement_to_json(const ConeFamily& part, const Refinement& r) {
    Json parent = Json::object();
    for (std::size_t i = 0; i < r.partition.members.size(); ++i) {
        parent[r.partition.members[i].to_string()] = part.members.at(r.parent[i]).to_string();
    }
    return Json{{"partition", names_of(r.partition.members)}, {"parent", std::move(parent)}};
}

Json kernel_to_json(const std::vector<KernelPoint>& kernel) {
    Json out = Json::array();
    for (const KernelPoint& k : kernel) {
        out.push_back(Json{{"cone", k.cone.to_string()}, {"ray", k.ray.to_string()}, {"cycleStart", k.cycle_start}});
    }
    return out;
}

Json graph_to_json(const FiniteGraph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edge_list()) {
        edges.push_back({u, v});
    }
    return Json{{"name", g.name()}, {"vertices", g.names()}, {"edges", std::move(edges)}};
}

Json tree_to_json(const FiniteGraph& g, const RootedSpanTree& t) {
    Json parent = Json::object();
    Json vertices = Json::array();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (!t.member[v]) {
            continue;
        }
        vertices.push_back(g.name_of(v));
        if (t.parent[v]) {
            parent[g.name_of(v)] = g.name_of(*t.parent[v]);
        }
    }
    return Json{{"root", g.name_of(t.root)}, {"vertices", std::move(vertices)}, {"parent", std::move(parent)}};
}

Json hg_to_json(const HgResult& h) {
    Json naming = Json::object();
    for (const auto& [name, origin] : h.naming) {
        naming[name] = Json{{"vertex", origin.first},
                            {"neighbor", origin.second ? Json(*origin.second) : Json(nullptr)}};
    }
    Json out = graph_to_json(h.graph);
    out["naming"] = std::move(naming);
    return out;
}

} // namespace endscope
