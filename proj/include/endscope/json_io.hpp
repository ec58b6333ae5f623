#pragma once

// JSON forms of reports, traces, witnesses, cone families and graph outputs.

#include <json.hpp>

#include "endscope/covering.hpp"
#include "endscope/graphs.hpp"
#include "endscope/partitions.hpp"

namespace endscope {

using Json = nlohmann::ordered_json;

Json cardinal_to_json(const Cardinal& c);
Cardinal cardinal_from_json(const Json& j);

Json trace_to_json(const TreePresentation& p, const DerivativeTrace& t);

Json witness_to_json(const BinaryEmbeddingPrefix& w);
Json witness_to_json(const BairePatternPrefix& w);
BinaryEmbeddingPrefix binary_witness_from_json(const Json& j);
BairePatternPrefix baire_witness_from_json(const Json& j);

/// Verdict fields, ranks, traces and attached witnesses.
Json report_to_json(const TreePresentation& p, const PropertyReport& r);
/// Reads back verdicts, ranks and witnesses. Traces are not reconstructed.
PropertyReport report_from_json(const Json& j);

Json unodes_to_json(const std::vector<UNode>& family);
Json refinement_to_json(const ConeFamily& part, const Refinement& r);
Json kernel_to_json(const std::vector<KernelPoint>& kernel);

Json graph_to_json(const FiniteGraph& g);
Json tree_to_json(const FiniteGraph& g, const RootedSpanTree& t);
Json hg_to_json(const HgResult& h);

} // namespace endscope
