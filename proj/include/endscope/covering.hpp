#pragma once

// Decision procedures for covering properties of ray spaces.

#include <cstddef>
#include <optional>
#include <vector>

#include "endscope/derivatives.hpp"
#include "endscope/presentation.hpp"
#include "endscope/witnesses.hpp"

namespace endscope {

/// Compact iff every node of the pruned tree is finitely branching.
bool is_compact(const TreePresentation& p);

/// aleph_0 unless an uncountable edge survives pruning, in which case the
/// largest such cardinal.
Cardinal lindelof_degree(const TreePresentation& p);
Cardinal extent(const TreePresentation& p);

/// Lindelof and scattered.
bool is_rothberger(const TreePresentation& p);
/// Lindelof and the compact derivative empties. Coincides with
/// sigma-compactness for ray spaces.
bool is_menger(const TreePresentation& p);
bool is_sigma_compact(const TreePresentation& p);

/// Cover of the ray space by `pieces` compact ray spaces, or nullopt when the
/// space is not Menger. Piece k (1-based) is the pruned presentation with
/// every countably infinite multiplicity capped at k, so its unfolding keeps
/// exactly the rays whose infinite-branch indices are all below k.
///
/// This exhausts the ray space: under Menger no cycle of the pruned
/// presentation carries an infinite edge (such a cycle would survive every
/// compact derivative stage), so a ray crosses infinite edges finitely often
/// and its largest index m puts it in piece m + 1.
std::optional<std::vector<TreePresentation>> sigma_cover(const TreePresentation& p, std::size_t pieces);

struct PropertyReport {
    bool pruned = false;
    bool empty = false;
    bool compact = false;
    Cardinal lindelof_degree = Cardinal::aleph(0);
    Cardinal extent = Cardinal::aleph(0);
    bool scattered = false;
    bool rothberger = false;
    bool menger = false;
    bool sigma_compact = false;
    std::optional<std::size_t> scatter_rank;
    std::optional<std::size_t> kb_rank;

    DerivativeTrace scatter_trace;
    DerivativeTrace compact_trace;
    /// Present iff the space is not scattered.
    std::optional<BinaryEmbeddingPrefix> binary;
    /// Present iff the space is Lindelof but not Menger.
    std::optional<BairePatternPrefix> baire;
};

inline constexpr std::uint64_t kDefaultWitnessWidth = 3;

PropertyReport report(const TreePresentation& p, std::size_t witness_depth,
                      std::uint64_t witness_width = kDefaultWitnessWidth);

/// Empty when the report satisfies every implication between the properties;
/// otherwise one message per violated implication.
std::vector<std::string> report_invariant_violations(const PropertyReport& r);

} // namespace endscope
