#pragma once

// Finite cone families over the ray space: coverage decisions, antichain
// selection, partition refinement with strict descent, and closed discrete
// kernels for neighbourhood assignments.
//
// Infinite edges are handled with tail steps (`e3.2+`, every child index from
// 2 on): siblings past every index a family mentions are interchangeable, so
// one tail cone stands for all of them and families stay finite.

#include <cstddef>
#include <optional>
#include <vector>

#include "endscope/presentation.hpp"

namespace endscope {

struct ConeFamily {
    enum class Kind { Cover, Partition };

    std::vector<UNode> members;
    Kind kind = Kind::Cover;
};

struct CoverVerdict {
    bool covered = true;
    /// Live node at the family's maximal depth avoiding every member.
    std::optional<UNode> counterexample;

    explicit operator bool() const noexcept { return covered; }
};

/// Does every ray pass through some member?
CoverVerdict cone_cover_check(const TreePresentation& p, const std::vector<UNode>& family);

/// Pairwise disjoint members that cover.
bool is_partition(const TreePresentation& p, const std::vector<UNode>& family);

/// Drops duplicates and members contained in another member. The input must
/// cover; the result is a partition.
ConeFamily antichain_normalize(const TreePresentation& p, const std::vector<UNode>& family);

struct Refinement {
    ConeFamily partition;
    /// For each member of `partition`, the index of the unique member of the
    /// input partition strictly below it.
    std::vector<std::size_t> parent;
};

/// Partition refining both `part` and `cover` in which every member lies
/// strictly above its part member.
Refinement refine_partition(const TreePresentation& p, const ConeFamily& part, const std::vector<UNode>& cover);

struct KernelPoint {
    UNode cone;
    /// The least eventually periodic ray through `cone`, written out up to one
    /// full period: steps [cycle_start, depth) repeat forever.
    UNode ray;
    std::size_t cycle_start = 0;
};

/// Closed discrete kernel of a neighbourhood assignment given as a covering
/// cone family: one canonical ray per cone of its antichain selection.
std::vector<KernelPoint> d_kernel(const TreePresentation& p, const ConeFamily& assignment);

} // namespace endscope
