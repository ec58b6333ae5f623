#pragma once

// Brute-force checks on truncated unfoldings. They read only the finite tree,
// never the derivative machinery, so they can falsify it.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "endscope/finite_tree.hpp"
#include "endscope/presentation.hpp"

namespace endscope {

/// Is there an order embedding of the binary strings of length <= d into F
/// with every image live?
bool oracle_embedding_search(const FiniteTree& f, std::size_t d);

/// Is there a depth-d, width-w successor pattern in F: an order embedding phi
/// of the strings over {0..w-1} of length <= d with live images, such that
/// the w images above phi(s) are distinct sampled children of one node t_s
/// lying above phi(s)?
bool oracle_baire_search(const FiniteTree& f, std::size_t d, std::uint64_t w);

/// Number of rounds of literal chain-node removal until F is empty.
std::size_t oracle_finite_derivative(const FiniteTree& f);

/// Does every live node at F's full depth have an ancestor-or-self in `family`?
bool oracle_cover_check(const FiniteTree& f, const std::vector<UNode>& family);

struct OracleComparison {
    bool scatter_nonempty = false;
    bool embedding_found = false;
    bool compact_nonempty = false;
    bool pattern_found = false;

    bool scatter_agrees() const noexcept { return scatter_nonempty == embedding_found; }
    bool compact_agrees() const noexcept { return compact_nonempty == pattern_found; }
};

struct OracleSettings {
    std::uint32_t depth = 12;
    std::uint64_t width = 4;
    std::size_t embedding_depth = 3;
    std::size_t pattern_depth = 2;
    std::uint64_t pattern_width = 3;
};

/// Both derivative verdicts next to the oracle searches on one truncation.
OracleComparison compare_with_oracle(const TreePresentation& p, const OracleSettings& s = {});

} // namespace endscope
