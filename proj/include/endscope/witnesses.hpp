#pragma once

// Finite-depth certificates for the two obstructions: an order-embedded copy
// of the binary tree (the ray space is not scattered) and the successor
// pattern of omega^{<omega} (the ray space contains a closed Baire space).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "endscope/derivatives.hpp"
#include "endscope/presentation.hpp"

namespace endscope {

/// Order embedding of the binary strings of length <= depth. Keys are strings
/// over {'0','1'}; the empty key is the bottom.
struct BinaryEmbeddingPrefix {
    std::size_t depth = 0;
    std::map<std::string, UNode> map;
};

using BaireKey = std::vector<std::uint64_t>;

/// phi embeds the strings over {0..width-1} of length <= depth; for every
/// string s of length < depth, t_of(s) lies above phi(s) and the images
/// phi(s n) are children of t_of(s) along an infinite edge.
struct BairePatternPrefix {
    std::size_t depth = 0;
    std::uint64_t width = 0;
    std::map<BaireKey, UNode> phi;
    std::map<BaireKey, UNode> t_of;
};

/// `0.2.1` style rendering, empty string for the empty key.
std::string to_string(const BaireKey& key);
BaireKey baire_key_from_string(const std::string& text);

std::optional<BinaryEmbeddingPrefix> binary_witness(const TreePresentation& p, const DerivativeTrace& trace,
                                                    std::size_t depth);

std::optional<BairePatternPrefix> baire_witness(const TreePresentation& p, const DerivativeTrace& trace,
                                                std::size_t depth, std::uint64_t width);

struct WitnessVerdict {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks the certificate against the unfolding order only; does not consult
/// any derivative.
WitnessVerdict verify_witness(const TreePresentation& p, const BinaryEmbeddingPrefix& w);
WitnessVerdict verify_witness(const TreePresentation& p, const BairePatternPrefix& w);

} // namespace endscope
