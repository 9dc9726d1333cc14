#pragma once

#include <cstdint>
#include <vector>

#include "rainbow/bitset.hpp"

namespace rainbow {

struct ChromaticResult {
    int colors = 0;                // chromatic number, or a lower bound > cutoff when !exact
    std::vector<int> assignment;   // proper colouring with `colors` colours (exact only)
    int clique_bound = 0;
    std::uint64_t nodes = 0;       // search nodes expanded
    bool exact = true;
};

/// Size of a clique grown greedily from every seed (highest-degree candidate first).
int greedy_clique_bound(const std::vector<Bitset>& adj);

/// Exact chromatic number by DSATUR branch and bound: branch on the vertex of
/// highest saturation (ties: most uncoloured neighbours, then smallest id),
/// existing colours in ascending order before opening a new one, with the
/// greedy clique as lower bound and the incumbent as upper bound.
///
/// With cutoff >= 0 only colourings using at most `cutoff` colours are
/// sought; if none exists the result has exact = false and colors > cutoff.
ChromaticResult exact_chromatic(const std::vector<Bitset>& adj, int cutoff = -1);

}  // namespace rainbow
