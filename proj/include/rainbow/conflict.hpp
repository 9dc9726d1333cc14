#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/bitset.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// Graph on the edges of a base graph (node i = base.edges()[i]); two nodes
/// are adjacent iff some L-cycle of the base contains both edges. A colouring
/// makes every L-cycle rainbow exactly when it is proper on this graph.
class ConflictGraph {
public:
    ConflictGraph() = default;
    ConflictGraph(std::vector<Edge> nodes, int cycle_len);

    int cycle_length() const noexcept { return cycle_len_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    const std::vector<Edge>& nodes() const noexcept { return nodes_; }

    bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    const Bitset& row(std::size_t i) const { return rows_[i]; }
    const std::vector<Bitset>& rows() const noexcept { return rows_; }

    std::size_t pair_count() const;
    /// Conflict pairs (i < j) in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool has_witnesses() const noexcept { return keep_witnesses_; }
    /// First cycle (lexicographic canonical order) through both edges, when kept.
    const CycleWitness* witness(std::size_t i, std::size_t j) const;

    /// Restriction to the given node subset, in the order given.
    std::vector<Bitset> induced(const std::vector<std::size_t>& subset) const;

private:
    friend ConflictGraph conflict_graph(const Graph&, int, bool);

    std::vector<Edge> nodes_;
    int cycle_len_ = 0;
    std::vector<Bitset> rows_;
    bool keep_witnesses_ = false;
    std::map<std::pair<std::size_t, std::size_t>, CycleWitness> witnesses_;
};

/// Requires 3 <= L <= n <= 64. Without witnesses the cycle shards run in parallel.
ConflictGraph conflict_graph(const Graph& g, int cycle_len, bool keep_witnesses = false);

struct RainbowViolation {
    CycleWitness cycle;
    std::vector<Color> colors;  // colour of edge (c[i], c[i+1]), closing edge last
    Color repeated = 0;
};

struct VerificationReport {
    bool pass = true;
    std::uint64_t cycles_examined = 0;
    std::optional<RainbowViolation> violation;
};

/// Checks every L-cycle for repeated colours. On failure the violation is the
/// lexicographically first bad canonical cycle; cycles_examined then counts
/// cycles up to and including it.
VerificationReport verify_rainbow(const Graph& g, const EdgeColoring& c, int cycle_len);

/// First conflicting pair with equal colours, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_improper_pair(const ConflictGraph& cg,
                                                                        const EdgeColoring& c);
inline bool is_proper_coloring(const ConflictGraph& cg, const EdgeColoring& c) {
    return !first_improper_pair(cg, c).has_value();
}

struct MinColorsOptions {
    std::size_t max_edges = 64;
    int cutoff = -1;  // see exact_chromatic
};

struct MinColorsResult {
    int colors = 0;
    EdgeColoring coloring;  // empty when !exact
    bool exact = true;
};

/// Fewest colours making every L-cycle of g rainbow, with an optimal colouring.
/// Throws GuardExceeded when g has more than options.max_edges edges.
MinColorsResult min_rainbow_colors(const Graph& g, int cycle_len, MinColorsOptions options = {});

}  // namespace rainbow
