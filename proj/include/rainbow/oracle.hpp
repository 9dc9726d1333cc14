#pragma once

#include <cstdint>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct OracleOptions {
    int max_n = 7;
    /// Skip labelings whose vertex invariants are not non-increasing (n >= 6 only).
    bool prune = true;
};

struct OracleResult {
    int n = 0;
    long long e = 0;
    int cycle_len = 0;
    int value = 0;
    Graph extremal_graph;
    EdgeColoring optimal_coloring;
    std::uint64_t graphs_examined = 0;
    std::uint64_t graphs_skipped = 0;
};

/// Minimum over labelled n-vertex graphs with exactly e edges of the fewest
/// colours making every L-cycle rainbow. Adding edges never lowers that count,
/// so graphs with more than e edges need not be searched.
///
/// The extremal graph is the first minimiser in edge-mask order (lowest set
/// bit first, then ascending combination order), independent of thread count.
/// Throws PreconditionError unless 0 <= e <= C(n,2) and 3 <= L <= n, and
/// GuardExceeded when n > options.max_n or C(n,2) > 64.
OracleResult f_oracle(int n, long long e, int cycle_len, OracleOptions options = {});

}  // namespace rainbow
