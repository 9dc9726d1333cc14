#pragma once

#include <string>
#include <string_view>

#include "rainbow/graph.hpp"
#include "rainbow/precondition_report.hpp"

namespace rainbow {

/// Hypothesis sets that can be evaluated against a concrete graph.
enum class Context {
    close_set,    // e >= n^2/4 - n/2
    path4,        // e >= n^2/4 + 4 and delta >= n/2 - sqrt(e - n^2/4) + 2
    book,         // e > n^2/4
    case1,        // dense regime: e >= (1/4 + eps^6) n^2, e > n^2/4 + 2kn, case-1 degree bound
    case2,        // near-threshold regime: n^2/4 < e < (1/4 + eps^6) n^2, delta > n/2 - sqrt(e - n^2/4) - 1/2
    dense_claim,  // delta >= n/2 + 5k (the routing subgraph used for short connections)
};

std::string_view to_string(Context c);

/// Throws PreconditionError for unknown ids.
Context parse_context(std::string_view id);

/// Real thresholds are compared with this slack: non-strict inequalities accept
/// values within kSlack of the bound, strict ones demand a margin of kSlack.
inline constexpr double kSlack = 1e-9;

inline bool at_least(double lhs, double rhs) { return lhs >= rhs - kSlack; }
inline bool strictly_greater(double lhs, double rhs) { return lhs > rhs + kSlack; }
inline bool strictly_less(double lhs, double rhs) { return lhs < rhs - kSlack; }

/// n/2 + sqrt(e - n^2/4 + n/2): guaranteed size of a set with pairwise distance <= 3.
double close_set_bound(int n, double e);

/// n/2 - sqrt(e - n^2/4) + 2: minimum degree that forces length-4 paths between all pairs.
double path4_degree_bound(int n, double e);

struct CheckParams {
    int k = 4;
    double eps = 0.01;
};

/// Evaluates every inequality of `context` on g. eps must lie in (0,1), k >= 1.
PreconditionReport check_preconditions(const Graph& g, Context context, CheckParams params = {});

}  // namespace rainbow
