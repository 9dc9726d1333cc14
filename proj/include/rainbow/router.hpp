#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/error.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/lemmas.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Short connections
// ---------------------------------------------------------------------------

enum class ShortPathOrder {
    shortest_first,  // any length-2 path beats every length-3 path
    depth_first,     // lexicographic over the first interior vertex, length 2 before 3 per vertex
};

struct ConnectOptions {
    ShortPathOrder order = ShortPathOrder::shortest_first;
    int k = 4;  // |avoid| > 5k adds a warning
};

/// Path x..y of length 2 or 3 whose interior avoids `avoid`, x and y.
/// nullopt when none exists.
std::optional<PathWitness> try_connect_short(const Graph& g, Vertex x, Vertex y,
                                             const std::vector<bool>& blocked,
                                             ShortPathOrder order = ShortPathOrder::shortest_first);

/// Checked form: PreconditionError when x == y or an endpoint is avoided,
/// SearchFailure (stage "connect") when no path exists. A warning is appended
/// to `warnings` (when given) if |avoid| exceeds 5k.
PathWitness connect_short(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> avoid,
                          ConnectOptions options = {}, std::vector<std::string>* warnings = nullptr);

// ---------------------------------------------------------------------------
// Odd cycles through two prescribed edges
// ---------------------------------------------------------------------------

enum class Recipe {
    case1,
    claim1_disjoint,
    claim1_adjacent,
    case2_adjacent,
    case2_disjoint_common,
    case2_disjoint_nocommon,
};

/// Whether the triangle pqr contributes the path p-q-r or the edge p-r.
enum class Adjuster { none, through_q, skip_q };

std::string_view to_string(Recipe r);
std::string_view to_string(Adjuster a);

/// A named block of consecutive cycle vertices. The cycle is the concatenation
/// of all stages, closed from the last vertex back to the first, so
/// sum(stage lengths) + #stages = 2k + 1.
struct RouteStage {
    std::string name;
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
};

struct RouteDiagnostics {
    Recipe recipe = Recipe::case1;
    std::vector<RouteStage> stages;
    Adjuster adjuster = Adjuster::none;
    std::vector<std::string> warnings;
    PreconditionReport hypotheses;  // evaluated but not enforced
    std::string failed_stage;       // set on failure only
};

struct Route {
    CycleWitness cycle;
    RouteDiagnostics diagnostics;
};

class RoutingFailure : public SearchFailure {
public:
    RoutingFailure(const std::string& what, RouteDiagnostics diag)
        : SearchFailure(diag.failed_stage, what, diag.hypotheses), diag_(std::move(diag)) {}
    const RouteDiagnostics& diagnostics() const noexcept { return diag_; }

private:
    RouteDiagnostics diag_;
};

struct RouteOptions {
    bool allow_k3 = false;  // exploratory only, nothing is guaranteed for k = 3
    double eps = 0.01;      // for the evaluated hypotheses
    ShortPathOrder short_order = ShortPathOrder::depth_first;
};

// All routers: k >= 4 (or 3 with allow_k3), e1 != e2 both edges of g, else
// PreconditionError. Orientations of the two edges are tried in a fixed order
// and the first complete route is returned after verify_cycle; a route that
// fails verification throws VerificationFailure. RoutingFailure carries the
// diagnostics of the last attempt.

/// Dense case with a close set A: P1 joins endpoints in A (shortest, at most
/// min(3, 2k-5)), P2 is greedy of length 2k-5-l(P1), P3 has length 4.
/// Requires both edges to have an endpoint in A.
Route route_good_pair_case1(const Graph& g, int k, std::span<const Vertex> set, Edge e1, Edge e2,
                            RouteOptions options = {});

/// Routing inside a high-minimum-degree graph via common neighbours and a
/// greedy path (q-p-a-z-w-P-u-b or q-p-z-P-u-b).
Route route_in_dense_subgraph(const Graph& g, int k, Edge e1, Edge e2, RouteOptions options = {});

/// Sparse case around a book pq with A = N(p) \ {q}. Both edges must be good:
/// touching A and avoiding {p, q}. Uses the triangle p-q-r as adjuster.
Route route_good_pair_case2(const Graph& g, int k, const BookWitness& book, Edge e1, Edge e2,
                            RouteOptions options = {});

enum class RouteCase { automatic, case1, claim1, case2 };

/// Throws PreconditionError for unknown ids ("auto", "case1", "claim1", "case2").
RouteCase parse_route_case(std::string_view id);

/// Dispatcher used by the CLI. `automatic` picks case 2 when a book is given,
/// case 1 when a set is given, and otherwise case 1 with find_close_set when
/// e >= (1/4 + eps^6) n^2, case 2 with find_book_edge below that.
Route route(const Graph& g, int k, RouteCase which, Edge e1, Edge e2,
            const std::optional<std::vector<Vertex>>& set, const std::optional<BookWitness>& book,
            RouteOptions options = {});

std::string to_string(const RouteDiagnostics& d);

}  // namespace rainbow
