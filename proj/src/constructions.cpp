#include "rainbow/constructions.hpp"

#include <fmt/format.h>

#include "rainbow/error.hpp"
#include "rainbow/formulas.hpp"

namespace rainbow {

TwoCliqueWitness two_clique_graph(int n, long long e) {
    if (n < 1 || 4 * e <= static_cast<long long>(n) * n || e > max_edges(n))
        throw PreconditionError(fmt::format("need n^2/4 < e <= C(n,2), got n={}, e={}", n, e));
    const long long a = big_clique_size(n, e);
    const long long b = n - a;
    if (b < 0)
        throw PreconditionError(
            fmt::format("size inequality fails: |A| = {} exceeds n = {} (e = {})", a, n, e));
    const long long edges = a * (a - 1) / 2 + b * (b - 1) / 2;
    if (edges < e)
        throw PreconditionError(fmt::format(
            "size inequality fails: |A| = {}, |B| = {} give {} < e = {} edges", a, b, edges, e));

    TwoCliqueWitness w;
    w.big = static_cast<int>(a);
    w.small = static_cast<int>(b);
    std::vector<Edge> list;
    list.reserve(static_cast<std::size_t>(edges));
    for (Vertex u = 0; u < w.big; ++u)
        for (Vertex v = u + 1; v < w.big; ++v) list.emplace_back(u, v);
    for (Vertex u = w.big; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) list.emplace_back(u, v);
    w.graph = Graph(n, std::move(list));

    // Big-clique edges precede small-clique edges in lexicographic order.
    const auto big_edges = static_cast<std::size_t>(a * (a - 1) / 2);
    w.coloring.colors.resize(w.graph.size());
    for (std::size_t i = 0; i < w.graph.size(); ++i)
        w.coloring.colors[i] = static_cast<Color>(i < big_edges ? i : i - big_edges);
    return w;
}

}  // namespace rainbow
