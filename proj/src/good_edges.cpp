#include "rainbow/good_edges.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "rainbow/error.hpp"

namespace rainbow {

GoodEdgesCase1 good_edges_case1(const Graph& g, std::span<const Vertex> set) {
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    for (Vertex a : set) {
        if (!g.contains(a)) throw PreconditionError(fmt::format("vertex {} out of range", a));
        if (in[static_cast<std::size_t>(a)])
            throw PreconditionError(fmt::format("vertex {} listed twice", a));
        in[static_cast<std::size_t>(a)] = true;
    }
    GoodEdgesCase1 out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Edge& e = g.edges()[i];
        if (in[static_cast<std::size_t>(e.u)] || in[static_cast<std::size_t>(e.v)]) out.edges.push_back(i);
    }
    const long long rest = g.order() - static_cast<long long>(set.size());
    out.lower_bound = static_cast<long long>(g.size()) - rest * (rest - 1) / 2;
    if (static_cast<long long>(out.edges.size()) < out.lower_bound)
        throw VerificationFailure("good edge count below e - C(n-|A|,2)");
    return out;
}

GoodEdgesCase2 good_edges_case2(const Graph& g, const BookWitness& book) {
    if (!g.contains(book.p) || !g.contains(book.q) || !g.adjacent(book.p, book.q))
        throw PreconditionError(fmt::format("book spine {}{} is not an edge", book.p, book.q));
    GoodEdgesCase2 out;
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    for (Vertex z : g.neighbors(book.p))
        if (z != book.q) {
            out.set.push_back(z);
            in[static_cast<std::size_t>(z)] = true;
        }
    auto spine = [&](Vertex x) { return x == book.p || x == book.q; };
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Edge& e = g.edges()[i];
        if (spine(e.u) || spine(e.v)) continue;
        const bool iu = in[static_cast<std::size_t>(e.u)];
        const bool iv = in[static_cast<std::size_t>(e.v)];
        if (!iu && !iv) continue;
        out.edges.push_back(i);
        if (iu && iv) ++out.inside_count;
    }
    for (Vertex z : out.set) out.incidence_sum += g.degree(z) - 2;
    out.half_sum_bound = out.incidence_sum / 2;
    out.min_degree_bound = static_cast<double>(out.set.size()) * (min_degree(g) - 2) / 2.0;

    // Every z in A loses at most its edges to p and q; the rest are good.
    const double incidence_floor = out.incidence_sum - static_cast<double>(out.inside_count);
    const auto count = static_cast<double>(out.edges.size());
    if (!at_least(count, incidence_floor) || !at_least(count, out.half_sum_bound) ||
        !at_least(count, out.min_degree_bound))
        throw VerificationFailure("case-2 good edge count below the incidence estimate");
    return out;
}

}  // namespace rainbow
