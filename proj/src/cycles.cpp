#include "rainbow/cycles.hpp"

#include <atomic>

#include <fmt/format.h>

#include "rainbow/error.hpp"
#include "rainbow/parallel.hpp"

namespace rainbow {

MaskGraph to_masks(const Graph& g) {
    if (g.order() > kMaxEnumerationOrder)
        throw PreconditionError(fmt::format("cycle enumeration supports at most {} vertices, got {}",
                                            kMaxEnumerationOrder, g.order()));
    MaskGraph m;
    m.n = g.order();
    m.adj.assign(static_cast<std::size_t>(m.n), 0);
    for (const Edge& e : g.edges()) {
        m.adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        m.adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    return m;
}

void require_cycle_range(const Graph& g, int cycle_len) {
    if (cycle_len < 3 || cycle_len > g.order())
        throw PreconditionError(
            fmt::format("cycle length {} outside [3, n={}]", cycle_len, g.order()));
    if (g.order() > kMaxEnumerationOrder)
        throw PreconditionError(fmt::format("cycle enumeration supports at most {} vertices, got {}",
                                            kMaxEnumerationOrder, g.order()));
}

std::vector<CycleShard> cycle_shards(const MaskGraph& g, int cycle_len) {
    std::vector<CycleShard> shards;
    // The anchor is the minimum of the cycle, so it needs cycle_len - 1 larger vertices.
    for (Vertex s = 0; s + cycle_len <= g.n; ++s) {
        std::uint64_t nb = g.adj[static_cast<std::size_t>(s)];
        nb &= (s >= 63) ? 0 : (~std::uint64_t{0} << (s + 1));
        while (nb) {
            const int v = std::countr_zero(nb);
            nb &= nb - 1;
            shards.push_back({s, v});
        }
    }
    return shards;
}

std::vector<CycleWitness> enumerate_cycles(const Graph& g, int cycle_len) {
    require_cycle_range(g, cycle_len);
    const MaskGraph m = to_masks(g);
    std::vector<CycleWitness> out;
    const auto len = static_cast<std::size_t>(cycle_len);
    for_each_cycle(m, cycle_len, [&](const Vertex* seq) {
        out.push_back(CycleWitness{std::vector<Vertex>(seq, seq + len)});
        return true;
    });
    return out;
}

std::uint64_t count_cycles(const Graph& g, int cycle_len) {
    require_cycle_range(g, cycle_len);
    const MaskGraph m = to_masks(g);
    const auto shards = cycle_shards(m, cycle_len);
    std::atomic<std::uint64_t> total{0};
    parallel_for(shards.size(), [&](std::size_t i, unsigned) {
        std::uint64_t local = 0;
        for_each_cycle_in_shard(m, cycle_len, shards[i], [&](const Vertex*) {
            ++local;
            return true;
        });
        total += local;
    });
    return total.load();
}

}  // namespace rainbow
