#include "rainbow/conflict.hpp"

#include <atomic>
#include <limits>

#include <fmt/format.h>

#include "rainbow/chromatic.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/error.hpp"
#include "rainbow/parallel.hpp"

namespace rainbow {

ConflictGraph::ConflictGraph(std::vector<Edge> nodes, int cycle_len)
    : nodes_(std::move(nodes)), cycle_len_(cycle_len), rows_(nodes_.size(), Bitset(nodes_.size())) {}

std::size_t ConflictGraph::pair_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> ConflictGraph::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        rows_[i].for_each([&](std::size_t j) {
            if (i < j) out.emplace_back(i, j);
        });
    return out;
}

const CycleWitness* ConflictGraph::witness(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    auto it = witnesses_.find({i, j});
    return it == witnesses_.end() ? nullptr : &it->second;
}

std::vector<Bitset> ConflictGraph::induced(const std::vector<std::size_t>& subset) const {
    std::vector<Bitset> out(subset.size(), Bitset(subset.size()));
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = 0; b < subset.size(); ++b)
            if (a != b && adjacent(subset[a], subset[b])) out[a].set(b);
    return out;
}

namespace {

/// Edge id lookup for the enumeration kernels; -1 for non-edges.
std::vector<int> edge_id_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> id(n * n, -1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Edge& e = g.edges()[i];
        id[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = static_cast<int>(i);
        id[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = static_cast<int>(i);
    }
    return id;
}

/// Edge ids along a closed vertex sequence (closing edge last).
inline void cycle_edges(const std::vector<int>& id, std::size_t n, const Vertex* seq, int len,
                        int* out) {
    for (int i = 0; i < len; ++i) {
        const auto a = static_cast<std::size_t>(seq[i]);
        const auto b = static_cast<std::size_t>(seq[(i + 1) % len]);
        out[i] = id[a * n + b];
    }
}

}  // namespace

ConflictGraph conflict_graph(const Graph& g, int cycle_len, bool keep_witnesses) {
    require_cycle_range(g, cycle_len);
    const MaskGraph masks = to_masks(g);
    const auto ids = edge_id_matrix(g);
    const auto n = static_cast<std::size_t>(g.order());
    const auto len = static_cast<std::size_t>(cycle_len);

    ConflictGraph cg(g.edges(), cycle_len);
    cg.keep_witnesses_ = keep_witnesses;
    if (keep_witnesses) {
        int e[kMaxCycleLength];
        for_each_cycle(masks, cycle_len, [&](const Vertex* seq) {
            cycle_edges(ids, n, seq, cycle_len, e);
            for (int i = 0; i < cycle_len; ++i)
                for (int j = i + 1; j < cycle_len; ++j) {
                    auto a = static_cast<std::size_t>(e[i]);
                    auto b = static_cast<std::size_t>(e[j]);
                    if (cg.rows_[a].test(b)) continue;
                    cg.rows_[a].set(b);
                    cg.rows_[b].set(a);
                    if (a > b) std::swap(a, b);
                    cg.witnesses_.emplace(std::make_pair(a, b),
                                          CycleWitness{std::vector<Vertex>(seq, seq + len)});
                }
            return true;
        });
        return cg;
    }

    const auto shards = cycle_shards(masks, cycle_len);
    const unsigned workers = worker_threads();
    std::vector<std::vector<Bitset>> local(workers);
    parallel_for(shards.size(), [&](std::size_t s, unsigned w) {
        auto& rows = local[w];
        if (rows.empty()) rows.assign(g.size(), Bitset(g.size()));
        int e[kMaxCycleLength];
        for_each_cycle_in_shard(masks, cycle_len, shards[s], [&](const Vertex* seq) {
            cycle_edges(ids, n, seq, cycle_len, e);
            for (int i = 0; i < cycle_len; ++i)
                for (int j = i + 1; j < cycle_len; ++j) {
                    rows[static_cast<std::size_t>(e[i])].set(static_cast<std::size_t>(e[j]));
                    rows[static_cast<std::size_t>(e[j])].set(static_cast<std::size_t>(e[i]));
                }
            return true;
        });
    });
    for (const auto& rows : local)
        if (!rows.empty())
            for (std::size_t i = 0; i < rows.size(); ++i) cg.rows_[i] |= rows[i];
    return cg;
}

VerificationReport verify_rainbow(const Graph& g, const EdgeColoring& c, int cycle_len) {
    require_covers(g, c);
    require_cycle_range(g, cycle_len);
    const MaskGraph masks = to_masks(g);
    const auto ids = edge_id_matrix(g);
    const auto n = static_cast<std::size_t>(g.order());
    const auto len = static_cast<std::size_t>(cycle_len);
    const auto shards = cycle_shards(masks, cycle_len);

    struct ShardResult {
        std::uint64_t examined = 0;
        std::optional<RainbowViolation> violation;
    };
    std::vector<ShardResult> results(shards.size());
    std::atomic<std::size_t> first_bad{std::numeric_limits<std::size_t>::max()};

    parallel_for(shards.size(), [&](std::size_t s, unsigned) {
        if (s > first_bad.load()) return;
        auto& res = results[s];
        int e[kMaxCycleLength];
        Color col[kMaxCycleLength];
        for_each_cycle_in_shard(masks, cycle_len, shards[s], [&](const Vertex* seq) {
            ++res.examined;
            cycle_edges(ids, n, seq, cycle_len, e);
            for (int i = 0; i < cycle_len; ++i) col[i] = c.colors[static_cast<std::size_t>(e[i])];
            for (int i = 0; i < cycle_len; ++i)
                for (int j = i + 1; j < cycle_len; ++j)
                    if (col[i] == col[j]) {
                        res.violation = RainbowViolation{
                            CycleWitness{std::vector<Vertex>(seq, seq + len)},
                            std::vector<Color>(col, col + cycle_len), col[i]};
                        std::size_t cur = first_bad.load();
                        while (s < cur && !first_bad.compare_exchange_weak(cur, s)) {
                        }
                        return false;
                    }
            return true;
        });
    });

    VerificationReport report;
    for (std::size_t s = 0; s < shards.size(); ++s) {
        report.cycles_examined += results[s].examined;
        if (results[s].violation) {
            report.pass = false;
            report.violation = std::move(results[s].violation);
            break;
        }
    }
    return report;
}

std::optional<std::pair<std::size_t, std::size_t>> first_improper_pair(const ConflictGraph& cg,
                                                                        const EdgeColoring& c) {
    if (c.colors.size() != cg.node_count())
        throw PreconditionError("colouring size does not match the conflict graph");
    for (std::size_t i = 0; i < cg.node_count(); ++i) {
        std::optional<std::pair<std::size_t, std::size_t>> bad;
        const Bitset& row = cg.row(i);
        for (std::size_t j = i + 1; j < cg.node_count() && !bad; ++j)
            if (row.test(j) && c.colors[i] == c.colors[j]) bad = std::make_pair(i, j);
        if (bad) return bad;
    }
    return std::nullopt;
}

MinColorsResult min_rainbow_colors(const Graph& g, int cycle_len, MinColorsOptions options) {
    require_cycle_range(g, cycle_len);
    if (g.size() > options.max_edges)
        throw GuardExceeded(fmt::format("{} edges exceed the exact-search guard of {}", g.size(),
                                        options.max_edges));
    MinColorsResult out;
    if (g.size() == 0) return out;
    const ConflictGraph cg = conflict_graph(g, cycle_len);
    const ChromaticResult chi = exact_chromatic(cg.rows(), options.cutoff);
    out.colors = chi.colors;
    out.exact = chi.exact;
    if (chi.exact) out.coloring.colors = chi.assignment;
    return out;
}

}  // namespace rainbow
