#include "rainbow/chromatic.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

int greedy_clique_bound(const std::vector<Bitset>& adj) {
    const std::size_t n = adj.size();
    int best = n > 0 ? 1 : 0;
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = adj[v].count();
    for (std::size_t seed = 0; seed < n; ++seed) {
        Bitset cand = adj[seed];
        int size = 1;
        while (cand.any()) {
            std::size_t pick = cand.size();
            cand.for_each([&](std::size_t v) {
                if (pick == cand.size() || degree[v] > degree[pick]) pick = v;
            });
            ++size;
            cand &= adj[pick];
        }
        best = std::max(best, size);
    }
    return best;
}

namespace {

class Dsatur {
public:
    Dsatur(const std::vector<Bitset>& adj, int lower, int best)
        : adj_(adj), n_(adj.size()), lower_(lower), best_(best),
          color_(n_, -1), neighbour_colors_(n_, std::vector<int>(n_ + 1, 0)),
          saturation_(n_, 0), uncolored_degree_(n_, 0) {
        for (std::size_t v = 0; v < n_; ++v) uncolored_degree_[v] = static_cast<int>(adj_[v].count());
    }

    void run() { expand(0, 0); }

    int best() const { return best_; }
    bool found() const { return !best_assignment_.empty() || n_ == 0; }
    const std::vector<int>& assignment() const { return best_assignment_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void assign(std::size_t v, int c) {
        color_[v] = c;
        adj_[v].for_each([&](std::size_t w) {
            if (neighbour_colors_[w][static_cast<std::size_t>(c)]++ == 0) ++saturation_[w];
            --uncolored_degree_[w];
        });
    }

    void unassign(std::size_t v) {
        const int c = color_[v];
        color_[v] = -1;
        adj_[v].for_each([&](std::size_t w) {
            if (--neighbour_colors_[w][static_cast<std::size_t>(c)] == 0) --saturation_[w];
            ++uncolored_degree_[w];
        });
    }

    std::size_t select() const {
        std::size_t pick = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] != -1) continue;
            if (pick == n_ || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && uncolored_degree_[v] > uncolored_degree_[pick]))
                pick = v;
        }
        return pick;
    }

    void expand(std::size_t colored, int used) {
        ++nodes_;
        if (colored == n_) {
            best_ = used;
            best_assignment_ = color_;
            return;
        }
        const std::size_t v = select();
        for (int c = 0; c < used; ++c) {
            if (neighbour_colors_[v][static_cast<std::size_t>(c)] != 0) continue;
            assign(v, c);
            expand(colored + 1, used);
            unassign(v);
            if (best_ <= lower_ || used >= best_) return;
        }
        if (used + 1 < best_) {
            assign(v, used);
            expand(colored + 1, used + 1);
            unassign(v);
        }
    }

    const std::vector<Bitset>& adj_;
    std::size_t n_;
    int lower_;
    int best_;  // a colouring must use fewer than best_ colours to be recorded
    std::vector<int> color_;
    std::vector<std::vector<int>> neighbour_colors_;
    std::vector<int> saturation_;
    std::vector<int> uncolored_degree_;
    std::vector<int> best_assignment_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

ChromaticResult exact_chromatic(const std::vector<Bitset>& adj, int cutoff) {
    ChromaticResult result;
    const int n = static_cast<int>(adj.size());
    result.clique_bound = greedy_clique_bound(adj);
    if (n == 0) return result;
    if (cutoff >= 0 && result.clique_bound > cutoff) {
        result.colors = result.clique_bound;
        result.exact = false;
        return result;
    }
    const int limit = cutoff >= 0 ? std::min(cutoff, n) : n;
    Dsatur search(adj, result.clique_bound, limit + 1);
    search.run();
    result.nodes = search.nodes();
    if (!search.found()) {
        result.colors = limit + 1;
        result.exact = false;
        return result;
    }
    result.colors = search.best();
    result.assignment = search.assignment();
    return result;
}

}  // namespace rainbow
