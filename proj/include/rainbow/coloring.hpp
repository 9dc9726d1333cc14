#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using Color = int;

/// colors[i] is the colour of host.edges()[i].
struct EdgeColoring {
    std::vector<Color> colors;

    std::size_t color_count() const;
    Color of(const Graph& host, Edge e) const;
};

/// Throws PreconditionError when the colouring does not cover exactly the edges of g.
void require_covers(const Graph& g, const EdgeColoring& c);

/// Lines "u v c", one per edge, in lexicographic edge order.
std::string format_coloring(const Graph& g, const EdgeColoring& c);

/// Each edge of g must appear exactly once; '#' comments allowed. Throws ParseError.
EdgeColoring parse_coloring(const Graph& g, std::string_view text);

}  // namespace rainbow
