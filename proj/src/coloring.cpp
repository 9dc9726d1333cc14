#include "rainbow/coloring.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>

#include "rainbow/error.hpp"

namespace rainbow {

std::size_t EdgeColoring::color_count() const {
    std::vector<Color> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Color EdgeColoring::of(const Graph& host, Edge e) const {
    auto idx = host.edge_index(e);
    if (!idx) throw PreconditionError(to_string(e) + " is not an edge");
    return colors.at(*idx);
}

void require_covers(const Graph& g, const EdgeColoring& c) {
    if (c.colors.size() != g.size())
        throw PreconditionError(
            fmt::format("colouring has {} entries, graph has {} edges", c.colors.size(), g.size()));
    for (Color col : c.colors)
        if (col < 0) throw PreconditionError(fmt::format("negative colour id {}", col));
}

std::string format_coloring(const Graph& g, const EdgeColoring& c) {
    require_covers(g, c);
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i)
        out += fmt::format("{} {} {}\n", g.edges()[i].u, g.edges()[i].v, c.colors[i]);
    return out;
}

EdgeColoring parse_coloring(const Graph& g, std::string_view text) {
    EdgeColoring c;
    c.colors.assign(g.size(), -1);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::size_t assigned = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;

        long long vals[3];
        const char* p = line.data() + first;
        const char* end = line.data() + line.size();
        for (int i = 0; i < 3; ++i) {
            while (p < end && (*p == ' ' || *p == '\t')) ++p;
            auto [next, ec] = std::from_chars(p, end, vals[i]);
            if (ec != std::errc{} || vals[i] < 0)
                throw ParseError(line_no, "expected \"u v c\" with non-negative integers");
            p = next;
        }
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        if (p != end) throw ParseError(line_no, "trailing characters");
        if (vals[0] >= g.order() || vals[1] >= g.order() || vals[0] == vals[1])
            throw ParseError(line_no, "not an edge of the graph");
        const Edge e(static_cast<Vertex>(vals[0]), static_cast<Vertex>(vals[1]));
        auto idx = g.edge_index(e);
        if (!idx) throw ParseError(line_no, to_string(e) + " is not an edge of the graph");
        if (c.colors[*idx] != -1) throw ParseError(line_no, "edge " + to_string(e) + " coloured twice");
        if (vals[2] > 1'000'000'000) throw ParseError(line_no, "colour id too large");
        c.colors[*idx] = static_cast<Color>(vals[2]);
        ++assigned;
    }
    if (assigned != g.size())
        throw ParseError(line_no, fmt::format("{} of {} edges coloured", assigned, g.size()));
    return c;
}

}  // namespace rainbow
