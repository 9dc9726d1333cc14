#include "rainbow/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

/// Splits a line into whitespace-separated non-negative integers.
bool parse_ints(std::string_view line, std::vector<long long>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{} || value < 0) return false;
        const auto next = static_cast<std::size_t>(ptr - line.data());
        if (next < line.size() && line[next] != ' ' && line[next] != '\t' && line[next] != '\r')
            return false;
        out.push_back(value);
        i = next;
    }
    return true;
}

bool is_skippable(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<long long> fields;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> seen;

    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const auto line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (is_skippable(line)) continue;
        if (!parse_ints(line, fields) || fields.size() != 2)
            throw ParseError(line_no, "expected two non-negative integers");

        if (!have_header) {
            n = fields[0];
            m = fields[1];
            if (n > (1 << 20)) throw ParseError(line_no, fmt::format("vertex count {} too large", n));
            if (m > n * (n - 1) / 2)
                throw ParseError(line_no, fmt::format("edge count {} exceeds C({},2)", m, n));
            have_header = true;
            seen.assign(static_cast<std::size_t>(n), {});
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }

        const long long a = fields[0];
        const long long b = fields[1];
        if (a == b) throw ParseError(line_no, fmt::format("loop at vertex {}", a));
        if (a >= n || b >= n)
            throw ParseError(line_no, fmt::format("vertex out of range (n={})", n));
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, fmt::format("more than {} edge lines", m));
        const Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
        auto& row = seen[static_cast<std::size_t>(e.u)];
        if (row.empty()) row.assign(static_cast<std::size_t>(n), false);
        if (row[static_cast<std::size_t>(e.v)])
            throw ParseError(line_no, "duplicate edge " + to_string(e));
        row[static_cast<std::size_t>(e.v)] = true;
        edges.push_back(e);
    }
    if (!have_header) throw ParseError(line_no, "missing header \"n m\"");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, fmt::format("expected {} edges, found {}", m, edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const Graph& g) {
    std::string out = fmt::format("{} {}\n", g.order(), g.size());
    for (const Edge& e : g.edges()) out += fmt::format("{} {}\n", e.u, e.v);
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Graph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

}  // namespace rainbow
