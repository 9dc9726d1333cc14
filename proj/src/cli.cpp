#include "rainbow/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rainbow/coloring.hpp"
#include "rainbow/conflict.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/error.hpp"
#include "rainbow/formulas.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/lemmas.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/preconditions.hpp"
#include "rainbow/report.hpp"
#include "rainbow/router.hpp"

namespace rainbow::cli {

namespace {

/// Malformed argument value that CLI11 cannot catch by type alone.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Edge parse_edge_arg(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("edge must be written u,v: " + text);
    int a = 0;
    int b = 0;
    const char* s = text.data();
    auto r1 = std::from_chars(s, s + comma, a);
    auto r2 = std::from_chars(s + comma + 1, s + text.size(), b);
    if (r1.ec != std::errc{} || r1.ptr != s + comma || r2.ec != std::errc{} ||
        r2.ptr != s + text.size())
        throw UsageError("edge must be written u,v: " + text);
    return Edge(a, b);
}

/// Whitespace separated vertex ids; '#' starts a comment running to end of line.
std::vector<Vertex> parse_vertex_list(std::string_view text) {
    std::vector<Vertex> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        std::string w;
        while (words >> w) {
            int v = 0;
            auto r = std::from_chars(w.data(), w.data() + w.size(), v);
            if (r.ec != std::errc{} || r.ptr != w.data() + w.size() || v < 0)
                throw ParseError(line_no, "expected a vertex id, got '" + w + "'");
            out.push_back(v);
        }
    }
    return out;
}

std::string format_vertices(const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
    return s;
}

void emit(std::ostream& out, const std::string& path, const std::string& content) {
    if (path.empty()) out << content;
    else write_text_file_atomic(path, content);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rainbow cycle colourings: constructions, lemma certificates, routers and oracles",
                 "rainbow"};
    app.require_subcommand(1);
    std::function<int()> run;

    // construct two-clique
    auto* construct = app.add_subcommand("construct", "Build extremal colourings");
    construct->require_subcommand(1);
    auto* two_clique = construct->add_subcommand("two-clique", "K_a + K_b with the shared palette");
    int tc_n = 0;
    long long tc_e = 0;
    std::string tc_out;
    std::string tc_colors;
    two_clique->add_option("--n", tc_n, "vertex count")->required();
    two_clique->add_option("--e", tc_e, "edge target")->required();
    two_clique->add_option("--out", tc_out, "graph file (stdout when omitted)");
    two_clique->add_option("--colors", tc_colors, "colouring file");
    two_clique->callback([&] {
        run = [&] {
            const auto w = two_clique_graph(tc_n, tc_e);
            err << fmt::format("two-clique n={} e={}: |A|={} |B|={} edges={} colors={}\n", tc_n, tc_e,
                               w.big, w.small, w.graph.size(), w.coloring.color_count());
            emit(out, tc_out, format_graph(w.graph));
            if (!tc_colors.empty()) write_text_file_atomic(tc_colors, format_coloring(w.graph, w.coloring));
            return ok;
        };
    });

    // formula
    auto* formula = app.add_subcommand("formula", "Evaluate the closed-form bounds");
    long long f_n = 0;
    long long f_e = 0;
    int f_k = 4;
    double f_eps = 0.005;
    bool f_csv = false;
    formula->add_option("--n", f_n)->required();
    formula->add_option("--e", f_e)->required();
    formula->add_option("--k", f_k, "cycle half-length, L = 2k+1")->capture_default_str();
    formula->add_option("--eps", f_eps)->capture_default_str();
    formula->add_flag("--csv", f_csv, "one CSV line instead of a table");
    formula->callback([&] {
        run = [&] {
            FormulaParams p{f_n, f_e, f_k, f_eps};
            validate(p);
            const long long ub = upper_bound_colors(f_n, f_e);
            const double asym = asymptotic_value(f_n, f_e);
            const double g = lower_bound_formula(p);
            const double conj = conjecture_value(f_n);
            const auto c3 = known_small_cycle_values(f_n, 3);
            const auto c5 = known_small_cycle_values(f_n, 5);
            if (f_csv) {
                out << "n,e,k,eps,two_clique_size,upper_bound,asymptotic,lower_bound,conjecture\n";
                out << fmt::format("{},{},{},{:.6f},{},{},{:.6f},{:.6e},{:.6f}\n", f_n, f_e, f_k, f_eps,
                                   big_clique_size(f_n, f_e), ub, asym, g, conj);
            } else {
                out << fmt::format("n                     {}\n", f_n);
                out << fmt::format("e                     {}\n", f_e);
                out << fmt::format("range                 [{}, {}]\n", turan_threshold(f_n), max_edges(f_n));
                out << fmt::format("two-clique size |A|   {}\n", big_clique_size(f_n, f_e));
                out << fmt::format("upper bound C(|A|,2)  {}\n", ub);
                out << fmt::format("asymptotic value      {:.6f}\n", asym);
                out << fmt::format("lower bound g (raw)   {:.6e}\n", g);
                out << fmt::format("lower bound max(0,g)  {:.6f}\n", std::max(0.0, g));
                out << fmt::format("n^2/8                 {:.6f}\n", conj);
                out << fmt::format("triangles (large n)   {}\n", *c3);
                out << fmt::format("pentagons (large n)   {}\n", *c5);
            }
            return ok;
        };
    });

    // lemma ...
    auto* lemma = app.add_subcommand("lemma", "Lemma certificates");
    lemma->require_subcommand(1);
    std::string l_graph;
    int l_x = 0;
    int l_y = 0;
    int l_v = 0;
    int l_len = 0;
    std::vector<int> l_avoid;
    int l_n = 0;
    long long l_e = 0;
    std::string l_out;
    std::string l_context;
    int l_k = 4;
    double l_eps = 0.01;

    auto* close_set = lemma->add_subcommand("close-set", "Large set with pairwise distance <= 3");
    close_set->add_option("--graph", l_graph)->required();
    close_set->callback([&] {
        run = [&] {
            const Graph g = read_graph_file(l_graph);
            const auto c = find_close_set(g);
            out << fmt::format("branch {}\nc1 {:.6f}\nc2 {:.6f}\n", to_string(c.branch), c.c1, c.c2);
            if (c.threshold) out << fmt::format("threshold {}\n", *c.threshold);
            if (c.centre) out << fmt::format("centre {}\n", *c.centre);
            out << fmt::format("size {}\nset {}\n", c.set.size(), format_vertices(c.set));
            return ok;
        };
    });

    auto* path4 = lemma->add_subcommand("path4", "Path of length exactly 4");
    path4->add_option("--graph", l_graph)->required();
    path4->add_option("--x", l_x)->required();
    path4->add_option("--y", l_y)->required();
    path4->add_option("--avoid", l_avoid, "comma separated")->delimiter(',');
    path4->callback([&] {
        run = [&] {
            const Graph g = read_graph_file(l_graph);
            const std::vector<Vertex> avoid(l_avoid.begin(), l_avoid.end());
            out << "path " << to_string(find_path_len4(g, l_x, l_y, avoid)) << '\n';
            return ok;
        };
    });

    auto* greedy = lemma->add_subcommand("greedy", "Greedy path avoiding a set");
    greedy->add_option("--graph", l_graph)->required();
    greedy->add_option("--v", l_v)->required();
    greedy->add_option("--len", l_len)->required();
    greedy->add_option("--avoid", l_avoid, "comma separated")->delimiter(',');
    greedy->callback([&] {
        run = [&] {
            const Graph g = read_graph_file(l_graph);
            const std::vector<Vertex> avoid(l_avoid.begin(), l_avoid.end());
            out << "path " << to_string(greedy_extend(g, l_v, avoid, l_len)) << '\n';
            return ok;
        };
    });

    auto* book = lemma->add_subcommand("book", "Edge with many common neighbours");
    book->add_option("--graph", l_graph)->required();
    book->callback([&] {
        run = [&] {
            const Graph g = read_graph_file(l_graph);
            const auto b = find_book_edge(g);
            out << fmt::format("edge {} {}\nwidth {}\ncommon {}\n", b.p, b.q, b.common.size(),
                               format_vertices(b.common));
            return ok;
        };
    });

    auto* tightness = lemma->add_subcommand("tightness", "Distance-4 example");
    tightness->add_option("--n", l_n)->required();
    tightness->add_option("--e", l_e)->required();
    tightness->add_option("--out", l_out, "graph file (stdout when omitted)");
    tightness->callback([&] {
        run = [&] {
            const auto t = tightness_graph(l_n, l_e);
            const int dist = bfs_distances(t.graph, t.u)[static_cast<std::size_t>(t.v)];
            err << fmt::format("tightness n={} s={} u={} v={} edges={} dist(u,v)={}\n", l_n, t.set_size,
                               t.u, t.v, t.graph.size(), dist);
            emit(out, l_out, format_graph(t.graph));
            return ok;
        };
    });

    auto* check = lemma->add_subcommand("check", "Evaluate a hypothesis set");
    check->add_option("--graph", l_graph)->required();
    check->add_option("--context", l_context, "close-set|path4|book|case1|case2|dense-claim")->required();
    check->add_option("--k", l_k)->capture_default_str();
    check->add_option("--eps", l_eps)->capture_default_str();
    check->callback([&] {
        run = [&] {
            const Graph g = read_graph_file(l_graph);
            const auto report = check_preconditions(g, parse_context(l_context), {l_k, l_eps});
            out << to_string(report);
            return report.overall ? ok : precondition;
        };
    });

    // route
    auto* route_cmd = app.add_subcommand("route", "Odd cycle through two edges");
    std::string r_graph;
    int r_k = 4;
    std::string r_case = "auto";
    std::string r_e1;
    std::string r_e2;
    std::string r_set;
    std::string r_book;
    bool r_k3 = false;
    route_cmd->add_option("--graph", r_graph)->required();
    route_cmd->add_option("--k", r_k)->capture_default_str();
    route_cmd->add_option("--case", r_case, "auto|case1|claim1|case2")->capture_default_str();
    route_cmd->add_option("--edge1", r_e1, "u,v")->required();
    route_cmd->add_option("--edge2", r_e2, "u,v")->required();
    route_cmd->add_option("--set", r_set, "file with the vertex set A");
    route_cmd->add_option("--book", r_book, "p,q");
    route_cmd->add_flag("--allow-k3", r_k3, "exploratory k = 3 attempts");
    route_cmd->callback([&] {
        run = [&] {
            const Graph g = read_graph_file(r_graph);
            const RouteCase which = parse_route_case(r_case);
            const Edge e1 = parse_edge_arg(r_e1);
            const Edge e2 = parse_edge_arg(r_e2);
            std::optional<std::vector<Vertex>> set;
            if (!r_set.empty()) set = parse_vertex_list(read_text_file(r_set));
            std::optional<BookWitness> bw;
            if (!r_book.empty()) {
                const Edge pq = parse_edge_arg(r_book);
                bw = BookWitness{pq.u, pq.v, common_neighbors(g, pq.u, pq.v)};
            }
            RouteOptions opts;
            opts.allow_k3 = r_k3;
            try {
                const Route r = route(g, r_k, which, e1, e2, set, bw, opts);
                out << "cycle " << to_string(r.cycle) << '\n' << to_string(r.diagnostics);
            } catch (const RoutingFailure& f) {
                err << f.what() << '\n' << to_string(f.diagnostics());
                return search_failed;
            }
            return ok;
        };
    });

    // conflict
    auto* conflict = app.add_subcommand("conflict", "Conflict graph of L-cycles");
    std::string c_graph;
    int c_len = 0;
    bool c_witness = false;
    conflict->add_option("--graph", c_graph)->required();
    conflict->add_option("--L", c_len, "cycle length")->required();
    conflict->add_flag("--witnesses", c_witness, "print one cycle per pair");
    conflict->callback([&] {
        run = [&] {
            const Graph g = read_graph_file(c_graph);
            const auto cg = conflict_graph(g, c_len, c_witness);
            out << fmt::format("# {} edges, {} conflict pairs\n", cg.node_count(), cg.pair_count());
            for (std::size_t i = 0; i < cg.node_count(); ++i)
                out << fmt::format("# edge {}: {} {}\n", i, cg.nodes()[i].u, cg.nodes()[i].v);
            for (auto [i, j] : cg.pairs()) {
                out << i << ' ' << j;
                if (c_witness) out << "  " << to_string(*cg.witness(i, j));
                out << '\n';
            }
            return ok;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Check that every L-cycle is rainbow");
    std::string v_graph;
    std::string v_colors;
    int v_len = 0;
    verify->add_option("--graph", v_graph)->required();
    verify->add_option("--colors", v_colors)->required();
    verify->add_option("--L", v_len)->required();
    verify->callback([&] {
        run = [&] {
            const Graph g = read_graph_file(v_graph);
            const EdgeColoring c = parse_coloring(g, read_text_file(v_colors));
            const auto rep = verify_rainbow(g, c, v_len);
            if (rep.pass) {
                out << fmt::format("pass: {} cycles of length {} are rainbow\n", rep.cycles_examined, v_len);
                return ok;
            }
            std::string cols;
            for (std::size_t i = 0; i < rep.violation->colors.size(); ++i)
                cols += (i ? " " : "") + std::to_string(rep.violation->colors[i]);
            out << fmt::format("fail after {} cycles\ncycle {}\ncolors {}\nrepeated {}\n",
                               rep.cycles_examined, to_string(rep.violation->cycle), cols,
                               rep.violation->repeated);
            return verify_failed;
        };
    });

    // min-colors
    auto* min_colors = app.add_subcommand("min-colors", "Exact minimum rainbow palette");
    std::string m_graph;
    int m_len = 0;
    std::size_t m_max_edges = 64;
    std::string m_out;
    min_colors->add_option("--graph", m_graph)->required();
    min_colors->add_option("--L", m_len)->required();
    min_colors->add_option("--max-edges", m_max_edges, "exact-search guard")->capture_default_str();
    min_colors->add_option("--colors-out", m_out, "write the optimal colouring here");
    min_colors->callback([&] {
        run = [&] {
            if (m_max_edges != 64) err << fmt::format("warning: edge guard overridden to {}\n", m_max_edges);
            const Graph g = read_graph_file(m_graph);
            MinColorsOptions opts;
            opts.max_edges = m_max_edges;
            const auto r = min_rainbow_colors(g, m_len, opts);
            out << fmt::format("colors {}\n", r.colors);
            emit(out, m_out, format_coloring(g, r.coloring));
            return ok;
        };
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum over all graphs");
    int o_n = 0;
    long long o_e = 0;
    int o_len = 0;
    int o_max_n = 0;
    std::string o_graph_out;
    std::string o_colors_out;
    oracle->add_option("--n", o_n)->required();
    oracle->add_option("--e", o_e)->required();
    oracle->add_option("--L", o_len)->required();
    oracle->add_option("--max-n-override", o_max_n, "raise the n <= 7 guard");
    oracle->add_option("--graph-out", o_graph_out);
    oracle->add_option("--colors-out", o_colors_out);
    oracle->callback([&] {
        run = [&] {
            OracleOptions opts;
            if (o_max_n > 0) {
                err << fmt::format("warning: oracle guard overridden to n <= {}\n", o_max_n);
                opts.max_n = o_max_n;
            }
            const auto r = f_oracle(o_n, o_e, o_len, opts);
            out << fmt::format("n {}\ne {}\nL {}\nvalue {}\ngraphs_examined {}\ngraphs_skipped {}\n", r.n,
                               r.e, r.cycle_len, r.value, r.graphs_examined, r.graphs_skipped);
            if (auto known = known_small_cycle_values(o_n, o_len))
                out << fmt::format("large-n value {} (informational)\n", *known);
            if (o_graph_out.empty()) out << format_graph(r.extremal_graph);
            else write_text_file_atomic(o_graph_out, format_graph(r.extremal_graph));
            if (o_colors_out.empty()) out << format_coloring(r.extremal_graph, r.optimal_coloring);
            else write_text_file_atomic(o_colors_out, format_coloring(r.extremal_graph, r.optimal_coloring));
            return ok;
        };
    });

    // report
    auto* report_cmd = app.add_subcommand("report", "Bound comparison table (CSV)");
    std::vector<long long> rp_n;
    std::vector<double> rp_f;
    int rp_k = 4;
    std::string rp_out;
    report_cmd->add_option("--n", rp_n, "comma separated vertex counts")->delimiter(',')->required();
    report_cmd->add_option("--fractions", rp_f, "comma separated e/n^2 values")->delimiter(',')->required();
    report_cmd->add_option("--k", rp_k)->capture_default_str();
    report_cmd->add_option("--out", rp_out, "CSV file (stdout when omitted)");
    report_cmd->callback([&] {
        run = [&] {
            const auto rows = report_rows(rp_n, rp_f, rp_k);
            for (const auto& r : rows)
                if (r.clamped) err << fmt::format("note: n={} e clamped to {}\n", r.n, r.e);
            emit(out, rp_out, format_csv(rows));
            return ok;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return usage;
    }

    try {
        return run ? run() : usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        if (e.report()) err << to_string(*e.report());
        return precondition;
    } catch (const SearchFailure& e) {
        err << "search failed (" << e.stage() << "): " << e.what() << '\n';
        if (e.report()) err << to_string(*e.report());
        return search_failed;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << '\n';
        return verify_failed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return verify_failed;
    }
}

}  // namespace rainbow::cli
