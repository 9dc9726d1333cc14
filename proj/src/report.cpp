#include "rainbow/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rainbow/constructions.hpp"
#include "rainbow/error.hpp"
#include "rainbow/formulas.hpp"
#include "rainbow/good_edges.hpp"
#include "rainbow/lemmas.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

namespace {

std::optional<long long> good_edge_count(long long n, long long e) {
    try {
        const auto w = two_clique_graph(static_cast<int>(n), e);
        const auto a = find_close_set(w.graph);
        return static_cast<long long>(good_edges_case1(w.graph, a.set).edges.size());
    } catch (const PreconditionError&) {
        return std::nullopt;  // no two-clique graph for this (n, e)
    }
}

}  // namespace

std::vector<ReportRow> report_rows(const std::vector<long long>& n_values,
                                   const std::vector<double>& fractions, int k,
                                   ReportOptions options) {
    if (n_values.empty()) throw PreconditionError("invalid grid: no n values");
    if (fractions.empty()) throw PreconditionError("invalid grid: no edge fractions");
    if (k < 2) throw PreconditionError(fmt::format("invalid grid: k = {} < 2", k));
    for (long long n : n_values)
        if (n < 3) throw PreconditionError(fmt::format("invalid grid: n = {} < 3", n));
    for (double f : fractions)
        if (!(f > 0.25 && f <= 0.5))
            throw PreconditionError(fmt::format("invalid grid: fraction {} outside (1/4, 1/2]", f));

    std::vector<ReportRow> rows;
    for (long long n : n_values)
        for (double f : fractions) {
            ReportRow row;
            row.n = n;
            row.k = k;
            const auto raw = static_cast<long long>(std::ceil(f * static_cast<double>(n * n) - 1e-9));
            row.e = std::clamp(raw, turan_threshold(n), max_edges(n));
            row.clamped = row.e != raw;
            row.upper_bound = upper_bound_colors(n, row.e);
            row.asymptotic = asymptotic_value(n, row.e);
            row.slack = static_cast<double>(row.upper_bound) - row.asymptotic;
            if (n <= options.good_edge_max_n) row.good_edge_lb = good_edge_count(n, row.e);
            if (n <= options.oracle_max_n && 2 * k + 1 <= n) {
                OracleOptions oo;
                oo.max_n = options.oracle_max_n;
                row.oracle_value = f_oracle(static_cast<int>(n), row.e, 2 * k + 1, oo).value;
            }
            rows.push_back(row);
        }
    return rows;
}

std::string format_csv(const std::vector<ReportRow>& rows) {
    std::string out = kReportHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{},{:.6f},{:.6f},{},{}\n", r.n, r.e, r.k, r.upper_bound,
                           r.asymptotic, r.slack,
                           r.good_edge_lb ? fmt::to_string(*r.good_edge_lb) : std::string(),
                           r.oracle_value ? fmt::to_string(*r.oracle_value) : std::string());
    }
    return out;
}

}  // namespace rainbow
