#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rainbow {

struct ReportRow {
    long long n = 0;
    long long e = 0;
    int k = 4;
    long long upper_bound = 0;
    double asymptotic = 0.0;
    double slack = 0.0;
    std::optional<long long> good_edge_lb;
    std::optional<int> oracle_value;
    bool clamped = false;  // e was moved into [floor(n^2/4)+1, C(n,2)]
};

struct ReportOptions {
    int good_edge_max_n = 200;  // case-1 count on the two-clique graph up to this n
    int oracle_max_n = 6;       // exhaustive oracle with L = 2k+1 up to this n
};

/// One row per (n, fraction) with e = ceil(fraction n^2), clamped into range.
/// Throws PreconditionError when either list is empty, some n < 3, some
/// fraction lies outside (1/4, 1/2], or k < 2.
std::vector<ReportRow> report_rows(const std::vector<long long>& n_values,
                                   const std::vector<double>& fractions, int k,
                                   ReportOptions options = {});

inline constexpr const char* kReportHeader =
    "n,e,k,upper_bound,asymptotic,slack,good_edge_lb,oracle_value";

/// Header plus one line per row; reals with 6 decimals, absent values empty.
std::string format_csv(const std::vector<ReportRow>& rows);

}  // namespace rainbow
