#pragma once

#include <optional>

namespace rainbow {

/// ceil(n/2 + sqrt(e + n - n^2/4)): size of the larger clique in the two-clique witness.
long long big_clique_size(long long n, long long e);

/// C(big_clique_size(n,e), 2). Requires n^2/4 < e <= C(n,2).
///
/// This is the closed form; near e = C(n,2) the clique size can exceed n, in
/// which case no two-clique graph exists but the value is still defined.
long long upper_bound_colors(long long n, long long e);

/// e/2 + (n/2) sqrt(e - n^2/4). Requires e >= n^2/4.
double asymptotic_value(long long n, long long e);

struct FormulaParams {
    long long n = 0;
    long long e = 0;
    int k = 4;
    double eps = 0.005;
};

/// Throws PreconditionError unless floor(n^2/4)+1 <= e <= C(n,2), k >= 4, 0 < eps < 0.01.
void validate(const FormulaParams& p);

/// e/2 + (n/2) sqrt(e - n^2/4) - eps n^2 - 2 k^2 eps^-26, unclamped.
double lower_bound_formula(const FormulaParams& p);

/// n^2/8.
double conjecture_value(long long n);

/// Large-n values at e = floor(n^2/4)+1: 3 for triangles, floor(n/2)+3 for
/// pentagons, nothing for longer cycles. These are asymptotic claims only.
std::optional<long long> known_small_cycle_values(long long n, int cycle_len);

/// floor(n^2/4) + 1 and C(n,2).
long long turan_threshold(long long n);
long long max_edges(long long n);

}  // namespace rainbow
