#include "rainbow/formulas.hpp"

#include <cmath>

#include <fmt/format.h>

#include "rainbow/error.hpp"
#include "rainbow/preconditions.hpp"

namespace rainbow {

long long turan_threshold(long long n) { return n * n / 4 + 1; }
long long max_edges(long long n) { return n * (n - 1) / 2; }

namespace {

void require_above_turan(long long n, long long e) {
    if (n < 1 || 4 * e <= n * n || e > max_edges(n))
        throw PreconditionError(
            fmt::format("need n^2/4 < e <= C(n,2), got n={}, e={}", n, e));
}

}  // namespace

long long big_clique_size(long long n, long long e) {
    const double nn = static_cast<double>(n);
    const double x = nn / 2 + std::sqrt(static_cast<double>(e) + nn - nn * nn / 4);
    return static_cast<long long>(std::ceil(x - kSlack));
}

long long upper_bound_colors(long long n, long long e) {
    require_above_turan(n, e);
    const long long a = big_clique_size(n, e);
    return a * (a - 1) / 2;
}

double asymptotic_value(long long n, long long e) {
    if (n < 0 || 4 * e < n * n)
        throw PreconditionError(fmt::format("need e >= n^2/4, got n={}, e={}", n, e));
    const double nn = static_cast<double>(n);
    const double ee = static_cast<double>(e);
    return ee / 2 + nn / 2 * std::sqrt(ee - nn * nn / 4);
}

void validate(const FormulaParams& p) {
    if (p.n < 1 || p.e < turan_threshold(p.n) || p.e > max_edges(p.n))
        throw PreconditionError(fmt::format("e={} outside [{}, {}] for n={}", p.e,
                                            turan_threshold(p.n), max_edges(p.n), p.n));
    if (p.k < 4) throw PreconditionError(fmt::format("k={} must be at least 4", p.k));
    if (!(p.eps > 0 && p.eps < 0.01))
        throw PreconditionError(fmt::format("eps={} outside (0, 0.01)", p.eps));
}

double lower_bound_formula(const FormulaParams& p) {
    validate(p);
    const double nn = static_cast<double>(p.n);
    const double k = p.k;
    return asymptotic_value(p.n, p.e) - p.eps * nn * nn - 2 * k * k * std::pow(p.eps, -26);
}

double conjecture_value(long long n) {
    const double nn = static_cast<double>(n);
    return nn * nn / 8;
}

std::optional<long long> known_small_cycle_values(long long n, int cycle_len) {
    if (cycle_len == 3) return 3;
    if (cycle_len == 5) return n / 2 + 3;
    return std::nullopt;
}

}  // namespace rainbow
