#include "rainbow/preconditions.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "rainbow/error.hpp"

namespace rainbow {

std::string_view to_string(Context c) {
    switch (c) {
        case Context::close_set: return "close-set";
        case Context::path4: return "path4";
        case Context::book: return "book";
        case Context::case1: return "case1";
        case Context::case2: return "case2";
        case Context::dense_claim: return "dense-claim";
    }
    return "?";
}

Context parse_context(std::string_view id) {
    for (Context c : {Context::close_set, Context::path4, Context::book, Context::case1,
                      Context::case2, Context::dense_claim})
        if (to_string(c) == id) return c;
    throw PreconditionError(fmt::format("unknown precondition context '{}'", id));
}

double close_set_bound(int n, double e) {
    const double nn = n;
    return nn / 2 + std::sqrt(e - nn * nn / 4 + nn / 2);
}

double path4_degree_bound(int n, double e) {
    const double nn = n;
    return nn / 2 - std::sqrt(e - nn * nn / 4) + 2;
}

namespace {

ConditionResult ge(std::string name, double lhs, double rhs) {
    return {std::move(name), lhs, rhs, ">=", at_least(lhs, rhs)};
}
ConditionResult gt(std::string name, double lhs, double rhs) {
    return {std::move(name), lhs, rhs, ">", strictly_greater(lhs, rhs)};
}
ConditionResult lt(std::string name, double lhs, double rhs) {
    return {std::move(name), lhs, rhs, "<", strictly_less(lhs, rhs)};
}

/// A negative radicand makes the degree bound unattainable (+inf after negation).
double safe_sqrt(double x) {
    return x < 0 ? -std::numeric_limits<double>::infinity() : std::sqrt(x);
}

}  // namespace

PreconditionReport check_preconditions(const Graph& g, Context context, CheckParams params) {
    if (!(params.eps > 0 && params.eps < 1))
        throw PreconditionError(fmt::format("eps={} outside (0,1)", params.eps));
    if (params.k < 1) throw PreconditionError(fmt::format("k={} must be positive", params.k));

    const double n = g.order();
    const double e = static_cast<double>(g.size());
    const double quarter = n * n / 4;
    const double delta = min_degree(g);
    const double k = params.k;
    const double eps6 = std::pow(params.eps, 6);

    PreconditionReport report;
    report.context = std::string(to_string(context));
    switch (context) {
        case Context::close_set:
            report.add(ge("e >= n^2/4 - n/2", e, quarter - n / 2));
            break;
        case Context::path4:
            report.add(ge("e >= n^2/4 + 4", e, quarter + 4));
            report.add(ge("delta >= n/2 - sqrt(e - n^2/4) + 2", delta,
                          n / 2 - safe_sqrt(e - quarter) + 2));
            break;
        case Context::book:
            report.add(gt("e > n^2/4", e, quarter));
            break;
        case Context::case1:
            report.add(ge("e >= (1/4 + eps^6) n^2", e, (0.25 + eps6) * n * n));
            report.add(gt("e > n^2/4 + 2kn", e, quarter + 2 * k * n));
            report.add(gt("delta > n/2 - sqrt(e - 2kn - n^2/4) + 2k", delta,
                          n / 2 - safe_sqrt(e - 2 * k * n - quarter) + 2 * k));
            break;
        case Context::case2:
            report.add(gt("e > n^2/4", e, quarter));
            report.add(lt("e < (1/4 + eps^6) n^2", e, (0.25 + eps6) * n * n));
            report.add(gt("delta > n/2 - sqrt(e - n^2/4) - 1/2", delta,
                          n / 2 - safe_sqrt(e - quarter) - 0.5));
            break;
        case Context::dense_claim:
            report.add(ge("delta >= n/2 + 5k", delta, n / 2 + 5 * k));
            break;
    }
    return report;
}

std::string to_string(const PreconditionReport& report) {
    std::string out = fmt::format("context {}: {}\n", report.context, report.overall ? "pass" : "fail");
    for (const auto& c : report.evaluated)
        out += fmt::format("  [{}] {}  ({:.6f} {} {:.6f})\n", c.pass ? "ok" : "FAIL", c.name, c.lhs,
                           c.op, c.rhs);
    return out;
}

}  // namespace rainbow
