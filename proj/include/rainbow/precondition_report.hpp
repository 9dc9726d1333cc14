#pragma once

#include <string>
#include <vector>

namespace rainbow {

/// One evaluated inequality `lhs <op> rhs`.
struct ConditionResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string op;  // ">=", ">", "<", "<="
    bool pass = false;
};

struct PreconditionReport {
    std::string context;
    std::vector<ConditionResult> evaluated;
    bool overall = true;

    void add(ConditionResult c) {
        overall = overall && c.pass;
        evaluated.push_back(std::move(c));
    }
};

std::string to_string(const PreconditionReport& report);

}  // namespace rainbow
