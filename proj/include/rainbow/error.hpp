#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "rainbow/precondition_report.hpp"

namespace rainbow {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph or coloring text. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A hypothesis of an operation does not hold (range, threshold, membership).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what,
                               std::optional<PreconditionReport> report = std::nullopt)
        : Error(what), report_(std::move(report)) {}
    const std::optional<PreconditionReport>& report() const noexcept { return report_; }

private:
    std::optional<PreconditionReport> report_;
};

/// Tractability guard (edge count, vertex count) exceeded.
class GuardExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// An existence search came back empty.
class SearchFailure : public Error {
public:
    SearchFailure(std::string stage, const std::string& what,
                  std::optional<PreconditionReport> report = std::nullopt)
        : Error(what), stage_(std::move(stage)), report_(std::move(report)) {}
    const std::string& stage() const noexcept { return stage_; }
    const std::optional<PreconditionReport>& report() const noexcept { return report_; }

private:
    std::string stage_;
    std::optional<PreconditionReport> report_;
};

/// Greedy path extension ran out of fresh neighbours.
class StuckError : public SearchFailure {
public:
    using SearchFailure::SearchFailure;
};

/// A certificate failed its own re-verification. Always an implementation bug.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace rainbow
