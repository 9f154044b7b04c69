#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recolor {

// An algorithm precondition does not hold (wrong k, no partition, ...).
// May carry a vertex-set witness, e.g. the residual subgraph certifying
// mad(G) >= d when a partition cannot be built. CLI exit code 2.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what, std::vector<int> witness = {})
        : std::runtime_error(what), witness_(std::move(witness)) {}

    const std::vector<int>& witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

// Oracle state budget exhausted. No partial results are produced. CLI exit code 4.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; line and column are 1-based. CLI exit code 1.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace recolor
