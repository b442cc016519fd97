#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bdist {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document. Line and column are 1-based; column 0 means
/// the whole line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Structurally well-formed input that violates a model invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> problems)
        : Error(join(problems)), problems_(std::move(problems)) {}

    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    static std::string join(const std::vector<std::string>& items) {
        std::string out;
        for (const auto& item : items) {
            if (!out.empty())
                out += "; ";
            out += item;
        }
        return out;
    }

    std::vector<std::string> problems_;
};

/// The requested distance cannot be applied to the given labels or game,
/// e.g. maximum lead on symbolic labels, or an infinite label distance
/// under an accumulating valuation.
class KindMismatch : public Error {
public:
    using Error::Error;
};

} // namespace bdist
