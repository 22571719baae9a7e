#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace protosel {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (XES, CSV, PNML). `line()` is 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Caller supplied an argument outside an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A state-space search gave up after exploring `budget` states.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t budget)
        : Error(what + " (budget " + std::to_string(budget) + " states)"), budget_(budget) {}

    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

}  // namespace protosel
