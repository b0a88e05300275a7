#pragma once

#include <stdexcept>
#include <string>

namespace centralparts {

// Edge-list text that does not parse; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("parse error, line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Operation requires a connected graph.
class NotConnectedError : public std::runtime_error {
public:
    explicit NotConnectedError(const std::string& what = "graph is not connected")
        : std::runtime_error(what) {}
};

// Operation requires a tree.
class NotATreeError : public std::runtime_error {
public:
    explicit NotATreeError(const std::string& what = "graph is not a tree")
        : std::runtime_error(what) {}
};

// A counting cap refused the input. Counting is #P-hard in general; failing
// fast beats a silent multi-hour run.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical routine failed to converge or reached an inconsistent state.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace centralparts
