#pragma once

#include <stdexcept>
#include <string>

namespace rotcanon {

// Input violates a documented precondition (bad graph, bad argument).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A desk-scale search guard was exceeded.
class SizeError : public DomainError {
public:
    explicit SizeError(const std::string& what) : DomainError(what) {}
};

// Malformed input text; line numbers are 1-based.
class ParseError : public DomainError {
public:
    ParseError(int line, const std::string& what)
        : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rotcanon
