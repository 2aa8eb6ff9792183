#ifndef MULTIEULER_ERRORS_HPP
#define MULTIEULER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multieuler {

// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& msg) : Error(msg) {}
};

class DuplicateVertex : public Error {
public:
    explicit DuplicateVertex(const std::string& msg) : Error(msg) {}
};

class EmptyGraph : public Error {
public:
    explicit EmptyGraph(const std::string& msg) : Error(msg) {}
};

class NoEdges : public Error {
public:
    explicit NoEdges(const std::string& msg) : Error(msg) {}
};

class UnknownEdge : public Error {
public:
    explicit UnknownEdge(const std::string& msg) : Error(msg) {}
};

class NonPositiveEntry : public Error {
public:
    explicit NonPositiveEntry(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class NonSquare : public Error {
public:
    explicit NonSquare(const std::string& msg) : Error(msg) {}
};

// Thrown when an operation requires strong connectivity and the graph lacks
// it. `from`/`to` name a witness pair with no directed path from -> to when
// one was identified.
class NotStronglyConnected : public Error {
public:
    explicit NotStronglyConnected(const std::string& msg) : Error(msg) {}
    NotStronglyConnected(const std::string& msg, std::string from, std::string to)
        : Error(msg), from_(std::move(from)), to_(std::move(to)) {}
    const std::string& from() const { return from_; }
    const std::string& to() const { return to_; }

private:
    std::string from_;
    std::string to_;
};

class NotPeriodVector : public Error {
public:
    explicit NotPeriodVector(const std::string& msg) : Error(msg) {}
};

class NotEulerian : public Error {
public:
    explicit NotEulerian(const std::string& msg) : Error(msg) {}
};

class SearchSpaceTooLarge : public Error {
public:
    explicit SearchSpaceTooLarge(const std::string& msg) : Error(msg) {}
};

class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class BadMultiplicity : public Error {
public:
    explicit BadMultiplicity(const std::string& msg) : Error(msg) {}
};

} // namespace multieuler

#endif // MULTIEULER_ERRORS_HPP
