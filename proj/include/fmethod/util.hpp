#ifndef FMETHOD_UTIL_HPP
#define FMETHOD_UTIL_HPP

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fmethod {

// Inputs with incompatible shapes: mismatched variable lists, fiber
// dimensions, matrix sizes, unknown basis names.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input outside an operation's domain (e.g. taking the
// symbol of an operator with non-constant coefficients).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation of a rational function at a zero of its denominator.
// Carries the offending assignment so callers can resample.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Expression or file syntax errors; message contains a position.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Feature that is deliberately not implemented (e.g. the odd-degree
// comparator normalization); distinct from a bug or a bad input.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

// Reads FMETHOD_LOG once: "quiet" | "info" | "debug" (default info).
LogLevel log_level();
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

template <typename... Args>
std::string cat(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

} // namespace fmethod

#endif
