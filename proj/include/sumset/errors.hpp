#ifndef SUMSET_ERRORS_HPP
#define SUMSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sumset {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Elements from different group specs were combined.
struct StructuralError : Error {
    explicit StructuralError(const std::string& msg) : Error(msg) {}
};

/// A coloring was queried outside its domain.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input (group spec, element, coloring file).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A configured cap (fragment size, nodes, time) was exceeded.
/// Distinct from an exhaustive negative result: a capped search never
/// claims "none in domain".
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

/// A constructive procedure could not complete (candidate supply
/// exhausted, monochromatic-subset stage failed exhaustively, ...).
struct ConstructionError : Error {
    ConstructionError(const std::string& stage, const std::string& msg, int achieved = -1)
        : Error("[" + stage + "] " + msg), stage(stage), achieved(achieved) {}
    std::string stage;
    int achieved; // length reached by a sequence builder, -1 if n/a
};

} // namespace sumset

#endif
