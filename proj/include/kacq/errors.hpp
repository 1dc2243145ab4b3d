#pragma once

#include <stdexcept>
#include <string>

namespace kacq {

// Malformed or inconsistent caller input (bad quiver, mismatched vectors).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically undefined request, e.g. log of a series with constant term != 1.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A configured search or feasibility limit was exceeded. Never a silent truncation.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; signals a bug rather than bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace kacq
