#pragma once

#include <stdexcept>
#include <string>

namespace sccl {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed selectors, out-of-range ids, schema violations.
class invalid_argument_error : public error {
public:
    explicit invalid_argument_error(const std::string& what) : error(what) {}
};

/// Solver process could not be located or produced unusable output.
class solver_error : public error {
public:
    explicit solver_error(const std::string& what) : error(what) {}
};

/// Search-budget refusal from the exhaustive oracle.
class budget_error : public error {
public:
    explicit budget_error(const std::string& what) : error(what) {}
};

} // namespace sccl
