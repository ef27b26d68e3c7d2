#pragma once

#include <stdexcept>
#include <string>

namespace tci {

/// A requested target (mean/variance pair, retention level, ...) cannot be
/// reached by any admissible strategy. Distinct from invalid input so callers
/// can map it to a dedicated exit code.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A configuration that is syntactically valid but outside what the
/// numeric routines support (e.g. a check time off the segment grid).
class UnsupportedError : public std::invalid_argument {
public:
    explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace tci
