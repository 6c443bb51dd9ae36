#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dirichlet {

enum class ErrorKind {
    invalid_modulus,
    invalid_argument,
    not_coprime,
    divergent_series,
    domain,
    unsupported,
    branch_tracking_failure,
    precision_failure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for every library failure; `kind()` tells callers
/// (and the CLI's exit-code mapping) what went wrong.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dirichlet
