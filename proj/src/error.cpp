#include "dirichlet/error.hpp"

namespace dirichlet {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_modulus: return "invalid-modulus";
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::not_coprime: return "not-coprime";
        case ErrorKind::divergent_series: return "divergent-series";
        case ErrorKind::domain: return "domain";
        case ErrorKind::unsupported: return "unsupported";
        case ErrorKind::branch_tracking_failure: return "branch-tracking-failure";
        case ErrorKind::precision_failure: return "precision-failure";
    }
    return "unknown";
}

}  // namespace dirichlet
