#pragma once

#include <stdexcept>
#include <string>

namespace chebvar {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_input : error {
    using error::error;
};

struct rank_deficiency_error : error {
    using error::error;
};

struct unsupported_dimension : error {
    using error::error;
};

struct degenerate_polytope : error {
    using error::error;
};

struct unsupported_support : error {
    using error::error;
};

struct unsupported_kind : error {
    using error::error;
};

struct internal_consistency_error : error {
    using error::error;
};

struct genericity_error : error {
    using error::error;
};

struct iteration_limit : error {
    using error::error;
};

struct corrector_failure : error {
    using error::error;
};

struct path_failure : error {
    using error::error;
};

struct enumeration_cap : error {
    using error::error;
};

struct inconclusive_degree : error {
    using error::error;
};

struct domain_error : error {
    using error::error;
};

}  // namespace chebvar
