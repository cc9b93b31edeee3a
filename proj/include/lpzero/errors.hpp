#pragma once

#include <stdexcept>
#include <string>

namespace lpzero {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}

    /// Short machine-readable tag, used by the CLI in its "error" object.
    virtual const char* kind() const noexcept { return "error"; }
};

#define LPZERO_DEFINE_ERROR(Name, tag)                                  \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(what) {}          \
        const char* kind() const noexcept override { return tag; }       \
    }

LPZERO_DEFINE_ERROR(ParameterDomainError, "parameter_domain");
LPZERO_DEFINE_ERROR(DivergentMajorantError, "divergent_majorant");
LPZERO_DEFINE_ERROR(InsufficientDataError, "insufficient_data");
LPZERO_DEFINE_ERROR(ConditioningError, "conditioning");
LPZERO_DEFINE_ERROR(ZeroOnCircleError, "zero_on_circle");
LPZERO_DEFINE_ERROR(RealRootsError, "real_roots");
LPZERO_DEFINE_ERROR(PreconditionError, "precondition");
LPZERO_DEFINE_ERROR(MonotonicityError, "monotonicity_violation");
LPZERO_DEFINE_ERROR(ConsistencyError, "internal_consistency");

#undef LPZERO_DEFINE_ERROR

}  // namespace lpzero
