#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace balanced {

// Base for all domain errors. `code()` is a stable machine-readable tag that
// the CLI forwards in its {"error": ...} documents.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define BALANCED_DEFINE_ERROR(Name, tag)                         \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(tag, what) {} \
    }

BALANCED_DEFINE_ERROR(ParseError, "parse_error");
BALANCED_DEFINE_ERROR(DisconnectedError, "disconnected");
BALANCED_DEFINE_ERROR(SelfLoopError, "self_loop");
BALANCED_DEFINE_ERROR(UnknownFamilyError, "unknown_family");
BALANCED_DEFINE_ERROR(BadParameterError, "bad_parameter");
BALANCED_DEFINE_ERROR(DimensionMismatchError, "dimension_mismatch");
BALANCED_DEFINE_ERROR(NotBalancedError, "not_balanced");
BALANCED_DEFINE_ERROR(BadCoefficientsError, "bad_coefficients");
BALANCED_DEFINE_ERROR(HypothesisError, "hypothesis_violated");
BALANCED_DEFINE_ERROR(DegenerateError, "degenerate_family");
BALANCED_DEFINE_ERROR(UnboundedError, "unbounded_interval");
BALANCED_DEFINE_ERROR(BadSubsetsError, "bad_subsets");
BALANCED_DEFINE_ERROR(TooLargeError, "too_large");
BALANCED_DEFINE_ERROR(BadSpecError, "bad_spec");
BALANCED_DEFINE_ERROR(EmptyChoiceError, "empty_choice");
BALANCED_DEFINE_ERROR(OutOfRangeError, "out_of_range");
BALANCED_DEFINE_ERROR(BadPermutationError, "bad_permutation");

#undef BALANCED_DEFINE_ERROR

} // namespace balanced
