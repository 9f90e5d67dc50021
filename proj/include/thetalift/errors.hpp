#pragma once

#include <stdexcept>
#include <string>

namespace thetalift {

// All evaluation failures derive from this; kind() is the stable name the
// CLI prints on stderr.
class ThetaError : public std::runtime_error {
public:
    ThetaError(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define THETALIFT_ERROR(Name)                                        \
    class Name : public ThetaError {                                 \
    public:                                                          \
        explicit Name(const std::string& msg) : ThetaError(#Name, msg) {} \
    }

THETALIFT_ERROR(NonConvergent);
THETALIFT_ERROR(RadiusExceeded);
THETALIFT_ERROR(PoleError);
THETALIFT_ERROR(SingularMatrix);
THETALIFT_ERROR(ZeroPoint);
THETALIFT_ERROR(SingularEvaluation);
THETALIFT_ERROR(StabilizerViolation);
THETALIFT_ERROR(BadAuxiliary);
THETALIFT_ERROR(BadLevel);
THETALIFT_ERROR(PermutationFailure);
THETALIFT_ERROR(ParseError);
THETALIFT_ERROR(DomainError);

#undef THETALIFT_ERROR

}  // namespace thetalift
