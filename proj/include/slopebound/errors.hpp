#pragma once

#include <stdexcept>
#include <string>

namespace slopebound {

enum class ErrorKind {
    HypothesisViolated,
    ConstructionFailed,
    DanglingEndpoint,
    DuplicateId,
    RegionMismatch,
    BoundaryParallelArc,
    MalformedRibbon,
    FieldMismatch,
    SingularMatrix,
    NotSL2,
    NotInStabilizer,
    DegenerateFraming,
    DegenerateNorm,
    NotCoprime,
    CapExceeded,
    Usage,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

} // namespace slopebound
