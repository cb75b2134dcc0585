#include "slopebound/errors.hpp"

namespace slopebound {

const char* kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::RegionMismatch: return "RegionMismatch";
    case ErrorKind::BoundaryParallelArc: return "BoundaryParallelArc";
    case ErrorKind::MalformedRibbon: return "MalformedRibbon";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotSL2: return "NotSL2";
    case ErrorKind::NotInStabilizer: return "NotInStabilizer";
    case ErrorKind::DegenerateFraming: return "DegenerateFraming";
    case ErrorKind::DegenerateNorm: return "DegenerateNorm";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

} // namespace slopebound
