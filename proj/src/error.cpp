#include "polyadj/error.hpp"

namespace polyadj {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DcpRowWeight: return "DcpRowWeight";
        case ErrorCode::NPadjRowWeight: return "NPadjRowWeight";
        case ErrorCode::NPadjEmptyMatrix: return "NPadjEmptyMatrix";
        case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
        case ErrorCode::EmptyVertexList: return "EmptyVertexList";
        case ErrorCode::InvalidCertificate: return "InvalidCertificate";
        case ErrorCode::NotASubset: return "NotASubset";
        case ErrorCode::VertexNotInSet: return "VertexNotInSet";
        case ErrorCode::EqualVertices: return "EqualVertices";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::NoEdges: return "NoEdges";
        case ErrorCode::RowWeightNotThree: return "RowWeightNotThree";
        case ErrorCode::EmptyMatrix: return "EmptyMatrix";
        case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
        case ErrorCode::TooFewPairs: return "TooFewPairs";
        case ErrorCode::UnequalSums: return "UnequalSums";
        case ErrorCode::NotInStablePolytope: return "NotInStablePolytope";
        case ErrorCode::DuplicatePairs: return "DuplicatePairs";
        case ErrorCode::DegeneratePair: return "DegeneratePair";
        case ErrorCode::EvenFamilyNoWitness: return "EvenFamilyNoWitness";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::MembershipViolation: return "MembershipViolation";
    }
    return "Unknown";
}

bool is_defect(ErrorCode code) {
    return code == ErrorCode::InvariantViolation || code == ErrorCode::MembershipViolation;
}

Error::Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), index_(index) {}

}  // namespace polyadj
