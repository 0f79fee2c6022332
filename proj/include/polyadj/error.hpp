#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace polyadj {

enum class ErrorCode {
    // input / contract violations
    InvalidArgument,
    ParseError,
    DimensionMismatch,
    DcpRowWeight,
    NPadjRowWeight,
    NPadjEmptyMatrix,
    DimensionCapExceeded,
    EmptyVertexList,
    InvalidCertificate,
    NotASubset,
    VertexNotInSet,
    EqualVertices,
    EmptyGraph,
    NoEdges,
    RowWeightNotThree,
    EmptyMatrix,
    CoordinateOutOfRange,
    TooFewPairs,
    UnequalSums,
    NotInStablePolytope,
    DuplicatePairs,
    DegeneratePair,
    EvenFamilyNoWitness,
    // defects: a proven statement failed on an instance
    InvariantViolation,
    MembershipViolation,
};

const char* error_name(ErrorCode code);

/// True for codes that signal a broken invariant rather than bad input.
bool is_defect(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    /// Offending row / pair / vertex index when the error names one.
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

}  // namespace polyadj
