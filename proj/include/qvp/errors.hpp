#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qvp/matrix.hpp"

namespace qvp {

enum class ErrorCode {
    // invalid input
    NonSquare,
    NegativeEntry,
    AxiomViolation,
    SizeMismatch,
    NotReflexive,
    NotTransitive,
    ImproperPhi,
    EmptySequence,
    StartOutsideDomain,
    UnknownPoint,
    InvalidLabel,
    InvalidArgument,
    ParseError,
    VersionUnsupported,
    // theorem hypotheses not met (legitimate mathematical findings)
    AuditMissing,
    HypothesisViolated,
    InfeasibleMap,
    NotT1,
    NotRightKCauchy,
    PrefixExhausted,
    PreconditionNotMet,
    // internal consistency; never expected on valid input
    CertificateCheckFailed,
    ConsistencyViolation,
};

std::string_view to_string(ErrorCode code);

enum class ErrorCategory { InvalidInput, HypothesisFinding, Internal };
ErrorCategory category(ErrorCode code);

/// Base exception of the library. `witness` lists the points that exhibit
/// the failure (a violating pair, triple, or start point), in the order the
/// defining condition names them.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::vector<PointId> witness = {})
        : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}

    ErrorCode code() const { return code_; }
    const std::vector<PointId>& witness() const { return witness_; }

private:
    ErrorCode code_;
    std::vector<PointId> witness_;
};

}  // namespace qvp
