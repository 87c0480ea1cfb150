#include "qvp/errors.hpp"

namespace qvp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::NegativeEntry: return "NegativeEntry";
        case ErrorCode::AxiomViolation: return "AxiomViolation";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NotReflexive: return "NotReflexive";
        case ErrorCode::NotTransitive: return "NotTransitive";
        case ErrorCode::ImproperPhi: return "ImproperPhi";
        case ErrorCode::EmptySequence: return "EmptySequence";
        case ErrorCode::StartOutsideDomain: return "StartOutsideDomain";
        case ErrorCode::UnknownPoint: return "UnknownPoint";
        case ErrorCode::InvalidLabel: return "InvalidLabel";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::VersionUnsupported: return "VersionUnsupported";
        case ErrorCode::AuditMissing: return "AuditMissing";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::InfeasibleMap: return "InfeasibleMap";
        case ErrorCode::NotT1: return "NotT1";
        case ErrorCode::NotRightKCauchy: return "NotRightKCauchy";
        case ErrorCode::PrefixExhausted: return "PrefixExhausted";
        case ErrorCode::PreconditionNotMet: return "PreconditionNotMet";
        case ErrorCode::CertificateCheckFailed: return "CertificateCheckFailed";
        case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    }
    return "Unknown";
}

ErrorCategory category(ErrorCode code) {
    switch (code) {
        case ErrorCode::AuditMissing:
        case ErrorCode::HypothesisViolated:
        case ErrorCode::InfeasibleMap:
        case ErrorCode::NotT1:
        case ErrorCode::NotRightKCauchy:
        case ErrorCode::PrefixExhausted:
        case ErrorCode::PreconditionNotMet:
            return ErrorCategory::HypothesisFinding;
        case ErrorCode::CertificateCheckFailed:
        case ErrorCode::ConsistencyViolation:
            return ErrorCategory::Internal;
        default:
            return ErrorCategory::InvalidInput;
    }
}

}  // namespace qvp
