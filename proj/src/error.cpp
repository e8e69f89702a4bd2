#include "cobalt/error.hpp"

namespace cobalt {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::NonzeroConstantInner: return "NonzeroConstantInner";
    case ErrorCode::BadLeadingCoefficient: return "BadLeadingCoefficient";
    case ErrorCode::InfiniteComponent: return "InfiniteComponent";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::PartitionOutOfBox: return "PartitionOutOfBox";
    case ErrorCode::IllFormed: return "IllFormed";
    case ErrorCode::MissingBeta: return "MissingBeta";
    case ErrorCode::NotQAlgebra: return "NotQAlgebra";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::WindowEmpty: return "WindowEmpty";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::AxiomsFail: return "AxiomsFail";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace cobalt
