#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cobalt {

enum class ErrorCode {
    NonUnitConstantTerm,
    NonzeroConstantInner,
    BadLeadingCoefficient,
    InfiniteComponent,
    BoundExceeded,
    PartitionOutOfBox,
    IllFormed,
    MissingBeta,
    NotQAlgebra,
    TruncationTooSmall,
    WindowEmpty,
    DegreeMismatch,
    AxiomsFail,
    SyntaxError,
    InhomogeneousRelation,
    InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace cobalt
