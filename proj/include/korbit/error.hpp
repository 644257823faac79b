#pragma once

#include <stdexcept>
#include <string>

namespace korbit {

// Error taxonomy shared by all modules. Codes are stable identifiers that
// surface verbatim in CLI reports and exceptions.
enum class ErrorCode {
    DivisionByZeroExpression,
    UnknownVariable,
    ComplexVariablePresent,
    UnsupportedEntryClass,
    IrrationalEigenvalues,
    StratumDataMissing,
    DependentGenerators,
    SizeGuardExceeded,
    PointNotOnStratum,
    AnsatzTooLarge,
    NoVerificationData,
    NotASubalgebra,
    WrongDimension,
    NotIsotropic,
    NotSolvable,
    FlagConstructionFailed,
    VerificationFailed,
    NoConventionVerifies,
    NonConstantResidual,
    NonScalarCasimirOperator,
    BetaUnsolvable,
    UnderdeterminedLattice,
    ParseError,
    SemanticError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace korbit
