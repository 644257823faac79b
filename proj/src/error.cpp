#include "korbit/error.hpp"

namespace korbit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DivisionByZeroExpression: return "DivisionByZeroExpression";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ComplexVariablePresent: return "ComplexVariablePresent";
    case ErrorCode::UnsupportedEntryClass: return "UnsupportedEntryClass";
    case ErrorCode::IrrationalEigenvalues: return "IrrationalEigenvalues";
    case ErrorCode::StratumDataMissing: return "StratumDataMissing";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::PointNotOnStratum: return "PointNotOnStratum";
    case ErrorCode::AnsatzTooLarge: return "AnsatzTooLarge";
    case ErrorCode::NoVerificationData: return "NoVerificationData";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::FlagConstructionFailed: return "FlagConstructionFailed";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NoConventionVerifies: return "NoConventionVerifies";
    case ErrorCode::NonConstantResidual: return "NonConstantResidual";
    case ErrorCode::NonScalarCasimirOperator: return "NonScalarCasimirOperator";
    case ErrorCode::BetaUnsolvable: return "BetaUnsolvable";
    case ErrorCode::UnderdeterminedLattice: return "UnderdeterminedLattice";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace korbit
