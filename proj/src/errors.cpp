#include "dehnkit/errors.hpp"

namespace dehnkit {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::SingularBlock: return "SingularBlock";
        case ErrorKind::RelationViolation: return "RelationViolation";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::ConstraintViolation: return "ConstraintViolation";
        case ErrorKind::UnknownTemplate: return "UnknownTemplate";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::ScenarioMismatch: return "ScenarioMismatch";
        case ErrorKind::UntypedInput: return "UntypedInput";
        case ErrorKind::NonGenericPair: return "NonGenericPair";
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::ZeroOmega2: return "ZeroOmega2";
        case ErrorKind::DegenerateEigen: return "DegenerateEigen";
        case ErrorKind::Irreducible: return "Irreducible";
        case ErrorKind::StructureViolation: return "StructureViolation";
        case ErrorKind::DegreeCap: return "DegreeCap";
    }
    return "Unknown";
}

ErrorCategory kind_category(ErrorKind k) {
    switch (k) {
        case ErrorKind::MalformedInput:
        case ErrorKind::FieldMismatch:
        case ErrorKind::RelationViolation:
        case ErrorKind::PreconditionFailed:
        case ErrorKind::ConstraintViolation:
        case ErrorKind::UnknownTemplate:
        case ErrorKind::UntypedInput:
        case ErrorKind::NonGenericPair:
        case ErrorKind::OrderMismatch:
        case ErrorKind::ZeroOmega2:
        case ErrorKind::DegenerateEigen:
        case ErrorKind::Irreducible:
        case ErrorKind::DegreeCap:
        case ErrorKind::SingularMatrix:
        case ErrorKind::SingularBlock:
        case ErrorKind::DivisionByZero:
            return ErrorCategory::Input;
        case ErrorKind::CapExceeded:
        case ErrorKind::ScenarioMismatch:
            return ErrorCategory::Compute;
        case ErrorKind::StructureViolation:
            return ErrorCategory::Contract;
    }
    return ErrorCategory::Compute;
}

}  // namespace dehnkit
