#pragma once

#include <stdexcept>
#include <string>

namespace dehnkit {

// Input errors map to CLI exit code 2, computational guards to 3.
enum class ErrorCategory { Input, Compute, Contract };

enum class ErrorKind {
    MalformedInput,
    FieldMismatch,
    DivisionByZero,
    SingularMatrix,
    SingularBlock,
    RelationViolation,
    PreconditionFailed,
    ConstraintViolation,
    UnknownTemplate,
    CapExceeded,
    ScenarioMismatch,
    UntypedInput,
    NonGenericPair,
    OrderMismatch,
    ZeroOmega2,
    DegenerateEigen,
    Irreducible,
    StructureViolation,
    DegreeCap,
};

const char* kind_name(ErrorKind k);
ErrorCategory kind_category(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    ErrorCategory category() const { return kind_category(kind_); }
    const char* name() const { return kind_name(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace dehnkit
