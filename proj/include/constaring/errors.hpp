#pragma once

#include <stdexcept>
#include <string>

namespace constaring {

/// Base class for all library errors. Every contract violation below derives
/// from this, so callers can catch one type at API boundaries (the CLI maps
/// any Error to exit code 2). kind() names the violation for diagnostics.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define CONSTARING_ERROR(NAME)                                        \
    struct NAME : Error {                                             \
        using Error::Error;                                           \
        const char* kind() const noexcept override { return #NAME; }  \
    }

CONSTARING_ERROR(NonPrime);
CONSTARING_ERROR(NoCubeRoot);
CONSTARING_ERROR(NotResidue);
CONSTARING_ERROR(NotAUnit);
CONSTARING_ERROR(DivisionByZero);
CONSTARING_ERROR(RepeatedRoots);
CONSTARING_ERROR(NotADivisor);
CONSTARING_ERROR(NotIdempotent);
CONSTARING_ERROR(LengthMismatch);
CONSTARING_ERROR(NotCoprime);
CONSTARING_ERROR(TooLarge);
CONSTARING_ERROR(ZeroConstantTerm);
CONSTARING_ERROR(DegreeOverflow);
CONSTARING_ERROR(BadLabel);
CONSTARING_ERROR(BadTheta);

#undef CONSTARING_ERROR

}  // namespace constaring
