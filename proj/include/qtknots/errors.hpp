#pragma once

#include <stdexcept>
#include <string>

namespace qtknots {

// Base for every error the library raises. The name() string is stable and
// used by the CLI in JSON error reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* name() const noexcept { return "Error"; }
};

#define QTKNOTS_ERROR(Cls)                                            \
    class Cls : public Error {                                        \
    public:                                                           \
        using Error::Error;                                           \
        const char* name() const noexcept override { return #Cls; }   \
    }

QTKNOTS_ERROR(DivisionByZero);
QTKNOTS_ERROR(NotPolynomial);
QTKNOTS_ERROR(ZeroFactor);
QTKNOTS_ERROR(PoleAtPoint);
QTKNOTS_ERROR(CellOutsideDiagram);
QTKNOTS_ERROR(SizeMismatch);
QTKNOTS_ERROR(IndexOutOfRange);
QTKNOTS_ERROR(DegreeCapExceeded);
QTKNOTS_ERROR(DegreeMismatch);
QTKNOTS_ERROR(SingularSystem);
QTKNOTS_ERROR(HatViolation);
QTKNOTS_ERROR(NotCoprime);
QTKNOTS_ERROR(ParseError);

#undef QTKNOTS_ERROR

}  // namespace qtknots
