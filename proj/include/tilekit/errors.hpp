#pragma once

#include <stdexcept>
#include <string>

namespace tilekit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-layer failures (bad JSON, bad rational literals, bad flags).
struct ParseError : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct NotConvex : Error {
    using Error::Error;
};

struct WrongArity : Error {
    using Error::Error;
};

struct DegenerateAngle : Error {
    using Error::Error;
};

struct InfeasibleConstraints : Error {
    using Error::Error;
};

struct ParamOutOfRange : Error {
    using Error::Error;
};

struct VertexOutsideRegion : Error {
    using Error::Error;
};

struct ArrangementOverflow : Error {
    using Error::Error;
};

struct WindowTooSmall : Error {
    using Error::Error;
};

struct MarginViolation : Error {
    using Error::Error;
};

struct ChainingFailure : Error {
    using Error::Error;
};

}  // namespace tilekit
