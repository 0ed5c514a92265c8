#ifndef GIESEKER_ERRORS_HPP
#define GIESEKER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gieseker {

enum class ErrorCode {
    // input-side problems (CLI exit code 1)
    SchemaError,
    ValueError,
    ModeMismatch,
    ZeroParameter,
    NotNormalized,
    LengthMismatch,
    DegenerateLeading,
    MissingTwistData,
    NotRepresentable,
    DegenerateDenominator,
    DimensionCapExceeded,
    ZeroDimensionVector,
    UnsupportedField,
    IdenticallyZero,
    RangeError,
    ShapeMismatch,
    // internal invariant violations (CLI exit code 2)
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

    // Internal errors indicate a broken invariant, everything else is bad input.
    bool is_input_error() const { return code_ != ErrorCode::Internal; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace gieseker

#endif
