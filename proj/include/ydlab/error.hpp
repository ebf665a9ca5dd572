#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ydlab {

/// Error categories raised by the library. Each maps onto one failure mode of
/// an operation's contract; callers switch on `code()` rather than on text.
enum class Errc {
    DimensionMismatch,
    ShapeMismatch,
    ParseError,
    NotBijective,
    NotAGroup,
    BadCharacteristic,
    DegenerateIntegralSpace,
    KindMismatch,
    NotCommutative,
    IllDefinedCoaction,
    IllDefinedAction,
    RationalityFailure,
    ProjectivityUnverified,
    BraidingNotColinear,
    NotYD,
    NotLong,
    NotASubobject,
    Unsupported,
};

constexpr std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::NotBijective: return "NotBijective";
        case Errc::NotAGroup: return "NotAGroup";
        case Errc::BadCharacteristic: return "BadCharacteristic";
        case Errc::DegenerateIntegralSpace: return "DegenerateIntegralSpace";
        case Errc::KindMismatch: return "KindMismatch";
        case Errc::NotCommutative: return "NotCommutative";
        case Errc::IllDefinedCoaction: return "IllDefinedCoaction";
        case Errc::IllDefinedAction: return "IllDefinedAction";
        case Errc::RationalityFailure: return "RationalityFailure";
        case Errc::ProjectivityUnverified: return "ProjectivityUnverified";
        case Errc::BraidingNotColinear: return "BraidingNotColinear";
        case Errc::NotYD: return "NotYD";
        case Errc::NotLong: return "NotLong";
        case Errc::NotASubobject: return "NotASubobject";
        case Errc::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

    /// Input-side failures (malformed data) as opposed to failed mathematical checks.
    bool is_input_error() const noexcept {
        return code_ == Errc::ParseError || code_ == Errc::DimensionMismatch ||
               code_ == Errc::ShapeMismatch;
    }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, Errc code, const std::string& what) {
    if (!condition) fail(code, what);
}

}  // namespace ydlab
