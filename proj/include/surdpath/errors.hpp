#pragma once

#include <stdexcept>
#include <string>

namespace surdpath {

// Every failure mode in the library maps to one of these kinds, so tests
// and the CLI can dispatch on the cause rather than parse messages.
enum class Errc {
    NonPositiveDenominator,
    SquareRadicand,
    DivisibilityViolation,
    NonPositiveValue,
    Overflow,
    PreconditionViolated,
    StepBudgetExceeded,
    DepthCapExceeded,
    NotReduced,
    NotGreaterThanOne,
    RationalSquare,
    UnsupportedFormat,
    ParseError,
};

inline const char* errc_name(Errc e) {
    switch (e) {
        case Errc::NonPositiveDenominator: return "NonPositiveDenominator";
        case Errc::SquareRadicand: return "SquareRadicand";
        case Errc::DivisibilityViolation: return "DivisibilityViolation";
        case Errc::NonPositiveValue: return "NonPositiveValue";
        case Errc::Overflow: return "Overflow";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::StepBudgetExceeded: return "StepBudgetExceeded";
        case Errc::DepthCapExceeded: return "DepthCapExceeded";
        case Errc::NotReduced: return "NotReduced";
        case Errc::NotGreaterThanOne: return "NotGreaterThanOne";
        case Errc::RationalSquare: return "RationalSquare";
        case Errc::UnsupportedFormat: return "UnsupportedFormat";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class SurdError : public std::runtime_error {
public:
    SurdError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw SurdError(code, what);
}

}  // namespace surdpath
