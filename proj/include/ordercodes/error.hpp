#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordercodes {

enum class ErrorCode {
    NotPrime,
    Reducible,
    TooLarge,
    DivisionByZero,
    DimensionMismatch,
    Parse,
    NotWellOrdered,
    NotGroebner,
    WeightCollision,
    WrongTopShape,
    DependentWeights,
    LengthMismatch,
    WindowExhausted,
    WindowMismatch,
    NeedSyndrome,
    NoMajority,
    RankDeficient,
    CardinalityMismatch,
    ZeroDenominator,
    DecodeFailure,
    NotDivisible,
};

constexpr std::string_view to_string(ErrorCode c) noexcept {
    switch (c) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::Reducible: return "Reducible";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::NotWellOrdered: return "NotWellOrdered";
        case ErrorCode::NotGroebner: return "NotGroebner";
        case ErrorCode::WeightCollision: return "WeightCollision";
        case ErrorCode::WrongTopShape: return "WrongTopShape";
        case ErrorCode::DependentWeights: return "DependentWeights";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::WindowExhausted: return "WindowExhausted";
        case ErrorCode::WindowMismatch: return "WindowMismatch";
        case ErrorCode::NeedSyndrome: return "NeedSyndrome";
        case ErrorCode::NoMajority: return "NoMajority";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::CardinalityMismatch: return "CardinalityMismatch";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::DecodeFailure: return "DecodeFailure";
        case ErrorCode::NotDivisible: return "NotDivisible";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// The text without the code prefix.
    const std::string& message() const noexcept { return message_; }

   private:
    ErrorCode code_;
    std::string message_;
};

}  // namespace ordercodes
