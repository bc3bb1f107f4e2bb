/*
   Copyright 2026 The bpick Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BPICK_ERRORS_HPP
#define BPICK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bpick {

enum class ErrorCode {
    Parse,
    InvalidProblem,
    SingularMoebius,
    PoleAtPoint,
    NotASimplePole,
    NotPSD,
    SingularBlock,
    ConstantInput,
    DerivativeZero,
    NonRealValue,
    AmbiguousPole,
    NonPositiveWeight,
    AlphaCollision,
    ZeroFunction,
    BadFirstWeight,
    NotPositiveDefinite,
    InternalVerificationFailure,
    ZeroValue,
    TauCollision,
    SigmaCollision,
    DimensionMismatch,
};

inline const char* to_string(ErrorCode c)
{
    switch (c) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidProblem: return "InvalidProblem";
    case ErrorCode::SingularMoebius: return "SingularMoebius";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::NotASimplePole: return "NotASimplePole";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::SingularBlock: return "SingularBlock";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::DerivativeZero: return "DerivativeZero";
    case ErrorCode::NonRealValue: return "NonRealValue";
    case ErrorCode::AmbiguousPole: return "AmbiguousPole";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::AlphaCollision: return "AlphaCollision";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::BadFirstWeight: return "BadFirstWeight";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::InternalVerificationFailure: return "InternalVerificationFailure";
    case ErrorCode::ZeroValue: return "ZeroValue";
    case ErrorCode::TauCollision: return "TauCollision";
    case ErrorCode::SigmaCollision: return "SigmaCollision";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    }
    return "Unknown";
}

/// The single exception type thrown by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bpick

#endif  // BPICK_ERRORS_HPP
