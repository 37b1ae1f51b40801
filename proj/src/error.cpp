// Copyright 2026 The dupinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dupinv/error.hpp"

namespace dupinv {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroConductor: return "ZeroConductor";
    case ErrorCode::PromotionOverflow: return "PromotionOverflow";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DenominatorVanishesAtZero: return "DenominatorVanishesAtZero";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
    case ErrorCode::InfiniteOrderSuspected: return "InfiniteOrderSuspected";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::UnsupportedAutomorphism: return "UnsupportedAutomorphism";
    case ErrorCode::NonRationalCollapse: return "NonRationalCollapse";
    case ErrorCode::NonMonomialMatrix: return "NonMonomialMatrix";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace dupinv
