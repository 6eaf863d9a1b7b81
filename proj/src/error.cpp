// Copyright 2026 The morita-forms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "morita/error.hpp"

namespace morita {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::SingularGeneratorImage: return "SingularGeneratorImage";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NonCommutingActions: return "NonCommutingActions";
    case ErrorCode::SplitIncomplete: return "SplitIncomplete";
    case ErrorCode::NotBlockHomogeneous: return "NotBlockHomogeneous";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PipelineError: return "PipelineError";
  }
  return "Unknown";
}

}  // namespace morita
