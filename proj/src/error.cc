// Copyright 2026 The privcap Authors
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

#include "privcap/error.h"

namespace privcap {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::NotTracePreserving:
            return "NotTracePreserving";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::KrausBlowup:
            return "KrausBlowup";
        case ErrorCode::BadDistribution:
            return "BadDistribution";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::ParamOutOfRange:
            return "ParamOutOfRange";
        case ErrorCode::DimensionTooLarge:
            return "DimensionTooLarge";
        case ErrorCode::NotAState:
            return "NotAState";
        case ErrorCode::NoSignChange:
            return "NoSignChange";
        case ErrorCode::NonMonotone:
            return "NonMonotone";
        case ErrorCode::UncertifiedPiece:
            return "UncertifiedPiece";
        case ErrorCode::DecompositionMismatch:
            return "DecompositionMismatch";
        case ErrorCode::TooFewPoints:
            return "TooFewPoints";
        case ErrorCode::UnsortedInput:
            return "UnsortedInput";
        case ErrorCode::OutOfRange:
            return "OutOfRange";
        case ErrorCode::HeuristicRefused:
            return "HeuristicRefused";
        case ErrorCode::BadSpec:
            return "BadSpec";
    }
    return "Unknown";
}

}  // namespace privcap
