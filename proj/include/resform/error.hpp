// Copyright 2026 The resform Authors
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

#ifndef RESFORM_ERROR_HPP_
#define RESFORM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace resform {

enum class ErrorCode {
  kInvalidArgument,
  kReducibleModulus,
  kUnsupportedPrime,
  kEvenCharacteristic,
  kOddCharacteristic,
  kNonUnit,
  kRamifiedClass,
  kSyntaxError,
  kUnknownVariable,
  kNotIsolated,
  kNotFlat,
  kDegenerateFiber,
  kSingularBezoutian,
  kNonUnitScale,
  kRingMismatch,
  kOddProduct,
  kZeroCoefficient,
  kFieldMismatch,
  kCatalogMiss,
  kCalibrationAmbiguous,
  kCalibrationImpossible,
  kNonIntegral,
  kSingularForm,
  kOverflow,
  kInternal,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kUnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kOddCharacteristic: return "OddCharacteristic";
    case ErrorCode::kNonUnit: return "NonUnit";
    case ErrorCode::kRamifiedClass: return "RamifiedClass";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kNotIsolated: return "NotIsolated";
    case ErrorCode::kNotFlat: return "NotFlat";
    case ErrorCode::kDegenerateFiber: return "DegenerateFiber";
    case ErrorCode::kSingularBezoutian: return "SingularBezoutian";
    case ErrorCode::kNonUnitScale: return "NonUnitScale";
    case ErrorCode::kRingMismatch: return "RingMismatch";
    case ErrorCode::kOddProduct: return "OddProduct";
    case ErrorCode::kZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kCatalogMiss: return "CatalogMiss";
    case ErrorCode::kCalibrationAmbiguous: return "CalibrationAmbiguous";
    case ErrorCode::kCalibrationImpossible: return "CalibrationImpossible";
    case ErrorCode::kNonIntegral: return "NonIntegral";
    case ErrorCode::kSingularForm: return "SingularForm";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

// All library failures are reported through this type; code() is stable and
// is what the CLI serializes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool ok, ErrorCode code, const std::string& detail) {
  if (!ok) fail(code, detail);
}

}  // namespace resform

#endif  // RESFORM_ERROR_HPP_
