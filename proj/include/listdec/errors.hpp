// Copyright 2026 The listdec Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace listdec {

// Failure modes callers are expected to branch on.
enum class Errc {
  InversionOfZero,
  NotPrime,
  ZeroPolynomial,
  DegreeTooHigh,
  SpecMismatch,
  TooLong,
  ListExceedsFolding,
  InfeasibleEpsilon,
  EmptySet,
  InstanceTooLarge,
  NotProperSubset,
  ZeroMissing,
  NotDistinct,
  MatrixTooLarge,
  AllZero,
  PreconditionViolated,
  EmptySubset,
  BadM,
  VertexCountTooLarge,
  BadParameter,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InversionOfZero: return "InversionOfZero";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::TooLong: return "TooLong";
    case Errc::ListExceedsFolding: return "ListExceedsFolding";
    case Errc::InfeasibleEpsilon: return "InfeasibleEpsilon";
    case Errc::EmptySet: return "EmptySet";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::NotProperSubset: return "NotProperSubset";
    case Errc::ZeroMissing: return "ZeroMissing";
    case Errc::NotDistinct: return "NotDistinct";
    case Errc::MatrixTooLarge: return "MatrixTooLarge";
    case Errc::AllZero: return "AllZero";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::BadM: return "BadM";
    case Errc::VertexCountTooLarge: return "VertexCountTooLarge";
    case Errc::BadParameter: return "BadParameter";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace listdec
