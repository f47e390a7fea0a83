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

#include <cstdint>

#include "listdec/errors.hpp"

namespace listdec {

// splitmix64. The exact constants are part of the external contract: a
// report produced with a given seed must be reproducible from any language
// that implements the same stream (see README).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Draw from [0, bound) by plain modulo; chosen over rejection sampling so
  // the stream stays trivial to reimplement. bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) fail(Errc::BadParameter, "rng bound must be positive");
    return next() % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace listdec
