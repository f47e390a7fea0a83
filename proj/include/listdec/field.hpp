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

// A field element is a residue in [0, p). All arithmetic goes through a
// FieldSpec; with p <= 2^31 every intermediate product fits in 64 bits.
using FieldElem = std::uint32_t;

bool is_prime(std::uint64_t n);

// Smallest generator of F_p^* (returns 1 for p = 2). Throws NotPrime.
FieldElem find_generator(std::uint32_t p);

// Prime field F_p together with a designated generator gamma of F_p^*.
// Construction validates both properties, so downstream code can rely on
// gamma having multiplicative order exactly p - 1.
class FieldSpec {
 public:
  FieldSpec(std::uint32_t p, FieldElem gamma);

  static FieldSpec with_smallest_generator(std::uint32_t p) {
    return FieldSpec(p, find_generator(p));
  }

  std::uint32_t p() const { return p_; }
  FieldElem gamma() const { return gamma_; }

  FieldElem add(FieldElem a, FieldElem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return FieldElem(s >= p_ ? s - p_ : s);
  }
  FieldElem sub(FieldElem a, FieldElem b) const {
    return a >= b ? a - b : FieldElem(a + p_ - b);
  }
  FieldElem neg(FieldElem a) const { return a == 0 ? 0 : p_ - a; }
  FieldElem mul(FieldElem a, FieldElem b) const {
    return FieldElem(std::uint64_t(a) * b % p_);
  }
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  // Multiplicative inverse; throws InversionOfZero on a == 0.
  FieldElem inv(FieldElem a) const;

  // Canonical residue of an arbitrary signed integer.
  FieldElem from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += p_;
    return FieldElem(r);
  }

  bool operator==(const FieldSpec& other) const = default;

 private:
  std::uint32_t p_;
  FieldElem gamma_;
};

}  // namespace listdec
