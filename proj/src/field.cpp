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

#include "listdec/field.hpp"

#include <vector>

namespace listdec {
namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t(1) << 31;

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// True iff a generates F_p^*: a^((p-1)/q) != 1 for every prime q | p-1.
bool generates(std::uint32_t p, FieldElem a,
               const std::vector<std::uint64_t>& factors) {
  if (a == 0) return false;
  if (p == 2) return a == 1;
  for (std::uint64_t q : factors) {
    if (pow_mod(a, (p - 1) / q, p) == 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldElem find_generator(std::uint32_t p) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  auto factors = distinct_prime_factors(p - 1);
  for (FieldElem g = 2; g < p; ++g) {
    if (generates(p, g, factors)) return g;
  }
  fail(Errc::NotPrime, "no generator found for " + std::to_string(p));
}

FieldSpec::FieldSpec(std::uint32_t p, FieldElem gamma) : p_(p), gamma_(gamma) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (std::uint64_t(p) > kMaxPrime) {
    fail(Errc::BadParameter, "p exceeds the supported range 2^31");
  }
  if (gamma == 0 || gamma >= p) {
    fail(Errc::BadParameter, "gamma must lie in [1, p)");
  }
  auto factors = p == 2 ? std::vector<std::uint64_t>{}
                        : distinct_prime_factors(std::uint64_t(p) - 1);
  if (!generates(p, gamma, factors)) {
    fail(Errc::BadParameter, "gamma = " + std::to_string(gamma) +
                                 " does not generate F_" + std::to_string(p) +
                                 "^*");
  }
}

FieldElem FieldSpec::pow(FieldElem a, std::uint64_t e) const {
  return FieldElem(pow_mod(a, e, p_));
}

FieldElem FieldSpec::inv(FieldElem a) const {
  if (a == 0) fail(Errc::InversionOfZero, "0 has no multiplicative inverse");
  return pow(a, std::uint64_t(p_) - 2);
}

}  // namespace listdec
