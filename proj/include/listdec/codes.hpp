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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "listdec/poly.hpp"
#include "listdec/rational.hpp"

namespace listdec {

enum class Family { kFrs, kMult };

std::string family_name(Family family);

// Code parameters shared by both families.
//
//   kFrs:  block j is (f(alpha_j), f(gamma alpha_j), ..., f(gamma^{s-1} alpha_j))
//   kMult: block j is (f(alpha_j), f^(1)(alpha_j), ..., f^(s-1)(alpha_j))
//
// where f ranges over polynomials of degree < k and f^(i) is the i-th Hasse
// derivative. A codeword is a length-n word over the alphabet F_p^s.
struct CodeSpec {
  FieldSpec field;
  Family family;
  unsigned s = 1;
  unsigned n = 1;
  unsigned k = 1;
  std::vector<FieldElem> alphas;

  Rat rate() const { return Rat(k, std::int64_t(s) * n); }
};

struct Codeword {
  // n blocks of s symbols each.
  std::vector<std::vector<FieldElem>> blocks;
};

// Structural validation. Returns std::nullopt when the spec is well formed,
// otherwise a one-line description of the first violation found. For kFrs
// this includes the appropriateness scan: the s*n points gamma^i alpha_j must
// be pairwise distinct, and the first colliding pair is named in the message.
std::optional<std::string> validate_spec(const CodeSpec& spec);

// Points alpha_j = gamma^{s(j-1)}, which make {gamma^i alpha_j} pairwise
// distinct whenever s*n <= p-1. Throws TooLong when the field is too small.
std::vector<FieldElem> make_appropriate_alphas(const FieldSpec& field,
                                               unsigned s, unsigned n);

// The n points 0, 1, ..., n-1 for the derivative family. Throws TooLong when
// n > p.
std::vector<FieldElem> make_distinct_alphas(const FieldSpec& field, unsigned n);

// Evaluates one message. Throws DegreeTooHigh when deg f >= k.
Codeword encode(const CodeSpec& spec, const Poly& f);
// Same, from a coefficient vector of length exactly k.
Codeword encode_vec(const CodeSpec& spec, const CoeffVec& message);

// Number of blocks where the two words differ. Shapes must match
// (SpecMismatch).
unsigned hamming_distance(const Codeword& a, const Codeword& b);

// Average-radius list-decoding bound (L/(L+1)) (1 - sR/(s-L+1)) for list
// size L and folding s. Requires 1 <= L <= s (ListExceedsFolding).
Rat radius_bound(std::uint64_t list_size, std::uint64_t s, const Rat& rate);

// The list-size-L Singleton limit (L/(L+1))(1 - R); radius_bound approaches
// it from below as s grows.
Rat singleton_bound(std::uint64_t list_size, const Rat& rate);

// Smallest parameters that put the decoding radius above 1 - R - eps, plus
// three preset list sizes re-validated against the same inequality.
struct CorollarySetting {
  std::string name;
  std::int64_t list_size = 0;
  bool feasible = false;
  std::int64_t s_min = 0;  // meaningful only when feasible
  Rat rho;                 // radius_bound(list_size, s_min, rate)
};

struct CorollaryParams {
  std::int64_t list_size = 0;  // smallest L with eps L > 1 - R - eps
  std::int64_t s_min = 0;
  Rat rho;  // radius_bound(list_size, s_min, rate); strictly > 1 - R - eps
  CorollarySetting settings[3];  // L = floor((1-R)/eps), ceil((1-R)/eps),
                                 // ceil(1/eps)
};

// Requires 0 < eps < 1 - R (InfeasibleEpsilon) and 0 < R < 1 (BadParameter).
CorollaryParams corollary_params(const Rat& eps, const Rat& rate);

// JSON with fixed key order {family, p, gamma, s, n, k, alphas}. Parsing
// rejects unknown keys, missing keys, and out-of-range values with
// BadParameter (field-level validation may also raise NotPrime).
nlohmann::ordered_json spec_to_json(const CodeSpec& spec);
CodeSpec spec_from_json(const nlohmann::json& j);

nlohmann::ordered_json params_to_json(const CorollaryParams& params);

}  // namespace listdec
