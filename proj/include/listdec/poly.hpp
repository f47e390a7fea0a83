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

#include <cstddef>
#include <vector>

#include "listdec/field.hpp"

namespace listdec {

// Coefficient vector (a_0, ..., a_{k-1}) of a message polynomial; a_i is the
// coefficient of X^i. Length is fixed by the code dimension k.
using CoeffVec = std::vector<FieldElem>;

// Dense univariate polynomial over F_p. Storage is normalized: the last
// stored coefficient is nonzero, and the zero polynomial stores nothing.
// degree() returns -1 for the zero polynomial as a stand-in for -infinity.
class Poly {
 public:
  explicit Poly(const FieldSpec& field) : field_(field) {}
  Poly(const FieldSpec& field, std::vector<FieldElem> coeffs);

  static Poly zero(const FieldSpec& field) { return Poly(field); }
  static Poly constant(const FieldSpec& field, FieldElem c);
  static Poly monomial(const FieldSpec& field, FieldElem c, std::size_t deg);
  // X - alpha.
  static Poly linear_root(const FieldSpec& field, FieldElem alpha);

  const FieldSpec& field() const { return field_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return int(coeffs_.size()) - 1; }
  FieldElem coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  FieldElem leading_coeff() const {
    return coeffs_.empty() ? 0 : coeffs_.back();
  }

  FieldElem eval(FieldElem x) const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator-() const;

  // c * f(X).
  Poly scaled(FieldElem c) const;
  // f(c X).
  Poly with_scaled_arg(FieldElem c) const;
  // f / leading coefficient; throws ZeroPolynomial on the zero input.
  Poly monic() const;

  struct DivMod;
  // Euclidean division; the divisor must be nonzero (ZeroPolynomial).
  DivMod divmod(const Poly& divisor) const;

  // Coefficient equality; comparing polynomials over different fields is a
  // caller bug and throws SpecMismatch.
  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

 private:
  void normalize();

  FieldSpec field_;
  std::vector<FieldElem> coeffs_;
};

struct Poly::DivMod {
  Poly quot;
  Poly rem;
};

// Binomial coefficient C(n, k) mod p via Lucas' theorem: the product of
// digit-wise binomials in base p.
FieldElem binom_mod(std::uint64_t n, std::uint64_t k, const FieldSpec& field);

// i-th Hasse derivative f^(i) = sum_{t >= i} C(t, i) a_t X^{t-i}.
Poly hasse_derivative(const Poly& f, unsigned i);

// Multiplicity of alpha as a root of f, by repeated division by (X - alpha).
// Throws ZeroPolynomial on the zero input (its multiplicity is unbounded).
unsigned root_multiplicity(const Poly& f, FieldElem alpha);

// Same value computed as the least i with f^(i)(alpha) != 0. Kept as an
// independent route; the two implementations are cross-checked in tests.
unsigned root_multiplicity_by_hasse(const Poly& f, FieldElem alpha);

// Sum of root multiplicities over all of F_p. At most deg f for nonzero f.
unsigned total_roots_with_multiplicity(const Poly& f);

// CoeffVec <-> Poly. The vector form always has length k; converting a
// polynomial of degree >= k throws DegreeTooHigh.
Poly poly_from_coeff_vec(const FieldSpec& field, const CoeffVec& v);
CoeffVec coeff_vec_from_poly(const Poly& f, std::size_t k);

}  // namespace listdec
