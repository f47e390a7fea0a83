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

#include "listdec/poly.hpp"

#include <algorithm>

namespace listdec {
namespace {

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) {
    fail(Errc::SpecMismatch, "operands live over different fields");
  }
}

}  // namespace

Poly::Poly(const FieldSpec& field, std::vector<FieldElem> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (FieldElem c : coeffs_) {
    if (c >= field_.p()) {
      fail(Errc::BadParameter, "coefficient out of range [0, p)");
    }
  }
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const FieldSpec& field, FieldElem c) {
  return Poly(field, {c});
}

Poly Poly::monomial(const FieldSpec& field, FieldElem c, std::size_t deg) {
  std::vector<FieldElem> v(deg + 1, 0);
  v[deg] = c;
  return Poly(field, std::move(v));
}

Poly Poly::linear_root(const FieldSpec& field, FieldElem alpha) {
  return Poly(field, {field.neg(alpha), 1});
}

FieldElem Poly::eval(FieldElem x) const {
  FieldElem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, x), *it);
  }
  return acc;
}

Poly Poly::operator+(const Poly& other) const {
  require_same_field(field_, other.field_);
  std::vector<FieldElem> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = field_.add(coeff(i), other.coeff(i));
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& other) const {
  require_same_field(field_, other.field_);
  std::vector<FieldElem> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = field_.sub(coeff(i), other.coeff(i));
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
  require_same_field(field_, other.field_);
  if (is_zero() || other.is_zero()) return Poly(field_);
  std::vector<FieldElem> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] =
          field_.add(out[i + j], field_.mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator-() const { return scaled(field_.neg(1)); }

Poly Poly::scaled(FieldElem c) const {
  std::vector<FieldElem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = field_.mul(coeffs_[i], c);
  }
  return Poly(field_, std::move(out));
}

Poly Poly::with_scaled_arg(FieldElem c) const {
  std::vector<FieldElem> out(coeffs_.size());
  FieldElem power = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = field_.mul(coeffs_[i], power);
    power = field_.mul(power, c);
  }
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "zero polynomial has no monic form");
  return scaled(field_.inv(leading_coeff()));
}

Poly::DivMod Poly::divmod(const Poly& divisor) const {
  require_same_field(field_, divisor.field_);
  if (divisor.is_zero()) {
    fail(Errc::ZeroPolynomial, "division by the zero polynomial");
  }
  if (degree() < divisor.degree()) {
    return {Poly(field_), *this};
  }
  std::vector<FieldElem> rem = coeffs_;
  std::vector<FieldElem> quot(degree() - divisor.degree() + 1, 0);
  FieldElem lead_inv = field_.inv(divisor.leading_coeff());
  for (int d = degree(); d >= divisor.degree(); --d) {
    FieldElem c = rem[d];
    if (c == 0) continue;
    FieldElem q = field_.mul(c, lead_inv);
    std::size_t shift = d - divisor.degree();
    quot[shift] = q;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) {
      rem[shift + i] =
          field_.sub(rem[shift + i], field_.mul(q, divisor.coeffs_[i]));
    }
  }
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

bool Poly::operator==(const Poly& other) const {
  require_same_field(field_, other.field_);
  return coeffs_ == other.coeffs_;
}

FieldElem binom_mod(std::uint64_t n, std::uint64_t k, const FieldSpec& field) {
  if (k > n) return 0;
  std::uint32_t p = field.p();
  FieldElem result = 1;
  while (n > 0 || k > 0) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) mod p with nd < p: every factor in the falling product is
    // invertible, so the plain multiplicative formula applies.
    kd = std::min(kd, nd - kd);
    FieldElem num = 1, den = 1;
    for (std::uint64_t t = 1; t <= kd; ++t) {
      num = field.mul(num, FieldElem((nd - kd + t) % p));
      den = field.mul(den, FieldElem(t % p));
    }
    result = field.mul(result, field.mul(num, field.inv(den)));
    n /= p;
    k /= p;
  }
  return result;
}

Poly hasse_derivative(const Poly& f, unsigned i) {
  const FieldSpec& field = f.field();
  if (i == 0) return f;
  if (f.degree() < int(i)) return Poly(field);
  std::vector<FieldElem> out(f.coeffs().size() - i);
  for (std::size_t t = i; t < f.coeffs().size(); ++t) {
    out[t - i] = field.mul(binom_mod(t, i, field), f.coeffs()[t]);
  }
  return Poly(field, std::move(out));
}

unsigned root_multiplicity(const Poly& f, FieldElem alpha) {
  if (f.is_zero()) {
    fail(Errc::ZeroPolynomial, "root multiplicity of the zero polynomial");
  }
  Poly factor = Poly::linear_root(f.field(), alpha);
  Poly current = f;
  unsigned mult = 0;
  while (true) {
    auto [quot, rem] = current.divmod(factor);
    if (!rem.is_zero()) return mult;
    current = std::move(quot);
    ++mult;
  }
}

unsigned root_multiplicity_by_hasse(const Poly& f, FieldElem alpha) {
  if (f.is_zero()) {
    fail(Errc::ZeroPolynomial, "root multiplicity of the zero polynomial");
  }
  // Terminates: the deg(f)-th Hasse derivative is the nonzero leading
  // coefficient.
  for (unsigned i = 0;; ++i) {
    if (hasse_derivative(f, i).eval(alpha) != 0) return i;
  }
}

unsigned total_roots_with_multiplicity(const Poly& f) {
  if (f.is_zero()) {
    fail(Errc::ZeroPolynomial, "root count of the zero polynomial");
  }
  unsigned total = 0;
  for (std::uint64_t x = 0; x < f.field().p(); ++x) {
    if (f.eval(FieldElem(x)) != 0) continue;
    total += root_multiplicity(f, FieldElem(x));
    if (int(total) >= f.degree()) break;
  }
  return total;
}

Poly poly_from_coeff_vec(const FieldSpec& field, const CoeffVec& v) {
  return Poly(field, v);
}

CoeffVec coeff_vec_from_poly(const Poly& f, std::size_t k) {
  if (f.degree() >= int(k)) {
    fail(Errc::DegreeTooHigh, "degree " + std::to_string(f.degree()) +
                                  " does not fit in " + std::to_string(k) +
                                  " coefficients");
  }
  CoeffVec v(k, 0);
  std::copy(f.coeffs().begin(), f.coeffs().end(), v.begin());
  return v;
}

}  // namespace listdec
