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

#include <cstdint>
#include <vector>

#include "listdec/poly.hpp"
#include "listdec/rational.hpp"
#include "test_util.hpp"

using listdec::FieldElem;
using listdec::FieldSpec;
using listdec::Poly;
using listdec::Rat;
using listdec::SplitMix64;

namespace {

// Order of a in F_p^* by repeated multiplication; the slow reference for the
// generator search.
unsigned order_brute(std::uint32_t p, FieldElem a) {
  FieldElem power = a;
  unsigned order = 1;
  while (power != 1) {
    power = FieldElem(std::uint64_t(power) * a % p);
    ++order;
  }
  return order;
}

FieldElem find_generator_brute(std::uint32_t p) {
  for (FieldElem g = 1; g < p; ++g) {
    if (order_brute(p, g) == p - 1) return g;
  }
  return 0;
}

// Reference Hasse derivative: expand f(X + Z) as a polynomial in Z with
// coefficients in F_p[X] and take the Z^i coefficient.
Poly hasse_by_expansion(const Poly& f, unsigned i) {
  const FieldSpec& field = f.field();
  std::vector<Poly> bivariate;  // index = Z-degree
  std::vector<Poly> power{Poly::constant(field, 1)};  // (X + Z)^t
  for (std::size_t t = 0; t < f.coeffs().size(); ++t) {
    if (t > 0) {
      std::vector<Poly> next(power.size() + 1, Poly(field));
      Poly x = Poly::monomial(field, 1, 1);
      for (std::size_t z = 0; z < power.size(); ++z) {
        next[z] = next[z] + power[z] * x;
        next[z + 1] = next[z + 1] + power[z];
      }
      power = std::move(next);
    }
    if (f.coeffs()[t] == 0) continue;
    if (bivariate.size() < power.size()) {
      bivariate.resize(power.size(), Poly(field));
    }
    for (std::size_t z = 0; z < power.size(); ++z) {
      bivariate[z] = bivariate[z] + power[z].scaled(f.coeffs()[t]);
    }
  }
  return i < bivariate.size() ? bivariate[i] : Poly(field);
}

}  // namespace

TEST_CASE("field arithmetic on hand-checked values") {
  FieldSpec f13(13, 2);
  CHECK(f13.mul(7, 8) == 4);
  CHECK(f13.inv(2) == 7);
  CHECK(f13.pow(2, 12) == 1);
  CHECK(f13.sub(3, 7) == 9);
  CHECK(f13.neg(0) == 0);
  CHECK(f13.from_int(-1) == 12);
  CHECK(f13.from_int(26) == 0);
  CHECK_ERRC(f13.inv(0), InversionOfZero);

  FieldSpec f5(5, 2);
  for (FieldElem x = 0; x < 5; ++x) {
    CHECK(f5.add(0, x) == x);
    CHECK(f5.add(x, f5.neg(x)) == 0);
    if (x != 0) CHECK(f5.mul(x, f5.inv(x)) == 1);
  }
}

TEST_CASE("primality testing") {
  CHECK(listdec::is_prime(2));
  CHECK(listdec::is_prime(3));
  CHECK(listdec::is_prime(13));
  CHECK(listdec::is_prime(2147483647));
  CHECK_FALSE(listdec::is_prime(0));
  CHECK_FALSE(listdec::is_prime(1));
  CHECK_FALSE(listdec::is_prime(4));
  CHECK_FALSE(listdec::is_prime(169));
}

TEST_CASE("generator search against the brute-force order oracle") {
  CHECK(listdec::find_generator(13) == 2);
  CHECK(listdec::find_generator(7) == 3);
  CHECK(listdec::find_generator(2) == 1);
  for (std::uint32_t p = 2; p <= 61; ++p) {
    if (!listdec::is_prime(p)) continue;
    CHECK(listdec::find_generator(p) == find_generator_brute(p));
  }
  CHECK_ERRC(listdec::find_generator(12), NotPrime);
  CHECK_ERRC(FieldSpec(12, 5), NotPrime);
  // 4 = 2^2 has order 6 < 12 in F_13.
  CHECK_ERRC(FieldSpec(13, 4), BadParameter);
  CHECK(FieldSpec(13, 6).gamma() == 6);
}

TEST_CASE("polynomial arithmetic basics") {
  FieldSpec f13(13, 2);
  Poly f(f13, {3, 2});  // 3 + 2X
  CHECK(f.eval(5) == 0);
  CHECK(f.degree() == 1);

  Poly zero(f13);
  CHECK(zero.degree() == -1);
  CHECK(zero.eval(7) == 0);
  CHECK(Poly(f13, {1, 2, 0, 0}).degree() == 1);

  FieldSpec f7(7, 3);
  CHECK(Poly::monomial(f7, 1, 3).eval(2) == 1);

  FieldSpec f2(2, 1);
  Poly one_plus_x(f2, {1, 1});
  CHECK(one_plus_x * one_plus_x == Poly(f2, {1, 0, 1}));

  SplitMix64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = testutil::random_poly(rng, f13, 9);
    Poly b = testutil::random_nonzero_poly(rng, f13, 5);
    auto [quot, rem] = a.divmod(b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());

    FieldElem c = FieldElem(rng.below(13));
    FieldElem x = FieldElem(rng.below(13));
    CHECK(a.with_scaled_arg(c).eval(x) == a.eval(f13.mul(c, x)));
  }
  CHECK_ERRC(Poly(f13).monic(), ZeroPolynomial);
  CHECK_ERRC(Poly(f13, {1}).divmod(Poly(f13)), ZeroPolynomial);
  CHECK_ERRC(Poly(f13, {1}) + Poly(f7, {1}), SpecMismatch);
}

TEST_CASE("coefficient vector round trips") {
  FieldSpec f13(13, 2);
  listdec::CoeffVec v{3, 0, 5};
  Poly f = listdec::poly_from_coeff_vec(f13, v);
  CHECK(f.degree() == 2);
  CHECK(listdec::coeff_vec_from_poly(f, 3) == v);
  CHECK(listdec::coeff_vec_from_poly(f, 5) ==
        listdec::CoeffVec{3, 0, 5, 0, 0});
  CHECK_ERRC(listdec::coeff_vec_from_poly(f, 2), DegreeTooHigh);
}

TEST_CASE("binomials mod p via Lucas against Pascal's triangle") {
  FieldSpec f7(7, 3);
  CHECK(listdec::binom_mod(5, 2, f7) == 3);  // 10 mod 7
  FieldSpec f13(13, 2);
  for (unsigned i = 1; i < 13; ++i) CHECK(listdec::binom_mod(13, i, f13) == 0);

  for (std::uint32_t p : {2u, 5u, 13u}) {
    FieldSpec field = FieldSpec::with_smallest_generator(p);
    std::vector<std::vector<FieldElem>> pascal(41);
    for (unsigned n = 0; n <= 40; ++n) {
      pascal[n].assign(n + 1, 1);
      for (unsigned k = 1; k < n; ++k) {
        pascal[n][k] = field.add(pascal[n - 1][k - 1], pascal[n - 1][k]);
      }
      for (unsigned k = 0; k <= n; ++k) {
        CHECK(listdec::binom_mod(n, k, field) == pascal[n][k]);
      }
    }
  }
}

TEST_CASE("Hasse derivative frozen values") {
  FieldSpec f13(13, 2);
  CHECK(listdec::hasse_derivative(Poly::monomial(f13, 1, 3), 2) ==
        Poly(f13, {0, 3}));
  FieldSpec f2(2, 1);
  CHECK(listdec::hasse_derivative(Poly::monomial(f2, 1, 2), 1).is_zero());
  FieldSpec f7(7, 3);
  CHECK(listdec::hasse_derivative(Poly(f7, {5, 1, 4}), 1) == Poly(f7, {1, 1}));
  CHECK(listdec::hasse_derivative(Poly(f7, {5, 1, 4}), 5).is_zero());
}

TEST_CASE("Hasse derivative equals the Taylor-shift expansion") {
  SplitMix64 rng(2);
  for (std::uint32_t p : {2u, 5u, 13u}) {
    FieldSpec field = FieldSpec::with_smallest_generator(p);
    for (int trial = 0; trial < 100; ++trial) {
      Poly f = testutil::random_poly(rng, field, 10);
      unsigned i = unsigned(rng.below(13));
      CHECK(listdec::hasse_derivative(f, i) == hasse_by_expansion(f, i));
    }
  }
}

TEST_CASE("root multiplicity by division and by derivatives") {
  FieldSpec f13(13, 2);
  Poly f = Poly::linear_root(f13, 3) * Poly::linear_root(f13, 3) *
           Poly::linear_root(f13, 5);
  CHECK(listdec::root_multiplicity(f, 3) == 2);
  CHECK(listdec::root_multiplicity(f, 5) == 1);
  CHECK(listdec::root_multiplicity(f, 7) == 0);

  FieldSpec f2(2, 1);
  CHECK(listdec::root_multiplicity(Poly::monomial(f2, 1, 4), 0) == 4);

  CHECK_ERRC(listdec::root_multiplicity(Poly(f13), 0), ZeroPolynomial);
  CHECK_ERRC(listdec::root_multiplicity_by_hasse(Poly(f13), 0),
             ZeroPolynomial);

  SplitMix64 rng(3);
  for (std::uint32_t p : {2u, 5u, 13u}) {
    FieldSpec field = FieldSpec::with_smallest_generator(p);
    for (int trial = 0; trial < 350; ++trial) {
      Poly g = testutil::random_nonzero_poly(rng, field, 8);
      FieldElem alpha = FieldElem(rng.below(p));
      CHECK(listdec::root_multiplicity(g, alpha) ==
            listdec::root_multiplicity_by_hasse(g, alpha));
    }
  }
}

TEST_CASE("total roots with multiplicity") {
  FieldSpec f5(5, 2);
  CHECK(listdec::total_roots_with_multiplicity(Poly(f5, {4, 0, 1})) == 2);
  Poly cubed = Poly::linear_root(f5, 1) * Poly::linear_root(f5, 1) *
               Poly::linear_root(f5, 1);
  CHECK(listdec::total_roots_with_multiplicity(cubed) == 3);

  FieldSpec f7(7, 3);
  Poly rootless(f7, {1, 0, 1});  // X^2 + 1
  for (FieldElem x = 0; x < 7; ++x) CHECK(rootless.eval(x) != 0);
  CHECK(listdec::total_roots_with_multiplicity(rootless) == 0);

  CHECK_ERRC(listdec::total_roots_with_multiplicity(Poly(f7)), ZeroPolynomial);

  SplitMix64 rng(4);
  FieldSpec f13(13, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Poly f = testutil::random_nonzero_poly(rng, f13, 9);
    CHECK(listdec::total_roots_with_multiplicity(f) <= unsigned(f.degree()));

    // A product of linear factors has exactly as many roots as factors.
    unsigned factors = 1 + unsigned(rng.below(6));
    Poly split = Poly::constant(f13, 1);
    for (unsigned i = 0; i < factors; ++i) {
      split = split * Poly::linear_root(f13, FieldElem(rng.below(13)));
    }
    CHECK(listdec::total_roots_with_multiplicity(split) == factors);
  }
}

TEST_CASE("exact rationals") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(3, 4) * Rat(2, 3) == Rat(1, 2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(Rat(-3, 2).floor() == -2);
  CHECK(Rat(3, 2).floor() == 1);
  CHECK(Rat(4, 2).floor() == 2);
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(0));
  CHECK(Rat(7, 3).str() == "7/3");
  CHECK(Rat(0, 5).str() == "0/1");

  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-2") == Rat(-2));
  CHECK_FALSE(Rat::parse("").has_value());
  CHECK_FALSE(Rat::parse("1/0").has_value());
  CHECK_FALSE(Rat::parse("a/b").has_value());
  CHECK_ERRC(Rat(1, 2) / Rat(0), BadParameter);
}

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  CHECK(rng.next() == 0xF88BB8A8724C81ECULL);

  SplitMix64 rng42(42);
  CHECK(rng42.next() == 0xBDD732262FEB6E95ULL);
  CHECK(rng42.next() == 0x28EFE333B266F103ULL);

  SplitMix64 draws(0);
  std::vector<std::uint64_t> first;
  for (int i = 0; i < 8; ++i) first.push_back(draws.below(13));
  CHECK(first == std::vector<std::uint64_t>{9, 0, 1, 12, 4, 3, 10, 8});
  CHECK_ERRC(draws.below(0), BadParameter);
}
