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

#include "listdec/wronskian.hpp"

#include <stdexcept>
#include <utility>

namespace listdec {
namespace {

constexpr std::size_t kMaxDetSize = 8;

void require_square_input(const std::vector<Poly>& fs) {
  if (fs.empty()) fail(Errc::BadParameter, "need at least one polynomial");
}

Poly exact_div(const Poly& num, const Poly& den) {
  auto [quot, rem] = num.divmod(den);
  if (!rem.is_zero()) {
    throw std::logic_error("fraction-free elimination produced a remainder");
  }
  return quot;
}

void check_det_size(std::size_t size) {
  if (size == 0) fail(Errc::BadParameter, "determinant of an empty matrix");
  if (size > kMaxDetSize) {
    fail(Errc::MatrixTooLarge, "determinant capped at size " +
                                   std::to_string(kMaxDetSize) + ", got " +
                                   std::to_string(size));
  }
}

}  // namespace

PolyMatrix folded_wronskian(const std::vector<Poly>& fs, FieldElem gamma) {
  require_square_input(fs);
  const FieldSpec& field = fs.front().field();
  std::size_t r = fs.size();
  PolyMatrix w{r, {}};
  w.entries.reserve(r * r);
  FieldElem scale = 1;
  for (std::size_t u = 0; u < r; ++u) {
    for (std::size_t v = 0; v < r; ++v) {
      w.entries.push_back(fs[v].with_scaled_arg(scale));
    }
    scale = field.mul(scale, gamma);
  }
  return w;
}

PolyMatrix classical_wronskian(const std::vector<Poly>& fs) {
  require_square_input(fs);
  std::size_t r = fs.size();
  PolyMatrix w{r, {}};
  w.entries.reserve(r * r);
  for (std::size_t u = 0; u < r; ++u) {
    for (std::size_t v = 0; v < r; ++v) {
      w.entries.push_back(hasse_derivative(fs[v], unsigned(u)));
    }
  }
  return w;
}

Poly poly_det(const PolyMatrix& matrix) {
  check_det_size(matrix.size);
  const std::size_t r = matrix.size;
  const FieldSpec& field = matrix.entries.front().field();
  PolyMatrix a = matrix;
  bool negate = false;
  Poly previous_pivot = Poly::constant(field, 1);
  for (std::size_t step = 0; step + 1 < r; ++step) {
    if (a.at(step, step).is_zero()) {
      std::size_t swap_row = step + 1;
      while (swap_row < r && a.at(swap_row, step).is_zero()) ++swap_row;
      if (swap_row == r) return Poly(field);
      for (std::size_t col = 0; col < r; ++col) {
        std::swap(a.at(step, col), a.at(swap_row, col));
      }
      negate = !negate;
    }
    for (std::size_t row = step + 1; row < r; ++row) {
      for (std::size_t col = step + 1; col < r; ++col) {
        Poly numerator = a.at(step, step) * a.at(row, col) -
                         a.at(row, step) * a.at(step, col);
        a.at(row, col) = exact_div(numerator, previous_pivot);
      }
      a.at(row, step) = Poly(field);
    }
    previous_pivot = a.at(step, step);
  }
  Poly det = a.at(r - 1, r - 1);
  return negate ? -det : det;
}

Poly poly_det_cofactor(const PolyMatrix& matrix) {
  check_det_size(matrix.size);
  const std::size_t r = matrix.size;
  const FieldSpec& field = matrix.entries.front().field();
  if (r == 1) return matrix.at(0, 0);
  Poly det(field);
  for (std::size_t row = 0; row < r; ++row) {
    if (matrix.at(row, 0).is_zero()) continue;
    PolyMatrix minor{r - 1, {}};
    minor.entries.reserve((r - 1) * (r - 1));
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row) continue;
      for (std::size_t j = 1; j < r; ++j) {
        minor.entries.push_back(matrix.at(i, j));
      }
    }
    Poly term = matrix.at(row, 0) * poly_det_cofactor(minor);
    det = row % 2 == 0 ? det + term : det - term;
  }
  return det;
}

std::vector<std::size_t> greedy_basis(const FieldSpec& field,
                                      const VectorSet& vectors) {
  std::vector<std::size_t> positions;
  VectorSet accepted;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    accepted.push_back(vectors[i]);
    if (linear_rank(field, accepted) == accepted.size()) {
      positions.push_back(i);
    } else {
      accepted.pop_back();
    }
  }
  return positions;
}

namespace {

void require_coefficient_bound(const FieldSpec& field, const VectorSet& vs) {
  if (vs.empty()) fail(Errc::BadParameter, "need at least one vector");
  std::size_t k = vs.front().size();
  if (k == 0) fail(Errc::BadParameter, "vectors must be nonempty");
  for (const auto& v : vs) {
    if (v.size() != k) fail(Errc::BadParameter, "vectors must share one length");
  }
  if (k >= field.p()) {
    fail(Errc::PreconditionViolated,
         "the Wronskian criterion needs k < p (k = " + std::to_string(k) +
             ", p = " + std::to_string(field.p()) + ")");
  }
}

PolyMatrix wronskian_of(const FieldSpec& field, const std::vector<Poly>& fs,
                        WronskianMode mode) {
  return mode == WronskianMode::kFolded ? folded_wronskian(fs, field.gamma())
                                        : classical_wronskian(fs);
}

}  // namespace

bool independence_test(const FieldSpec& field, const VectorSet& vectors,
                       WronskianMode mode) {
  require_coefficient_bound(field, vectors);
  std::vector<Poly> fs;
  fs.reserve(vectors.size());
  for (const auto& v : vectors) fs.push_back(poly_from_coeff_vec(field, v));
  return !poly_det(wronskian_of(field, fs, mode)).is_zero();
}

Poly geometric_poly(const FieldSpec& field, const VectorSet& vectors,
                    WronskianMode mode) {
  require_coefficient_bound(field, vectors);
  std::vector<std::size_t> basis = greedy_basis(field, vectors);
  if (basis.empty()) fail(Errc::AllZero, "every vector in the span is zero");
  std::vector<Poly> fs;
  fs.reserve(basis.size());
  for (std::size_t i : basis) {
    fs.push_back(poly_from_coeff_vec(field, vectors[i]));
  }
  Poly det = poly_det(wronskian_of(field, fs, mode));
  if (det.is_zero()) {
    throw std::logic_error(
        "Wronskian of an independent family must be nonzero");
  }
  return det.monic();
}

}  // namespace listdec
