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

#include "listdec/geometry.hpp"
#include "listdec/poly.hpp"

namespace listdec {

// Square matrix of polynomials, stored row major.
struct PolyMatrix {
  std::size_t size = 0;
  std::vector<Poly> entries;

  const Poly& at(std::size_t row, std::size_t col) const {
    return entries[row * size + col];
  }
  Poly& at(std::size_t row, std::size_t col) {
    return entries[row * size + col];
  }
};

enum class WronskianMode { kFolded, kClassical };

// Row u of the folded Wronskian of (f_1, ..., f_r) is
// (f_1(gamma^u X), ..., f_r(gamma^u X)) for u in [0, r).
PolyMatrix folded_wronskian(const std::vector<Poly>& fs, FieldElem gamma);

// Row u of the classical Wronskian is the u-th Hasse derivatives.
PolyMatrix classical_wronskian(const std::vector<Poly>& fs);

// Exact determinant by fraction-free elimination (row swaps allowed, every
// interior division exact). Capped at size 8 (MatrixTooLarge).
Poly poly_det(const PolyMatrix& matrix);

// Cofactor expansion along the first column; the slow second route used to
// cross-check poly_det. Same size cap.
Poly poly_det_cofactor(const PolyMatrix& matrix);

// Indices of a maximal linearly independent subsequence, greedily taking
// vectors in input order.
std::vector<std::size_t> greedy_basis(const FieldSpec& field,
                                      const VectorSet& vectors);

// Whether the polynomials with these coefficient vectors are linearly
// independent over F_p, decided by the Wronskian determinant in the given
// mode. Valid for k < p (PreconditionViolated otherwise); for the folded
// mode the field's gamma is used.
bool independence_test(const FieldSpec& field, const VectorSet& vectors,
                       WronskianMode mode);

// Monic Wronskian determinant of the greedy basis of span{vectors}. The
// result does not depend on which basis of the span is used, which makes it
// a well-defined invariant of the span itself. Throws AllZero when every
// vector is zero, PreconditionViolated when k >= p.
Poly geometric_poly(const FieldSpec& field, const VectorSet& vectors,
                    WronskianMode mode);

}  // namespace listdec
