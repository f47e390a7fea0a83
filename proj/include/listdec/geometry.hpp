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

#include "listdec/poly.hpp"

namespace listdec {

// A finite list of points in F_p^k, all of the same length.
using VectorSet = std::vector<CoeffVec>;

// Rank of the row span of the given vectors (Gaussian elimination, first
// nonzero pivot in each column).
unsigned linear_rank(const FieldSpec& field, const VectorSet& rows);

// Dimension of the affine hull: the rank of {v - S[0] : v in S}. The choice
// of base point does not matter. Throws EmptySet on an empty input.
unsigned affine_dim(const FieldSpec& field, const VectorSet& points);

// Independent definition used to cross-check affine_dim on tiny inputs: the
// smallest r such that some r of the points affinely span all of them, where
// the affine span is the set of combinations with coefficients summing to 1.
// Enumerates those combinations directly, so it is capped at p <= 5, k <= 3
// and |S| <= 4 (InstanceTooLarge beyond that).
unsigned affine_dim_oracle(const FieldSpec& field, const VectorSet& points);

// Whether the subset F (indices into S) is a flat of S: no point of S
// outside F lies in the affine hull of F. F must be a proper nonempty subset
// (NotProperSubset).
bool is_flat(const FieldSpec& field, const std::vector<std::size_t>& subset,
             const VectorSet& points);

// Partition of index sets; each part lists positions into the original set.
using Partition = std::vector<std::vector<std::size_t>>;

// Splits S = {0, f_1, ..., f_m} into parts H_1, ..., H_{l+1} (l = dimension
// of the linear span of the f_i) such that every transversal that picks one
// point from each part has affine dimension exactly l. Built recursively:
// H_{l+1} is the complement of the span of the first l-1 greedy basis
// vectors, and the rest is the same construction inside that span.
// Requires 0 to be present exactly once (ZeroMissing), all points distinct
// (NotDistinct), and at least one nonzero point (BadParameter).
Partition flats_partition(const FieldSpec& field, const VectorSet& points);

// max(0, |e| - 1 - affine_dim(e)); 0 for the empty set.
unsigned edge_loss(const FieldSpec& field, const VectorSet& edge);

// Sum over edges of max(|e| - 1, 0).
unsigned weight(const std::vector<VectorSet>& edges);

}  // namespace listdec
