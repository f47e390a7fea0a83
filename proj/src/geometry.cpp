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

#include "listdec/geometry.hpp"

#include <algorithm>
#include <set>

namespace listdec {
namespace {

void require_uniform_length(const VectorSet& points) {
  for (const auto& v : points) {
    if (v.size() != points.front().size()) {
      fail(Errc::BadParameter, "points must share one length");
    }
  }
}

CoeffVec sub_vec(const FieldSpec& field, const CoeffVec& a, const CoeffVec& b) {
  CoeffVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
  return out;
}

bool is_zero_vec(const CoeffVec& v) {
  return std::all_of(v.begin(), v.end(), [](FieldElem c) { return c == 0; });
}

// Incrementally reduced row basis; supports membership queries against the
// span of the rows inserted so far.
class RowBasis {
 public:
  explicit RowBasis(const FieldSpec& field) : field_(field) {}

  // Returns true (and absorbs the residue) when v is outside the current
  // span.
  bool insert(CoeffVec v) {
    reduce(v);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0) {
        FieldElem lead_inv = field_.inv(v[c]);
        for (auto& x : v) x = field_.mul(x, lead_inv);
        rows_.push_back({c, std::move(v)});
        return true;
      }
    }
    return false;
  }

  bool contains(CoeffVec v) const {
    reduce(v);
    return is_zero_vec(v);
  }

  unsigned rank() const { return unsigned(rows_.size()); }

 private:
  struct Row {
    std::size_t pivot;
    CoeffVec values;  // normalized so values[pivot] == 1
  };

  void reduce(CoeffVec& v) const {
    for (const Row& row : rows_) {
      FieldElem c = v[row.pivot];
      if (c == 0) continue;
      for (std::size_t i = row.pivot; i < v.size(); ++i) {
        v[i] = field_.sub(v[i], field_.mul(c, row.values[i]));
      }
    }
  }

  const FieldSpec& field_;
  std::vector<Row> rows_;
};

}  // namespace

unsigned linear_rank(const FieldSpec& field, const VectorSet& rows) {
  if (rows.empty()) return 0;
  require_uniform_length(rows);
  RowBasis basis(field);
  for (const auto& row : rows) basis.insert(row);
  return basis.rank();
}

unsigned affine_dim(const FieldSpec& field, const VectorSet& points) {
  if (points.empty()) fail(Errc::EmptySet, "affine dimension of the empty set");
  require_uniform_length(points);
  VectorSet differences;
  differences.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    differences.push_back(sub_vec(field, points[i], points[0]));
  }
  return linear_rank(field, differences);
}

namespace {

// Is v an affine combination of the chosen points? Coefficients are
// enumerated over all of F_p^{r-1}, the final one fixed by the sum-to-one
// constraint.
bool in_affine_span(const FieldSpec& field, const CoeffVec& v,
                    const VectorSet& points,
                    const std::vector<std::size_t>& chosen) {
  std::size_t r = chosen.size();
  std::size_t k = v.size();
  std::vector<FieldElem> coeffs(r, 0);
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i + 1 < r; ++i) combos *= field.p();
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::uint64_t rest = code;
    FieldElem sum = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      coeffs[i] = FieldElem(rest % field.p());
      rest /= field.p();
      sum = field.add(sum, coeffs[i]);
    }
    coeffs[r - 1] = field.sub(1, sum);
    bool match = true;
    for (std::size_t c = 0; c < k && match; ++c) {
      FieldElem acc = 0;
      for (std::size_t i = 0; i < r; ++i) {
        acc = field.add(acc, field.mul(coeffs[i], points[chosen[i]][c]));
      }
      match = acc == v[c];
    }
    if (match) return true;
  }
  return false;
}

}  // namespace

unsigned affine_dim_oracle(const FieldSpec& field, const VectorSet& points) {
  if (points.empty()) fail(Errc::EmptySet, "affine dimension of the empty set");
  require_uniform_length(points);
  std::size_t m = points.size();
  std::size_t k = points.front().size();
  if (field.p() > 5 || k > 3 || m > 4) {
    fail(Errc::InstanceTooLarge,
         "oracle is capped at p <= 5, k <= 3, |S| <= 4");
  }
  for (std::size_t r = 1; r <= m; ++r) {
    // All r-subsets of indices, in lexicographic order.
    std::vector<std::size_t> chosen(r);
    for (std::size_t i = 0; i < r; ++i) chosen[i] = i;
    while (true) {
      bool spans_all = true;
      for (std::size_t i = 0; i < m && spans_all; ++i) {
        spans_all = in_affine_span(field, points[i], points, chosen);
      }
      if (spans_all) return unsigned(r - 1);
      std::size_t pos = r;
      while (pos > 0 && chosen[pos - 1] == m - r + pos - 1) --pos;
      if (pos == 0) break;
      ++chosen[pos - 1];
      for (std::size_t i = pos; i < r; ++i) chosen[i] = chosen[i - 1] + 1;
    }
  }
  fail(Errc::BadParameter, "unreachable: the full set spans itself");
}

bool is_flat(const FieldSpec& field, const std::vector<std::size_t>& subset,
             const VectorSet& points) {
  if (points.empty()) fail(Errc::EmptySet, "flat test against an empty set");
  require_uniform_length(points);
  if (subset.empty() || subset.size() >= points.size()) {
    fail(Errc::NotProperSubset, "subset must be proper and nonempty");
  }
  std::set<std::size_t> inside(subset.begin(), subset.end());
  if (inside.size() != subset.size()) {
    fail(Errc::BadParameter, "subset indices must be distinct");
  }
  for (std::size_t i : subset) {
    if (i >= points.size()) {
      fail(Errc::BadParameter, "subset index out of range");
    }
  }
  VectorSet flat_points;
  for (std::size_t i : subset) flat_points.push_back(points[i]);
  unsigned base_dim = affine_dim(field, flat_points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (inside.count(i)) continue;
    flat_points.push_back(points[i]);
    unsigned extended = affine_dim(field, flat_points);
    flat_points.pop_back();
    if (extended == base_dim) return false;
  }
  return true;
}

namespace {

Partition partition_rec(const FieldSpec& field, const VectorSet& points,
                        std::size_t zero_index,
                        const std::vector<std::size_t>& nonzero) {
  RowBasis basis(field);
  std::vector<std::size_t> basis_positions;
  for (std::size_t i : nonzero) {
    if (basis.insert(points[i])) basis_positions.push_back(i);
  }
  std::size_t l = basis_positions.size();
  if (l == 1) {
    return {{zero_index}, nonzero};
  }
  RowBasis subspace(field);
  for (std::size_t i = 0; i + 1 < l; ++i) subspace.insert(points[basis_positions[i]]);
  std::vector<std::size_t> inside, outside;
  for (std::size_t i : nonzero) {
    (subspace.contains(points[i]) ? inside : outside).push_back(i);
  }
  Partition parts = partition_rec(field, points, zero_index, inside);
  parts.push_back(std::move(outside));
  return parts;
}

}  // namespace

Partition flats_partition(const FieldSpec& field, const VectorSet& points) {
  if (points.empty()) fail(Errc::ZeroMissing, "the set must contain 0");
  require_uniform_length(points);
  std::set<CoeffVec> distinct(points.begin(), points.end());
  if (distinct.size() != points.size()) {
    fail(Errc::NotDistinct, "points must be pairwise distinct");
  }
  std::size_t zero_index = points.size();
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (is_zero_vec(points[i])) {
      zero_index = i;
    } else {
      nonzero.push_back(i);
    }
  }
  if (zero_index == points.size()) {
    fail(Errc::ZeroMissing, "the set must contain 0");
  }
  if (nonzero.empty()) {
    fail(Errc::BadParameter, "at least one nonzero point is required");
  }
  return partition_rec(field, points, zero_index, nonzero);
}

unsigned edge_loss(const FieldSpec& field, const VectorSet& edge) {
  if (edge.empty()) return 0;
  unsigned dim = affine_dim(field, edge);
  unsigned size = unsigned(edge.size());
  return size > dim + 1 ? size - 1 - dim : 0;
}

unsigned weight(const std::vector<VectorSet>& edges) {
  unsigned total = 0;
  for (const auto& edge : edges) {
    if (edge.size() > 1) total += unsigned(edge.size()) - 1;
  }
  return total;
}

}  // namespace listdec
