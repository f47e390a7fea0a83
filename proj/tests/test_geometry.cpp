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

#include <algorithm>
#include <cstddef>
#include <vector>

#include "listdec/geometry.hpp"
#include "test_util.hpp"

using listdec::CoeffVec;
using listdec::FieldElem;
using listdec::FieldSpec;
using listdec::SplitMix64;
using listdec::VectorSet;

namespace {

// All vectors of F_p^k in lexicographic order.
std::vector<CoeffVec> all_vectors(const FieldSpec& field, std::size_t k) {
  std::vector<CoeffVec> out;
  CoeffVec v(k, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = k;
    while (i > 0 && v[i - 1] == field.p() - 1) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

}  // namespace

TEST_CASE("linear rank on hand-checked sets") {
  FieldSpec f13(13, 2);
  CHECK(listdec::linear_rank(f13, {}) == 0);
  CHECK(listdec::linear_rank(f13, {CoeffVec{0, 0}}) == 0);
  CHECK(listdec::linear_rank(f13, {CoeffVec{1, 2}}) == 1);
  CHECK(listdec::linear_rank(f13, {CoeffVec{1, 2}, CoeffVec{2, 4}}) == 1);
  CHECK(listdec::linear_rank(f13, {CoeffVec{1, 0}, CoeffVec{0, 1},
                                   CoeffVec{5, 7}}) == 2);

  FieldSpec f2(2, 1);
  CHECK(listdec::linear_rank(
            f2, {CoeffVec{1, 1, 0}, CoeffVec{0, 1, 1}, CoeffVec{1, 0, 1}}) ==
        2);
}

TEST_CASE("affine dimension on hand-checked sets") {
  FieldSpec f5(5, 2);
  CHECK(listdec::affine_dim(f5, {CoeffVec{3, 1}}) == 0);
  // Three collinear points.
  CHECK(listdec::affine_dim(
            f5, {CoeffVec{0, 1}, CoeffVec{1, 2}, CoeffVec{2, 3}}) == 1);
  // A genuine triangle.
  CHECK(listdec::affine_dim(
            f5, {CoeffVec{0, 0}, CoeffVec{1, 0}, CoeffVec{0, 1}}) == 2);
  CHECK_ERRC(listdec::affine_dim(f5, {}), EmptySet);

  // Translation invariance: affine_dim(S) == affine_dim(S + t).
  SplitMix64 rng(8);
  FieldSpec f13(13, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = 1 + rng.below(5);
    VectorSet set(m);
    for (auto& v : set) v = testutil::random_vec(rng, f13, 3);
    CoeffVec t = testutil::random_vec(rng, f13, 3);
    VectorSet shifted = set;
    for (auto& v : shifted) {
      for (std::size_t i = 0; i < 3; ++i) v[i] = f13.add(v[i], t[i]);
    }
    CHECK(listdec::affine_dim(f13, set) == listdec::affine_dim(f13, shifted));
  }
}

TEST_CASE("affine dimension agrees with the span-enumeration oracle") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FieldSpec field = FieldSpec::with_smallest_generator(p);
    for (std::size_t k = 1; k <= (p <= 3 ? 3u : 2u); ++k) {
      auto points = all_vectors(field, k);
      SplitMix64 rng(100 * p + k);
      for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = 1 + rng.below(4);
        VectorSet set;
        for (std::size_t i = 0; i < m; ++i) {
          set.push_back(points[rng.below(points.size())]);
        }
        CHECK(listdec::affine_dim(field, set) ==
              listdec::affine_dim_oracle(field, set));
      }
    }
  }
  FieldSpec f13(13, 2);
  CHECK_ERRC(listdec::affine_dim_oracle(f13, {CoeffVec{1}}),
             InstanceTooLarge);
}

TEST_CASE("flat membership") {
  FieldSpec f5(5, 2);
  // The affine hull of the first two points of a collinear triple contains
  // the third, so {0, 1} is not a flat of the line.
  VectorSet line{CoeffVec{0, 1}, CoeffVec{1, 2}, CoeffVec{2, 3}};
  CHECK_FALSE(listdec::is_flat(f5, {0, 1}, line));

  // No triangle vertex lies on the opposite side's line.
  VectorSet triangle{CoeffVec{0, 0}, CoeffVec{1, 0}, CoeffVec{0, 1}};
  CHECK(listdec::is_flat(f5, {0, 1}, triangle));
  CHECK(listdec::is_flat(f5, {2}, triangle));

  VectorSet four{CoeffVec{0, 0}, CoeffVec{1, 0}, CoeffVec{0, 1},
                 CoeffVec{2, 0}};
  CHECK(listdec::is_flat(f5, {0, 1, 3}, four));  // the X-axis within the set
  CHECK_FALSE(listdec::is_flat(f5, {0, 1}, four));  // (2,0) is on that line
  CHECK(listdec::is_flat(f5, {0}, four));  // singletons are always flats

  CHECK_ERRC(listdec::is_flat(f5, {0, 1, 2}, triangle), NotProperSubset);
  CHECK_ERRC(listdec::is_flat(f5, {}, triangle), NotProperSubset);
  CHECK_ERRC(listdec::is_flat(f5, {0, 5}, triangle), BadParameter);
  CHECK_ERRC(listdec::is_flat(f5, {0, 0}, triangle), BadParameter);
  CHECK_ERRC(listdec::is_flat(f5, {0}, VectorSet{}), EmptySet);
}

TEST_CASE("flats partition on hand-checked sets") {
  FieldSpec f5(5, 2);
  // Zero, two points on the X-axis, one off it: parts {0}, axis, rest.
  VectorSet set{CoeffVec{0, 0}, CoeffVec{1, 0}, CoeffVec{0, 1},
                CoeffVec{2, 0}};
  auto partition = listdec::flats_partition(f5, set);
  REQUIRE(partition.size() == 3);
  CHECK(partition[0] == std::vector<std::size_t>{0});
  CHECK(partition[1] == std::vector<std::size_t>{1, 3});
  CHECK(partition[2] == std::vector<std::size_t>{2});

  // Span dimension 1: just {zero} and everything else.
  VectorSet axis{CoeffVec{0, 0}, CoeffVec{1, 0}, CoeffVec{2, 0}};
  auto base = listdec::flats_partition(f5, axis);
  REQUIRE(base.size() == 2);
  CHECK(base[0] == std::vector<std::size_t>{0});
  CHECK(base[1] == std::vector<std::size_t>{1, 2});

  CHECK_ERRC(listdec::flats_partition(f5, VectorSet{CoeffVec{1, 0}}),
             ZeroMissing);
  CHECK_ERRC(listdec::flats_partition(f5, VectorSet{}), ZeroMissing);
  VectorSet dup{CoeffVec{0, 0}, CoeffVec{1, 0}, CoeffVec{1, 0}};
  CHECK_ERRC(listdec::flats_partition(f5, dup), NotDistinct);
  CHECK_ERRC(listdec::flats_partition(f5, VectorSet{CoeffVec{0, 0}}),
             BadParameter);
}

TEST_CASE("flats partition properties on random sets") {
  SplitMix64 rng(9);
  for (std::uint32_t p : {2u, 5u, 13u}) {
    FieldSpec field = FieldSpec::with_smallest_generator(p);
    for (int trial = 0; trial < 120; ++trial) {
      std::size_t k = 2 + rng.below(2);
      std::size_t total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= p;
      std::size_t m = std::min<std::size_t>(2 + rng.below(5), total);
      VectorSet set{CoeffVec(k, 0)};
      while (set.size() < m) {
        CoeffVec v = testutil::random_vec(rng, field, k);
        if (std::find(set.begin(), set.end(), v) == set.end()) {
          set.push_back(v);
        }
      }
      std::size_t rank = listdec::linear_rank(field, set);
      if (rank == 0) continue;
      auto partition = listdec::flats_partition(field, set);

      // One part per span dimension plus the zero part, which comes first.
      REQUIRE(partition.size() == rank + 1);
      CHECK(partition[0] == std::vector<std::size_t>{0});

      // Parts cover every index exactly once.
      std::vector<char> seen(set.size(), 0);
      for (const auto& part : partition) {
        CHECK(!part.empty());
        for (std::size_t idx : part) {
          REQUIRE(idx < set.size());
          CHECK(seen[idx] == 0);
          seen[idx] = 1;
        }
      }
      CHECK(std::count(seen.begin(), seen.end(), 1) ==
            std::ptrdiff_t(set.size()));

      // Every transversal's affine dimension equals the span dimension:
      // picking one point per part gives an affinely independent family.
      std::uint64_t combos = 1;
      for (const auto& part : partition) combos *= part.size();
      if (combos <= 64) {
        for (std::uint64_t code = 0; code < combos; ++code) {
          VectorSet transversal;
          std::uint64_t rest = code;
          for (const auto& part : partition) {
            transversal.push_back(set[part[rest % part.size()]]);
            rest /= part.size();
          }
          CHECK(listdec::affine_dim(field, transversal) == rank);
        }
      } else {
        for (int draw = 0; draw < 16; ++draw) {
          VectorSet transversal;
          for (const auto& part : partition) {
            transversal.push_back(set[part[rng.below(part.size())]]);
          }
          CHECK(listdec::affine_dim(field, transversal) == rank);
        }
      }
    }
  }
}

TEST_CASE("edge loss and weight") {
  FieldSpec f5(5, 2);
  VectorSet line{CoeffVec{0, 1}, CoeffVec{1, 2}, CoeffVec{2, 3}};
  CHECK(listdec::edge_loss(f5, line) == 1);  // 3 points, dim 1
  VectorSet triangle{CoeffVec{0, 0}, CoeffVec{1, 0}, CoeffVec{0, 1}};
  CHECK(listdec::edge_loss(f5, triangle) == 0);
  CHECK(listdec::edge_loss(f5, VectorSet{CoeffVec{4, 4}}) == 0);
  CHECK(listdec::edge_loss(f5, VectorSet{}) == 0);

  std::vector<VectorSet> edges{line, triangle, {}, {CoeffVec{1, 1}}};
  CHECK(listdec::weight(edges) == 2 + 2 + 0 + 0);
  CHECK(listdec::weight(std::vector<VectorSet>{}) == 0);

  // Loss never exceeds |e| - 1 and weight dominates the loss sum.
  SplitMix64 rng(10);
  FieldSpec f13(13, 2);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t m = rng.below(5);
    VectorSet e(m);
    for (auto& v : e) v = testutil::random_vec(rng, f13, 2);
    std::size_t loss = listdec::edge_loss(f13, e);
    if (m == 0) {
      CHECK(loss == 0);
    } else {
      CHECK(loss <= m - 1);
    }
  }
}
