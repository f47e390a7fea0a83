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
#include "listdec/hypergraph.hpp"

namespace listdec {

// The instance a report's margin was attained on. `value` is the achieved
// quantity of the theorem in question: the average distance for the
// list-decoding checks, the achieved root count, loss sum, or weight for the
// structural checks. Re-running the relevant checker on (messages, received)
// must reproduce it exactly.
struct WorstWitness {
  std::vector<CoeffVec> messages;
  Codeword received;  // empty when the check involves no received word
  Rat value;
};

// Uniform result shape for every checker. `margin` is the exact distance
// from the bound, oriented so that violations make it non-positive:
//   main / search-worst   min average distance - rho
//   root-count            min (roots found - roots required)
//   loss                  min (bound - loss sum)
//   distinct              min (bound - weight)
//   hasse / wronskian     -(number of failed identities)
// `skipped` counts loss-bound instances whose precondition failed; it is
// diagnostic only and not serialized.
struct VerifyReport {
  std::string theorem;
  bool pass = true;
  std::uint64_t instances = 0;
  Rat margin;
  std::optional<WorstWitness> worst;
  std::int64_t elapsed_ms = 0;
  std::uint64_t skipped = 0;
};

// Fixed key order {theorem, pass, instances, margin, worst, elapsed_ms}.
// With stable = true the elapsed_ms field is forced to 0 so byte-identical
// reruns can be asserted.
nlohmann::ordered_json report_to_json(const VerifyReport& report, bool stable);

enum class VerifyMode { kExhaustive, kSampled };

struct SampleCfg {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

// p^k, the number of messages. Throws InstanceTooLarge beyond 2^62.
std::uint64_t message_count(const CodeSpec& spec);

// Message with index m: coefficient a_i is the i-th base-p digit of m, least
// significant digit first (a_0).
CoeffVec message_from_index(const CodeSpec& spec, std::uint64_t index);

// Checks that the geometric polynomial of the nonzero vertices has at least
// (s - l + 1) * sum_i affine_dim(e_i) roots counted with multiplicity, where
// l is the dimension of the span. Vertices must be pairwise distinct and
// include 0 (NotDistinct / ZeroMissing); edges hold vertex indices, one edge
// per position. worst.value carries the achieved root count.
VerifyReport check_root_count(const CodeSpec& spec,
                              const std::vector<CoeffVec>& vertices,
                              const std::vector<std::vector<std::size_t>>& edges);

// Checks sum_i Loss(e_i) <= (L - l) k / (s - L + 1) for a vertex set
// {0, f_1, ..., f_L}, provided every proper sub-tuple H with |H| >= 2
// satisfies wt(E|_H) < (|H| - 1) k / (s - |H| + 2). Instances failing that
// precondition are reported via `skipped` (instances = 0) rather than
// checked. L is capped at 6 (VertexCountTooLarge).
VerifyReport check_loss_bound(const FieldSpec& field,
                              const std::vector<CoeffVec>& vertices,
                              const std::vector<std::vector<std::size_t>>& edges,
                              unsigned s, unsigned k);

// Samples tuples of m pairwise distinct messages and checks the weight of
// their agreement hypergraph stays strictly below (m - 1) k / (s - m + 2),
// against both the plurality word and a uniformly random word. Requires
// 2 <= m <= s + 1 (BadM).
VerifyReport check_distinctness_lemma(const CodeSpec& spec, unsigned m,
                                      std::uint64_t tuples, std::uint64_t seed);

// Average-radius list-decodability at radius rho and list size L: no
// received word may have L+1 distinct codewords at average distance <= rho.
// The exhaustive mode enumerates every (L+1)-subset of messages in
// colexicographic order against its plurality word (the distance-minimizing
// received word), optionally fanned out over worker threads; it requires
// p^k <= 2500 and C(p^k, L+1) <= 10^8 (InstanceTooLarge). The sampled mode
// draws cfg.count subsets from a seeded stream on a single thread. Requires
// 1 <= L <= s (ListExceedsFolding).
VerifyReport verify_list_decodability(const CodeSpec& spec, unsigned list_size,
                                      const Rat& rho, VerifyMode mode,
                                      const SampleCfg& cfg = {},
                                      unsigned workers = 1);

// Same scan, reporting the minimum average distance over all tuples instead
// of testing a radius; margin is measured against radius_bound.
VerifyReport search_worst(const CodeSpec& spec, unsigned list_size,
                          VerifyMode mode, const SampleCfg& cfg = {},
                          unsigned workers = 1);

// Randomized sweeps: draw message tuples (list sizes up to max_list) and
// received words of mixed provenance (plurality, corrupted codeword,
// random), translate so 0 is a vertex, and run the corresponding structural
// check on the real agreement hypergraph. The loss sweep draws until
// `instances` precondition-satisfying cases have been checked.
VerifyReport sweep_root_count(const CodeSpec& spec, unsigned max_list,
                              std::uint64_t instances, std::uint64_t seed);
VerifyReport sweep_loss_bound(const CodeSpec& spec, unsigned max_list,
                              std::uint64_t instances, std::uint64_t seed);

// Per instance: additivity, scalar homogeneity, composition, and the product
// rule for Hasse derivatives, plus the factor-multiplicity bound
// mult(f^(j), alpha) >= s - j for f = (X - alpha)^s g with g(alpha) != 0.
VerifyReport sweep_hasse(const FieldSpec& field, std::uint64_t instances,
                         std::uint64_t seed);

// Per instance: folded and classical Wronskian independence tests against a
// Gaussian-elimination rank oracle, on tuples of up to max_rank vectors of
// length up to max_len (half of them deliberately made dependent).
VerifyReport sweep_wronskian(const FieldSpec& field, unsigned max_rank,
                             unsigned max_len, std::uint64_t instances,
                             std::uint64_t seed);

}  // namespace listdec
