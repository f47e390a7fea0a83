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

#include "listdec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include "listdec/geometry.hpp"
#include "listdec/rng.hpp"
#include "listdec/wronskian.hpp"

namespace listdec {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

constexpr std::uint64_t kMaxExhaustiveMessages = 2500;
constexpr std::uint64_t kMaxExhaustiveSubsets = 100000000;
constexpr unsigned kMaxLossVertices = 6;
constexpr unsigned kMaxWorkers = 256;

// --- subsets in colexicographic order -------------------------------------
//
// Subsets are ascending index tuples (a_0 < ... < a_{m-1}); the colex rank is
// sum_i C(a_i, i+1). Ranks are contiguous, so a scan over [0, C(M, m)) can be
// split into per-worker ranges that concatenate to the full order, which is
// what makes multi-worker runs reproduce the single-worker result bit for
// bit.

// C(n, k), saturating at UINT64_MAX instead of overflowing.
std::uint64_t binom_clamped(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) return UINT64_MAX;
  }
  return std::uint64_t(result);
}

void unrank_colex(std::uint64_t rank, unsigned m, std::uint64_t total_items,
                  std::uint32_t* out) {
  for (unsigned i = m; i-- > 0;) {
    std::uint64_t lo = i, hi = total_items - 1;
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (binom_clamped(mid, i + 1) <= rank) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    out[i] = std::uint32_t(lo);
    rank -= binom_clamped(lo, i + 1);
  }
}

void advance_colex(std::uint32_t* subset, unsigned m,
                   std::uint64_t total_items) {
  for (unsigned i = 0; i < m; ++i) {
    std::uint64_t cap = i + 1 < m ? subset[i + 1] : total_items;
    if (subset[i] + 1 < cap) {
      ++subset[i];
      for (unsigned j = 0; j < i; ++j) subset[j] = j;
      return;
    }
  }
  throw std::logic_error("advanced past the last subset");
}

// --- per-position block ranks ----------------------------------------------
//
// For the exhaustive scan every message is encoded once and each block is
// replaced by its rank among the sorted distinct blocks at that position.
// Equal ranks mean equal blocks, and the smallest rank among the most
// frequent ones is exactly the lexicographically smallest plurality block,
// matching plurality_word's tie-break.

struct CodeTable {
  unsigned n = 0;
  std::uint64_t message_total = 0;
  std::vector<std::vector<std::uint32_t>> pos_rank;
};

CodeTable build_code_table(const CodeSpec& spec, std::uint64_t message_total) {
  CodeTable table;
  table.n = spec.n;
  table.message_total = message_total;
  std::vector<std::vector<std::vector<FieldElem>>> blocks(
      spec.n, std::vector<std::vector<FieldElem>>(message_total));
  for (std::uint64_t idx = 0; idx < message_total; ++idx) {
    Codeword word = encode_vec(spec, message_from_index(spec, idx));
    for (unsigned i = 0; i < spec.n; ++i) {
      blocks[i][idx] = std::move(word.blocks[i]);
    }
  }
  table.pos_rank.assign(spec.n, {});
  for (unsigned i = 0; i < spec.n; ++i) {
    std::vector<std::vector<FieldElem>> distinct = blocks[i];
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    table.pos_rank[i].resize(message_total);
    for (std::uint64_t idx = 0; idx < message_total; ++idx) {
      table.pos_rank[i][idx] = std::uint32_t(
          std::lower_bound(distinct.begin(), distinct.end(), blocks[i][idx]) -
          distinct.begin());
    }
  }
  return table;
}

struct ScanResult {
  bool any = false;
  std::uint64_t best_agg = 0;  // summed (m - plurality count) over positions
  std::uint64_t best_rank = 0;
};

ScanResult scan_colex_range(const CodeTable& table, unsigned m,
                            std::uint64_t lo, std::uint64_t hi) {
  ScanResult result;
  if (lo >= hi) return result;
  std::vector<std::uint32_t> subset(m);
  unrank_colex(lo, m, table.message_total, subset.data());
  std::vector<std::uint32_t> ranks(m);
  for (std::uint64_t r = lo; r < hi; ++r) {
    std::uint64_t agg = 0;
    for (unsigned i = 0; i < table.n; ++i) {
      const auto& pos = table.pos_rank[i];
      for (unsigned j = 0; j < m; ++j) ranks[j] = pos[subset[j]];
      unsigned best = 1;
      for (unsigned j = 0; j < m; ++j) {
        unsigned count = 1;
        for (unsigned j2 = j + 1; j2 < m; ++j2) {
          count += ranks[j2] == ranks[j];
        }
        if (count > best) best = count;
      }
      agg += m - best;
    }
    if (!result.any || agg < result.best_agg) {
      result.any = true;
      result.best_agg = agg;
      result.best_rank = r;
    }
    if (r + 1 < hi) advance_colex(subset.data(), m, table.message_total);
  }
  return result;
}

// --- shared helpers ---------------------------------------------------------

void require_valid(const CodeSpec& spec) {
  if (auto violation = validate_spec(spec)) {
    fail(Errc::BadParameter, "invalid spec: " + *violation);
  }
}

std::vector<std::uint64_t> draw_distinct_sorted(SplitMix64& rng,
                                                std::uint64_t total_items,
                                                unsigned m) {
  std::vector<std::uint64_t> out;
  out.reserve(m);
  while (out.size() < m) {
    std::uint64_t v = rng.below(total_items);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Codeword random_word(SplitMix64& rng, const CodeSpec& spec) {
  Codeword word;
  word.blocks.assign(spec.n, std::vector<FieldElem>(spec.s));
  for (unsigned i = 0; i < spec.n; ++i) {
    for (unsigned u = 0; u < spec.s; ++u) {
      word.blocks[i][u] = FieldElem(rng.below(spec.field.p()));
    }
  }
  return word;
}

// Plurality word, codeword with a few blocks swapped in from other tuple
// members, or uniform noise; the mix keeps the agreement hypergraphs of the
// sweeps from being all-sparse or all-dense.
Codeword mixed_received(SplitMix64& rng, const CodeSpec& spec,
                        const std::vector<CoeffVec>& messages) {
  std::uint64_t pick = rng.below(4);
  if (pick <= 1) return plurality_word(spec, messages);
  if (pick == 2) {
    Codeword word =
        encode_vec(spec, messages[rng.below(messages.size())]);
    std::uint64_t swaps = rng.below(spec.n + 1);
    for (std::uint64_t t = 0; t < swaps; ++t) {
      unsigned position = unsigned(rng.below(spec.n));
      const CoeffVec& source = messages[rng.below(messages.size())];
      word.blocks[position] =
          encode_vec(spec, source).blocks[position];
    }
    return word;
  }
  return random_word(rng, spec);
}

CoeffVec sub_vec(const FieldSpec& field, const CoeffVec& a, const CoeffVec& b) {
  CoeffVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
  return out;
}

Codeword sub_word(const FieldSpec& field, const Codeword& a,
                  const Codeword& b) {
  Codeword out = a;
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    for (std::size_t u = 0; u < out.blocks[i].size(); ++u) {
      out.blocks[i][u] = field.sub(a.blocks[i][u], b.blocks[i][u]);
    }
  }
  return out;
}

void require_vertex_set(const std::vector<CoeffVec>& vertices, unsigned k,
                        std::size_t edge_index_bound,
                        const std::vector<std::vector<std::size_t>>& edges) {
  if (vertices.empty()) fail(Errc::BadParameter, "empty vertex set");
  for (const auto& v : vertices) {
    if (v.size() != k) {
      fail(Errc::BadParameter, "vertices must be vectors of length k");
    }
  }
  std::set<CoeffVec> distinct(vertices.begin(), vertices.end());
  if (distinct.size() != vertices.size()) {
    fail(Errc::NotDistinct, "vertices must be pairwise distinct");
  }
  bool has_zero = false;
  for (const auto& v : vertices) {
    has_zero = has_zero ||
               std::all_of(v.begin(), v.end(),
                           [](FieldElem c) { return c == 0; });
  }
  if (!has_zero) fail(Errc::ZeroMissing, "the zero message must be a vertex");
  for (const auto& edge : edges) {
    for (std::size_t idx : edge) {
      if (idx >= edge_index_bound) {
        fail(Errc::BadParameter, "edge refers to a vertex out of range");
      }
    }
  }
}

std::vector<CoeffVec> nonzero_vertices(const std::vector<CoeffVec>& vertices) {
  std::vector<CoeffVec> out;
  for (const auto& v : vertices) {
    if (!std::all_of(v.begin(), v.end(),
                     [](FieldElem c) { return c == 0; })) {
      out.push_back(v);
    }
  }
  return out;
}

// Minimum average distance over message subsets, plus the attaining witness.
struct MinScan {
  std::uint64_t instances = 0;
  bool any = false;
  Rat min_average;
  std::vector<CoeffVec> messages;
  Codeword received;
};

MinScan scan_min_average(const CodeSpec& spec, unsigned list_size,
                         VerifyMode mode, const SampleCfg& cfg,
                         unsigned workers) {
  require_valid(spec);
  if (list_size < 1) fail(Errc::BadParameter, "list size must be at least 1");
  if (list_size > spec.s) {
    fail(Errc::ListExceedsFolding,
         "list size " + std::to_string(list_size) + " exceeds folding " +
             std::to_string(spec.s));
  }
  const unsigned m = list_size + 1;
  const std::uint64_t message_total = message_count(spec);
  MinScan out;
  if (message_total < m) return out;  // no tuple of m distinct messages

  std::uint64_t best_agg = 0;
  std::vector<std::uint64_t> best_subset;

  if (mode == VerifyMode::kExhaustive) {
    if (message_total > kMaxExhaustiveMessages) {
      fail(Errc::InstanceTooLarge,
           "exhaustive mode is capped at " +
               std::to_string(kMaxExhaustiveMessages) + " messages, got " +
               std::to_string(message_total));
    }
    std::uint64_t total = binom_clamped(message_total, m);
    if (total > kMaxExhaustiveSubsets) {
      fail(Errc::InstanceTooLarge,
           "exhaustive mode is capped at " +
               std::to_string(kMaxExhaustiveSubsets) + " subsets, got " +
               std::to_string(total));
    }
    CodeTable table = build_code_table(spec, message_total);
    unsigned worker_count = std::max<unsigned>(workers, 1);
    worker_count = std::min<std::uint64_t>(worker_count, kMaxWorkers);
    worker_count = unsigned(std::min<std::uint64_t>(worker_count, total));
    std::vector<ScanResult> parts(worker_count);
    if (worker_count == 1) {
      parts[0] = scan_colex_range(table, m, 0, total);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(worker_count);
      for (unsigned w = 0; w < worker_count; ++w) {
        std::uint64_t lo = total * w / worker_count;
        std::uint64_t hi = total * (w + 1) / worker_count;
        threads.emplace_back([&table, m, lo, hi, &parts, w] {
          parts[w] = scan_colex_range(table, m, lo, hi);
        });
      }
      for (auto& t : threads) t.join();
    }
    ScanResult merged;
    for (const ScanResult& part : parts) {
      if (!part.any) continue;
      if (!merged.any || part.best_agg < merged.best_agg ||
          (part.best_agg == merged.best_agg &&
           part.best_rank < merged.best_rank)) {
        merged = part;
      }
    }
    std::vector<std::uint32_t> subset(m);
    unrank_colex(merged.best_rank, m, message_total, subset.data());
    best_subset.assign(subset.begin(), subset.end());
    best_agg = merged.best_agg;
    out.instances = total;
  } else {
    if (cfg.count == 0) {
      fail(Errc::BadParameter, "sampled mode requires a positive draw count");
    }
    SplitMix64 rng(cfg.seed);
    std::unordered_map<std::uint64_t, Codeword> cache;
    auto encoded = [&](std::uint64_t idx) -> Codeword {
      auto it = cache.find(idx);
      if (it != cache.end()) return it->second;
      if (cache.size() > (1u << 20)) cache.clear();
      return cache
          .emplace(idx, encode_vec(spec, message_from_index(spec, idx)))
          .first->second;
    };
    bool any = false;
    std::vector<Codeword> words(m);
    for (std::uint64_t t = 0; t < cfg.count; ++t) {
      std::vector<std::uint64_t> subset =
          draw_distinct_sorted(rng, message_total, m);
      for (unsigned j = 0; j < m; ++j) words[j] = encoded(subset[j]);
      std::uint64_t agg = 0;
      for (unsigned i = 0; i < spec.n; ++i) {
        unsigned best = 1;
        for (unsigned j = 0; j < m; ++j) {
          unsigned count = 1;
          for (unsigned j2 = j + 1; j2 < m; ++j2) {
            count += words[j2].blocks[i] == words[j].blocks[i];
          }
          if (count > best) best = count;
        }
        agg += m - best;
      }
      if (!any || agg < best_agg) {
        any = true;
        best_agg = agg;
        best_subset = subset;
      }
    }
    out.instances = cfg.count;
  }

  out.any = true;
  out.messages.reserve(m);
  for (std::uint64_t idx : best_subset) {
    out.messages.push_back(message_from_index(spec, idx));
  }
  out.received = plurality_word(spec, out.messages);
  out.min_average =
      Rat(std::int64_t(best_agg), std::int64_t(m) * std::int64_t(spec.n));
  // Route check: the rank-table aggregation and the direct distance
  // computation must agree on the witness.
  if (average_distance(spec, out.messages, out.received) != out.min_average) {
    throw std::logic_error("scan aggregate disagrees with average_distance");
  }
  return out;
}

nlohmann::ordered_json rat_to_json(const Rat& r) {
  nlohmann::ordered_json j;
  j["num"] = r.num();
  j["den"] = r.den();
  return j;
}

}  // namespace

nlohmann::ordered_json report_to_json(const VerifyReport& report,
                                      bool stable) {
  nlohmann::ordered_json j;
  j["theorem"] = report.theorem;
  j["pass"] = report.pass;
  j["instances"] = report.instances;
  j["margin"] = rat_to_json(report.margin);
  if (report.worst.has_value()) {
    nlohmann::ordered_json w;
    w["messages"] = nlohmann::ordered_json::array();
    for (const auto& msg : report.worst->messages) {
      w["messages"].push_back(msg);
    }
    w["received"] = nlohmann::ordered_json::array();
    for (const auto& block : report.worst->received.blocks) {
      w["received"].push_back(block);
    }
    w["value"] = rat_to_json(report.worst->value);
    j["worst"] = std::move(w);
  } else {
    j["worst"] = nullptr;
  }
  j["elapsed_ms"] = stable ? 0 : report.elapsed_ms;
  return j;
}

std::uint64_t message_count(const CodeSpec& spec) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < spec.k; ++i) {
    acc *= spec.field.p();
    if (acc > (unsigned __int128)(1) << 62) {
      fail(Errc::InstanceTooLarge, "p^k exceeds 2^62 messages");
    }
  }
  return std::uint64_t(acc);
}

CoeffVec message_from_index(const CodeSpec& spec, std::uint64_t index) {
  CoeffVec v(spec.k);
  for (unsigned i = 0; i < spec.k; ++i) {
    v[i] = FieldElem(index % spec.field.p());
    index /= spec.field.p();
  }
  if (index != 0) fail(Errc::BadParameter, "message index out of range");
  return v;
}

VerifyReport check_root_count(
    const CodeSpec& spec, const std::vector<CoeffVec>& vertices,
    const std::vector<std::vector<std::size_t>>& edges) {
  auto start = Clock::now();
  require_valid(spec);
  require_vertex_set(vertices, spec.k, vertices.size(), edges);
  if (edges.size() != spec.n) {
    fail(Errc::SpecMismatch, "expected one edge per code position");
  }
  std::vector<CoeffVec> spanning = nonzero_vertices(vertices);
  if (spanning.empty()) {
    fail(Errc::BadParameter, "need at least one nonzero vertex");
  }
  unsigned span_dim = linear_rank(spec.field, spanning);
  WronskianMode mode = spec.family == Family::kFrs ? WronskianMode::kFolded
                                                   : WronskianMode::kClassical;
  Poly geometric = geometric_poly(spec.field, spanning, mode);
  std::int64_t roots_found = total_roots_with_multiplicity(geometric);
  std::int64_t dim_sum = 0;
  for (const auto& edge : edges) {
    if (edge.empty()) continue;
    VectorSet points;
    points.reserve(edge.size());
    for (std::size_t idx : edge) points.push_back(vertices[idx]);
    dim_sum += affine_dim(spec.field, points);
  }
  std::int64_t roots_required =
      (std::int64_t(spec.s) - std::int64_t(span_dim) + 1) * dim_sum;

  VerifyReport report;
  report.theorem = "root-count";
  report.instances = 1;
  report.margin = Rat(roots_found - roots_required);
  report.pass = report.margin >= Rat(0);
  report.worst = WorstWitness{vertices, Codeword{}, Rat(roots_found)};
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport check_loss_bound(
    const FieldSpec& field, const std::vector<CoeffVec>& vertices,
    const std::vector<std::vector<std::size_t>>& edges, unsigned s,
    unsigned k) {
  auto start = Clock::now();
  if (k < 1) fail(Errc::BadParameter, "k must be at least 1");
  require_vertex_set(vertices, k, vertices.size(), edges);
  std::vector<CoeffVec> spanning = nonzero_vertices(vertices);
  if (spanning.empty()) {
    fail(Errc::BadParameter, "need at least one nonzero vertex");
  }
  unsigned list_size = unsigned(spanning.size());
  if (list_size > kMaxLossVertices) {
    fail(Errc::VertexCountTooLarge,
         "capped at " + std::to_string(kMaxLossVertices) +
             " nonzero vertices, got " + std::to_string(list_size));
  }
  if (s < list_size) {
    fail(Errc::BadParameter, "folding must be at least the vertex count");
  }

  VerifyReport report;
  report.theorem = "loss";

  // Precondition: every proper sub-tuple H with |H| >= 2 must have
  // restricted weight strictly below (|H| - 1) k / (s - |H| + 2).
  const std::size_t total = vertices.size();
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    unsigned h = unsigned(__builtin_popcount(mask));
    if (h < 2 || h >= total) continue;
    std::uint64_t restricted_weight = 0;
    for (const auto& edge : edges) {
      unsigned members = 0;
      for (std::size_t idx : edge) members += (mask >> idx) & 1;
      if (members > 1) restricted_weight += members - 1;
    }
    Rat sub_bound(std::int64_t(h - 1) * k, std::int64_t(s) - h + 2);
    if (!(Rat(std::int64_t(restricted_weight)) < sub_bound)) {
      report.pass = true;
      report.instances = 0;
      report.skipped = 1;
      report.elapsed_ms = ms_since(start);
      return report;
    }
  }

  unsigned span_dim = linear_rank(field, spanning);
  std::uint64_t loss_sum = 0;
  for (const auto& edge : edges) {
    VectorSet points;
    points.reserve(edge.size());
    for (std::size_t idx : edge) points.push_back(vertices[idx]);
    loss_sum += edge_loss(field, points);
  }
  Rat bound(std::int64_t(list_size - span_dim) * k,
            std::int64_t(s) - list_size + 1);
  report.instances = 1;
  report.margin = bound - Rat(std::int64_t(loss_sum));
  report.pass = report.margin >= Rat(0);
  report.worst =
      WorstWitness{vertices, Codeword{}, Rat(std::int64_t(loss_sum))};
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport check_distinctness_lemma(const CodeSpec& spec, unsigned m,
                                      std::uint64_t tuples,
                                      std::uint64_t seed) {
  auto start = Clock::now();
  require_valid(spec);
  if (m < 2 || m > spec.s + 1) {
    fail(Errc::BadM, "tuple size must lie in [2, s + 1]");
  }
  Rat bound(std::int64_t(m - 1) * spec.k, std::int64_t(spec.s) - m + 2);
  VerifyReport report;
  report.theorem = "distinct";
  report.margin = bound;
  std::uint64_t message_total = message_count(spec);
  if (message_total < m) {
    report.elapsed_ms = ms_since(start);
    return report;  // vacuous: no tuple of m distinct messages exists
  }
  SplitMix64 rng(seed);
  bool first = true;
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::vector<std::uint64_t> subset =
        draw_distinct_sorted(rng, message_total, m);
    std::vector<CoeffVec> messages;
    messages.reserve(m);
    for (std::uint64_t idx : subset) {
      messages.push_back(message_from_index(spec, idx));
    }
    Codeword words[2] = {plurality_word(spec, messages),
                         random_word(rng, spec)};
    for (const Codeword& received : words) {
      AgreementHypergraph graph = build_hypergraph(spec, received, messages);
      std::uint64_t wt = weight(graph);
      Rat margin = bound - Rat(std::int64_t(wt));
      ++report.instances;
      if (first || margin < report.margin) {
        first = false;
        report.margin = margin;
        report.worst =
            WorstWitness{messages, received, Rat(std::int64_t(wt))};
      }
      report.pass = report.pass && margin > Rat(0);
    }
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport verify_list_decodability(const CodeSpec& spec,
                                      unsigned list_size, const Rat& rho,
                                      VerifyMode mode, const SampleCfg& cfg,
                                      unsigned workers) {
  auto start = Clock::now();
  MinScan scan = scan_min_average(spec, list_size, mode, cfg, workers);
  VerifyReport report;
  report.theorem = "main";
  report.instances = scan.instances;
  if (!scan.any) {
    report.pass = true;
    report.margin = Rat(1) - rho;
  } else {
    report.margin = scan.min_average - rho;
    report.pass = report.margin > Rat(0);
    report.worst =
        WorstWitness{scan.messages, scan.received, scan.min_average};
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport search_worst(const CodeSpec& spec, unsigned list_size,
                          VerifyMode mode, const SampleCfg& cfg,
                          unsigned workers) {
  auto start = Clock::now();
  MinScan scan = scan_min_average(spec, list_size, mode, cfg, workers);
  Rat reference = radius_bound(list_size, spec.s, spec.rate());
  VerifyReport report;
  report.theorem = "search-worst";
  report.instances = scan.instances;
  report.pass = true;
  if (!scan.any) {
    report.margin = Rat(1) - reference;
  } else {
    report.margin = scan.min_average - reference;
    report.worst =
        WorstWitness{scan.messages, scan.received, scan.min_average};
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

namespace {

struct SweepDraw {
  std::vector<CoeffVec> translated_messages;
  Codeword translated_received;
  AgreementHypergraph graph;
};

// Draw a tuple and a received word, then translate everything by the first
// message so 0 becomes a vertex. Agreement is translation invariant (both
// encodings are linear maps), so the hypergraph is the one the original
// tuple induces.
SweepDraw draw_instance(SplitMix64& rng, const CodeSpec& spec,
                        std::uint64_t message_total, unsigned m) {
  std::vector<std::uint64_t> subset =
      draw_distinct_sorted(rng, message_total, m);
  std::vector<CoeffVec> messages;
  messages.reserve(m);
  for (std::uint64_t idx : subset) {
    messages.push_back(message_from_index(spec, idx));
  }
  Codeword received = mixed_received(rng, spec, messages);

  SweepDraw draw;
  const CoeffVec base = messages.front();
  draw.translated_messages.reserve(m);
  for (const auto& msg : messages) {
    draw.translated_messages.push_back(sub_vec(spec.field, msg, base));
  }
  draw.translated_received =
      sub_word(spec.field, received, encode_vec(spec, base));
  draw.graph = build_hypergraph(spec, draw.translated_received,
                                draw.translated_messages);
  return draw;
}

}  // namespace

VerifyReport sweep_root_count(const CodeSpec& spec, unsigned max_list,
                              std::uint64_t instances, std::uint64_t seed) {
  auto start = Clock::now();
  require_valid(spec);
  max_list = std::min(max_list, spec.s);
  if (max_list < 1) fail(Errc::BadParameter, "max list size must be >= 1");
  std::uint64_t message_total = message_count(spec);
  if (message_total < std::uint64_t(max_list) + 1) {
    fail(Errc::BadParameter, "too few messages for the requested list sizes");
  }
  SplitMix64 rng(seed);
  VerifyReport report;
  report.theorem = "root-count";
  bool first = true;
  for (std::uint64_t t = 0; t < instances; ++t) {
    unsigned m = 2 + unsigned(rng.below(max_list));
    SweepDraw draw = draw_instance(rng, spec, message_total, m);
    VerifyReport one =
        check_root_count(spec, draw.graph.vertices, draw.graph.edges);
    ++report.instances;
    report.pass = report.pass && one.pass;
    if (first || one.margin < report.margin) {
      first = false;
      report.margin = one.margin;
      report.worst = WorstWitness{draw.translated_messages,
                                  draw.translated_received,
                                  one.worst->value};
    }
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport sweep_loss_bound(const CodeSpec& spec, unsigned max_list,
                              std::uint64_t instances, std::uint64_t seed) {
  auto start = Clock::now();
  require_valid(spec);
  max_list = std::min({max_list, spec.s, kMaxLossVertices});
  if (max_list < 1) fail(Errc::BadParameter, "max list size must be >= 1");
  std::uint64_t message_total = message_count(spec);
  if (message_total < std::uint64_t(max_list) + 1) {
    fail(Errc::BadParameter, "too few messages for the requested list sizes");
  }
  SplitMix64 rng(seed);
  VerifyReport report;
  report.theorem = "loss";
  bool first = true;
  std::uint64_t attempts = 0;
  while (report.instances < instances) {
    if (++attempts > 1000 * instances + 1000) {
      fail(Errc::InstanceTooLarge,
           "precondition satisfied too rarely to collect " +
               std::to_string(instances) + " instances");
    }
    unsigned m = 2 + unsigned(rng.below(max_list));
    SweepDraw draw = draw_instance(rng, spec, message_total, m);
    VerifyReport one = check_loss_bound(spec.field, draw.graph.vertices,
                                        draw.graph.edges, spec.s, spec.k);
    if (one.instances == 0) {
      report.skipped += one.skipped;
      continue;
    }
    ++report.instances;
    report.pass = report.pass && one.pass;
    if (first || one.margin < report.margin) {
      first = false;
      report.margin = one.margin;
      report.worst = WorstWitness{draw.translated_messages,
                                  draw.translated_received,
                                  one.worst->value};
    }
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

namespace {

Poly random_poly(SplitMix64& rng, const FieldSpec& field, unsigned max_deg) {
  std::vector<FieldElem> coeffs(rng.below(max_deg + 2));
  for (auto& c : coeffs) c = FieldElem(rng.below(field.p()));
  return Poly(field, std::move(coeffs));
}

CoeffVec poly_to_witness(const Poly& f) { return f.coeffs(); }

}  // namespace

VerifyReport sweep_hasse(const FieldSpec& field, std::uint64_t instances,
                         std::uint64_t seed) {
  auto start = Clock::now();
  SplitMix64 rng(seed);
  VerifyReport report;
  report.theorem = "hasse";
  std::uint64_t violations = 0;
  for (std::uint64_t t = 0; t < instances; ++t) {
    Poly f = random_poly(rng, field, 8);
    Poly g = random_poly(rng, field, 8);
    FieldElem scalar = FieldElem(rng.below(field.p()));
    unsigned i = unsigned(rng.below(7));
    unsigned j = unsigned(rng.below(7));

    bool ok = (hasse_derivative(f, i) + hasse_derivative(g, i)) ==
              hasse_derivative(f + g, i);
    ok = ok && hasse_derivative(f.scaled(scalar), i) ==
                   hasse_derivative(f, i).scaled(scalar);
    ok = ok && hasse_derivative(hasse_derivative(f, i), j) ==
                   hasse_derivative(f, i + j)
                       .scaled(binom_mod(i + j, i, field));
    Poly product_rule(field);
    for (unsigned u = 0; u <= i; ++u) {
      product_rule =
          product_rule + hasse_derivative(f, u) * hasse_derivative(g, i - u);
    }
    ok = ok && hasse_derivative(f * g, i) == product_rule;

    // Multiplicity through a known factorization: f = (X - alpha)^s g with
    // g(alpha) != 0 gives mult(f^(j), alpha) >= s - j. A vanishing Hasse
    // derivative satisfies the bound trivially.
    FieldElem alpha = FieldElem(rng.below(field.p()));
    unsigned mult = 1 + unsigned(rng.below(6));
    Poly unit = random_poly(rng, field, 4);
    if (unit.eval(alpha) == 0) {
      unit = unit + Poly::constant(field, 1);
    }
    Poly factor = Poly::linear_root(field, alpha);
    Poly power = Poly::constant(field, 1);
    for (unsigned u = 0; u < mult; ++u) power = power * factor;
    Poly shaped = power * unit;
    for (unsigned u = 0; u < mult && ok; ++u) {
      Poly derived = hasse_derivative(shaped, u);
      if (derived.is_zero()) continue;
      ok = root_multiplicity(derived, alpha) >= mult - u;
    }

    ++report.instances;
    if (!ok) {
      ++violations;
      if (!report.worst.has_value()) {
        report.worst = WorstWitness{
            {poly_to_witness(f), poly_to_witness(g)}, Codeword{}, Rat(0)};
      }
    }
  }
  report.pass = violations == 0;
  report.margin = Rat(-std::int64_t(violations));
  report.elapsed_ms = ms_since(start);
  return report;
}

VerifyReport sweep_wronskian(const FieldSpec& field, unsigned max_rank,
                             unsigned max_len, std::uint64_t instances,
                             std::uint64_t seed) {
  auto start = Clock::now();
  if (max_rank < 1) fail(Errc::BadParameter, "max rank must be >= 1");
  max_len = std::min<std::uint64_t>(max_len, std::uint64_t(field.p()) - 1);
  if (max_len < 1) fail(Errc::BadParameter, "max length must be >= 1");
  SplitMix64 rng(seed);
  VerifyReport report;
  report.theorem = "wronskian";
  std::uint64_t violations = 0;
  for (std::uint64_t t = 0; t < instances; ++t) {
    unsigned r = 1 + unsigned(rng.below(max_rank));
    unsigned len = 1 + unsigned(rng.below(max_len));
    VectorSet vectors(r, CoeffVec(len));
    for (auto& v : vectors) {
      for (auto& c : v) c = FieldElem(rng.below(field.p()));
    }
    if (rng.below(2) == 0) {
      // Force a dependency so both branches of the criterion see traffic.
      CoeffVec combo(len, 0);
      for (unsigned u = 0; u + 1 < r; ++u) {
        FieldElem c = FieldElem(rng.below(field.p()));
        for (unsigned x = 0; x < len; ++x) {
          combo[x] = field.add(combo[x], field.mul(c, vectors[u][x]));
        }
      }
      vectors[r - 1] = combo;
    }
    bool independent = linear_rank(field, vectors) == r;
    bool ok =
        independence_test(field, vectors, WronskianMode::kFolded) ==
            independent &&
        independence_test(field, vectors, WronskianMode::kClassical) ==
            independent;
    ++report.instances;
    if (!ok) {
      ++violations;
      if (!report.worst.has_value()) {
        report.worst = WorstWitness{vectors, Codeword{}, Rat(0)};
      }
    }
  }
  report.pass = violations == 0;
  report.margin = Rat(-std::int64_t(violations));
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace listdec
