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

#include "listdec/hypergraph.hpp"

#include <algorithm>

namespace listdec {
namespace {

void require_word_shape(const CodeSpec& spec, const Codeword& word) {
  if (word.blocks.size() != spec.n) {
    fail(Errc::SpecMismatch, "received word must have n blocks");
  }
  for (const auto& block : word.blocks) {
    if (block.size() != spec.s) {
      fail(Errc::SpecMismatch, "received word blocks must have s symbols");
    }
  }
}

std::vector<Codeword> encode_all(const CodeSpec& spec,
                                 const std::vector<CoeffVec>& messages) {
  if (messages.empty()) fail(Errc::BadParameter, "empty message tuple");
  std::vector<Codeword> words;
  words.reserve(messages.size());
  for (const auto& m : messages) words.push_back(encode_vec(spec, m));
  return words;
}

}  // namespace

AgreementHypergraph build_hypergraph(const CodeSpec& spec,
                                     const Codeword& received,
                                     const std::vector<CoeffVec>& messages) {
  require_word_shape(spec, received);
  std::vector<Codeword> words = encode_all(spec, messages);
  AgreementHypergraph graph;
  graph.vertices = messages;
  graph.edges.assign(spec.n, {});
  for (unsigned i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[j].blocks[i] == received.blocks[i]) {
        graph.edges[i].push_back(j);
      }
    }
  }
  return graph;
}

AgreementHypergraph restrict_to(const AgreementHypergraph& graph,
                                const std::vector<std::size_t>& kept) {
  if (kept.empty()) fail(Errc::EmptySubset, "restriction to the empty set");
  for (std::size_t i : kept) {
    if (i >= graph.vertices.size()) {
      fail(Errc::BadParameter, "kept index out of range");
    }
  }
  std::vector<bool> keep(graph.vertices.size(), false);
  for (std::size_t i : kept) keep[i] = true;
  AgreementHypergraph out;
  out.vertices = graph.vertices;
  out.edges.reserve(graph.edges.size());
  for (const auto& edge : graph.edges) {
    std::vector<std::size_t> filtered;
    for (std::size_t v : edge) {
      if (keep[v]) filtered.push_back(v);
    }
    out.edges.push_back(std::move(filtered));
  }
  return out;
}

Codeword plurality_word(const CodeSpec& spec,
                        const std::vector<CoeffVec>& messages) {
  std::vector<Codeword> words = encode_all(spec, messages);
  Codeword best;
  best.blocks.resize(spec.n);
  for (unsigned i = 0; i < spec.n; ++i) {
    const std::vector<FieldElem>* chosen = nullptr;
    std::size_t chosen_count = 0;
    for (std::size_t j = 0; j < words.size(); ++j) {
      const auto& candidate = words[j].blocks[i];
      std::size_t count = 0;
      for (const auto& word : words) count += word.blocks[i] == candidate;
      if (count > chosen_count ||
          (count == chosen_count && candidate < *chosen)) {
        chosen = &candidate;
        chosen_count = count;
      }
    }
    best.blocks[i] = *chosen;
  }
  return best;
}

Rat average_distance(const CodeSpec& spec,
                     const std::vector<CoeffVec>& messages,
                     const Codeword& received) {
  require_word_shape(spec, received);
  std::vector<Codeword> words = encode_all(spec, messages);
  std::uint64_t total = 0;
  for (const auto& word : words) total += hamming_distance(word, received);
  return Rat(std::int64_t(total),
             std::int64_t(messages.size()) * std::int64_t(spec.n));
}

unsigned weight(const AgreementHypergraph& graph) {
  unsigned total = 0;
  for (const auto& edge : graph.edges) {
    if (edge.size() > 1) total += unsigned(edge.size()) - 1;
  }
  return total;
}

}  // namespace listdec
