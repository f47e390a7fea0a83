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

#include "listdec/codes.hpp"

namespace listdec {

// Agreement structure of a message tuple against one received word: edge i
// holds the indices of the messages whose codeword matches the received
// word on block i (full-block agreement).
struct AgreementHypergraph {
  std::vector<CoeffVec> vertices;             // the message tuple
  std::vector<std::vector<std::size_t>> edges;  // one per position, ascending
};

// Messages need not be distinct here; distinctness matters only to the
// theorems layered on top. Throws SpecMismatch when the received word does
// not have shape n x s, BadParameter on an empty tuple.
AgreementHypergraph build_hypergraph(const CodeSpec& spec,
                                     const Codeword& received,
                                     const std::vector<CoeffVec>& messages);

// Drops every vertex outside `kept` from each edge. Vertices themselves are
// unchanged. Throws EmptySubset on an empty kept-list.
AgreementHypergraph restrict_to(const AgreementHypergraph& graph,
                                const std::vector<std::size_t>& kept);

// The received word minimizing the summed distance to the tuple: block i is
// the most frequent block among the encodings at position i, ties broken
// toward the lexicographically smallest block.
Codeword plurality_word(const CodeSpec& spec,
                        const std::vector<CoeffVec>& messages);

// (1/(m n)) * sum of block-Hamming distances from each encoding to the
// received word.
Rat average_distance(const CodeSpec& spec,
                     const std::vector<CoeffVec>& messages,
                     const Codeword& received);

// Sum over edges of max(|e| - 1, 0).
unsigned weight(const AgreementHypergraph& graph);

}  // namespace listdec
