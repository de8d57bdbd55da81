// Copyright 2026 The Authors.
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

#ifndef PARBASIS_DETECT_H_
#define PARBASIS_DETECT_H_

#include <vector>

#include "parbasis/element_set.h"
#include "parbasis/query_ledger.h"

namespace parbasis {

struct DetectOutcome {
  enum class Kind { kNoCircuit, kManyCircuits, kUnique };

  Kind kind = Kind::kNoCircuit;
  // The unique circuit; empty unless kind == kUnique.
  Circuit circuit;

  friend bool operator==(const DetectOutcome&, const DetectOutcome&) = default;
};

// Decodes the answers of a leave-one-out block over `base`: independent means
// no circuit; otherwise the elements whose removal restores independence are
// exactly the unique circuit, and there are none when two or more circuits
// exist.
DetectOutcome InterpretDetectAnswers(const ElementSet& base,
                                     const BlockAnswers& answers);

// One round of |base| + 1 queries.
DetectOutcome DetectSingleCircuit(QuerySession& session, const ElementSet& base);

// Runs every detector in one shared round.
std::vector<DetectOutcome> DetectInOneRound(QuerySession& session,
                                            const std::vector<ElementSet>& bases);

}  // namespace parbasis

#endif  // PARBASIS_DETECT_H_
