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

#include "parbasis/detect.h"

#include <utility>

namespace parbasis {

DetectOutcome InterpretDetectAnswers(const ElementSet& base,
                                     const BlockAnswers& answers) {
  if (answers.whole) return {};
  std::vector<ElementId> critical;
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (answers.without[k]) critical.push_back(base[k]);
  }
  if (critical.empty()) return {DetectOutcome::Kind::kManyCircuits, {}};
  return {DetectOutcome::Kind::kUnique,
          ElementSet::FromSorted(std::move(critical))};
}

DetectOutcome DetectSingleCircuit(QuerySession& session,
                                  const ElementSet& base) {
  return DetectInOneRound(session, {base}).front();
}

std::vector<DetectOutcome> DetectInOneRound(
    QuerySession& session, const std::vector<ElementSet>& bases) {
  std::vector<QueryBlock> blocks;
  blocks.reserve(bases.size());
  for (const ElementSet& b : bases) {
    blocks.push_back({b, QueryShape::kLeaveOneOut});
  }
  const std::vector<BlockAnswers> answers = session.Submit(std::move(blocks));
  std::vector<DetectOutcome> outcomes;
  outcomes.reserve(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    outcomes.push_back(InterpretDetectAnswers(bases[i], answers[i]));
  }
  return outcomes;
}

}  // namespace parbasis
