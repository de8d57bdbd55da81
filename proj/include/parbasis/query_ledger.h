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

#ifndef PARBASIS_QUERY_LEDGER_H_
#define PARBASIS_QUERY_LEDGER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "json.hpp"
#include "parbasis/element_set.h"
#include "parbasis/instance.h"

namespace parbasis {

// How a block expands into individual independence queries.
enum class QueryShape {
  kSingle,       // Ind(base)
  kLeaveOneOut,  // Ind(base), then Ind(base \ {base[k]}) for every k
};

struct QueryBlock {
  ElementSet base;
  QueryShape shape = QueryShape::kLeaveOneOut;

  std::uint64_t QueryCount() const {
    return shape == QueryShape::kSingle ? 1 : base.size() + 1;
  }
};

// Calls `fn(query, answer)` for every query of the block, in ledger order.
void ForEachQuery(const QueryBlock& block, const BlockAnswers& answers,
                  const std::function<void(const ElementSet&, bool)>& fn);

enum class LedgerDetail {
  kFull,     // every block and answer is kept (exportable, replayable)
  kSummary,  // only per-round query counts
};

struct LedgerOptions {
  LedgerDetail detail = LedgerDetail::kFull;
  // Maximum queries in one round; unset means unlimited.
  std::optional<std::uint64_t> round_cap;
};

// Round-structured record of every query an algorithm made.
class QueryLedger {
 public:
  struct Round {
    std::vector<QueryBlock> blocks;
    std::vector<BlockAnswers> answers;
  };

  LedgerDetail detail() const { return detail_; }
  std::size_t rounds() const { return queries_per_round_.size(); }
  std::uint64_t total_queries() const { return total_queries_; }
  std::uint64_t max_queries_per_round() const { return max_queries_per_round_; }
  const std::vector<std::uint64_t>& queries_per_round() const {
    return queries_per_round_;
  }
  // Empty in summary mode.
  const std::vector<Round>& records() const { return records_; }

 private:
  friend class QuerySession;

  void Append(std::uint64_t queries, std::vector<QueryBlock> blocks,
              std::vector<BlockAnswers> answers);

  LedgerDetail detail_ = LedgerDetail::kFull;
  std::vector<std::uint64_t> queries_per_round_;
  std::uint64_t total_queries_ = 0;
  std::uint64_t max_queries_per_round_ = 0;
  std::vector<Round> records_;
};

// Sees every block of a round after it was answered. `round` is 1-based.
using QueryObserver = std::function<void(
    std::size_t round, const QueryBlock& block, const BlockAnswers& answers)>;

// The sole channel between an algorithm and an instance. Each call to
// RunRound or Submit is one adaptive round: all blocks of the round are fixed
// before any of its answers is visible to the caller.
class QuerySession {
 public:
  explicit QuerySession(const IndependenceOracle& oracle,
                        LedgerOptions options = {});

  std::size_t ground_size() const { return oracle_.size(); }
  const QueryLedger& ledger() const { return ledger_; }
  const LedgerOptions& options() const { return options_; }

  // Observers run sequentially, in block order.
  void set_observer(QueryObserver observer) { observer_ = std::move(observer); }

  using BlockEmitter = std::function<void(QueryBlock&&)>;
  // Emits exactly the blocks with indices [begin, end), in order. Must be a
  // pure function of the index range.
  using BlockGenerator =
      std::function<void(std::size_t begin, std::size_t end, const BlockEmitter&)>;
  // Receives each answered block. May run concurrently for distinct indices.
  using BlockVisitor = std::function<void(
      std::size_t index, const QueryBlock& block, const BlockAnswers& answers)>;

  // One round of `block_count` blocks. Throws ContractViolation, without
  // recording the round, if the round cap is exceeded.
  void RunRound(std::size_t block_count, const BlockGenerator& generate,
                const BlockVisitor& visit);

  // One round from an explicit block list; answers in block order.
  std::vector<BlockAnswers> Submit(std::vector<QueryBlock> blocks);

 private:
  const IndependenceOracle& oracle_;
  LedgerOptions options_;
  QueryLedger ledger_;
  QueryObserver observer_;
};

// Re-evaluates every recorded query one at a time with IsIndependent and
// compares against the recorded answers. Requires a full ledger.
bool ReplayLedger(const QueryLedger& ledger, const IndependenceOracle& oracle);

// JSON export:
//   {"detail": "full"|"summary",
//    "rounds": [[{"query": [ids], "answer": bool}, ...], ...],   (full only)
//    "queries_per_round": [...],
//    "summary": {"rounds", "max_queries_per_round", "total_queries"}}
nlohmann::json LedgerToJson(const QueryLedger& ledger);

// Element ids a full export spells out; a leave-one-out block over k
// elements costs k^2.
std::uint64_t ExportedQueryIds(const QueryLedger& ledger);
inline constexpr std::uint64_t kMaxExportedQueryIds = 200'000'000;

// Same document as LedgerToJson, streamed one query per line without
// building it in memory. CapacityError above kMaxExportedQueryIds.
void WriteLedgerJson(const QueryLedger& ledger, std::ostream& out);

struct RecordedQuery {
  ElementSet query;
  bool answer = false;
};
// Parses the "rounds" array of a full ledger export.
std::vector<std::vector<RecordedQuery>> RecordedRoundsFromJson(
    const nlohmann::json& ledger_json);

// Streams the same entries out of a ledger document without building it:
// fn(round, query, answer) with 1-based rounds, in file order. InputError on
// malformed input or a document without "rounds".
void ForEachRecordedQuery(
    std::istream& in,
    const std::function<void(std::size_t, const ElementSet&, bool)>& fn);

}  // namespace parbasis

#endif  // PARBASIS_QUERY_LEDGER_H_
