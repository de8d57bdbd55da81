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

#include "parbasis/query_ledger.h"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include "parbasis/errors.h"
#include "parbasis/parallel.h"

namespace parbasis {

void ForEachQuery(const QueryBlock& block, const BlockAnswers& answers,
                  const std::function<void(const ElementSet&, bool)>& fn) {
  fn(block.base, answers.whole);
  if (block.shape == QueryShape::kSingle) return;
  for (std::size_t k = 0; k < block.base.size(); ++k) {
    fn(block.base.Without(block.base[k]), answers.without[k] != 0);
  }
}

void QueryLedger::Append(std::uint64_t queries, std::vector<QueryBlock> blocks,
                         std::vector<BlockAnswers> answers) {
  queries_per_round_.push_back(queries);
  total_queries_ += queries;
  max_queries_per_round_ = std::max(max_queries_per_round_, queries);
  if (detail_ == LedgerDetail::kFull) {
    records_.push_back(Round{std::move(blocks), std::move(answers)});
  }
}

QuerySession::QuerySession(const IndependenceOracle& oracle,
                           LedgerOptions options)
    : oracle_(oracle), options_(options) {
  ledger_.detail_ = options.detail;
}

void QuerySession::RunRound(std::size_t block_count,
                            const BlockGenerator& generate,
                            const BlockVisitor& visit) {
  const bool keep = options_.detail == LedgerDetail::kFull;
  const std::uint64_t cap =
      options_.round_cap.value_or(std::numeric_limits<std::uint64_t>::max());
  // Observers see blocks in order, so they force one chunk.
  const unsigned max_chunks = observer_ ? 1 : 0;
  const std::size_t chunks = ChunkCount(block_count, max_chunks);

  std::vector<std::vector<QueryBlock>> chunk_blocks(keep || observer_ ? chunks : 0);
  std::vector<std::vector<BlockAnswers>> chunk_answers(chunk_blocks.size());
  std::atomic<std::uint64_t> queries{0};
  std::atomic<bool> over_cap{false};
  const std::size_t round = ledger_.rounds() + 1;

  ParallelChunks(
      block_count,
      [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::size_t index = begin;
        BlockAnswers answers;
        generate(begin, end, [&](QueryBlock&& block) {
          if (over_cap.load(std::memory_order_relaxed)) return;
          const std::uint64_t total =
              queries.fetch_add(block.QueryCount()) + block.QueryCount();
          if (total > cap) {
            over_cap = true;
            return;
          }
          if (block.shape == QueryShape::kSingle) {
            answers.whole = oracle_.IsIndependent(block.base);
            answers.without.clear();
          } else {
            oracle_.LeaveOneOut(block.base, answers);
          }
          visit(index, block, answers);
          if (observer_) observer_(round, block, answers);
          if (keep) {
            chunk_blocks[chunk].push_back(std::move(block));
            chunk_answers[chunk].push_back(answers);
          }
          ++index;
        });
        if (!over_cap && index != end) {
          throw std::logic_error("block generator emitted the wrong count");
        }
      },
      max_chunks);

  if (over_cap) {
    throw ContractViolation("round " + std::to_string(round) +
                            " exceeds the per-round query cap of " +
                            std::to_string(cap));
  }
  std::vector<QueryBlock> blocks;
  std::vector<BlockAnswers> answers;
  if (keep) {
    blocks.reserve(block_count);
    answers.reserve(block_count);
    for (std::size_t c = 0; c < chunk_blocks.size(); ++c) {
      std::move(chunk_blocks[c].begin(), chunk_blocks[c].end(),
                std::back_inserter(blocks));
      std::move(chunk_answers[c].begin(), chunk_answers[c].end(),
                std::back_inserter(answers));
    }
  }
  ledger_.Append(queries, std::move(blocks), std::move(answers));
}

std::vector<BlockAnswers> QuerySession::Submit(std::vector<QueryBlock> blocks) {
  std::uint64_t total = 0;
  for (const QueryBlock& b : blocks) total += b.QueryCount();
  if (options_.round_cap && total > *options_.round_cap) {
    throw ContractViolation("batch of " + std::to_string(total) +
                            " queries exceeds the per-round query cap of " +
                            std::to_string(*options_.round_cap));
  }
  std::vector<BlockAnswers> answers(blocks.size());
  RunRound(
      blocks.size(),
      [&](std::size_t begin, std::size_t end, const BlockEmitter& emit) {
        for (std::size_t i = begin; i < end; ++i) emit(QueryBlock(blocks[i]));
      },
      [&](std::size_t i, const QueryBlock&, const BlockAnswers& a) {
        answers[i] = a;
      });
  return answers;
}

bool ReplayLedger(const QueryLedger& ledger, const IndependenceOracle& oracle) {
  if (ledger.detail() != LedgerDetail::kFull) {
    throw InputError("replay needs a full ledger");
  }
  bool consistent = true;
  for (const QueryLedger::Round& round : ledger.records()) {
    for (std::size_t i = 0; i < round.blocks.size(); ++i) {
      ForEachQuery(round.blocks[i], round.answers[i],
                   [&](const ElementSet& q, bool answer) {
                     if (oracle.IsIndependent(q) != answer) consistent = false;
                   });
    }
  }
  return consistent;
}

nlohmann::json LedgerToJson(const QueryLedger& ledger) {
  nlohmann::json out;
  out["detail"] = ledger.detail() == LedgerDetail::kFull ? "full" : "summary";
  if (ledger.detail() == LedgerDetail::kFull) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const QueryLedger::Round& round : ledger.records()) {
      nlohmann::json entries = nlohmann::json::array();
      for (std::size_t i = 0; i < round.blocks.size(); ++i) {
        ForEachQuery(round.blocks[i], round.answers[i],
                     [&](const ElementSet& q, bool answer) {
                       entries.push_back({{"query", q.ids()}, {"answer", answer}});
                     });
      }
      rounds.push_back(std::move(entries));
    }
    out["rounds"] = std::move(rounds);
  }
  out["queries_per_round"] = ledger.queries_per_round();
  out["summary"] = {{"rounds", ledger.rounds()},
                    {"max_queries_per_round", ledger.max_queries_per_round()},
                    {"total_queries", ledger.total_queries()}};
  return out;
}

std::uint64_t ExportedQueryIds(const QueryLedger& ledger) {
  std::uint64_t ids = 0;
  for (const QueryLedger::Round& round : ledger.records()) {
    for (const QueryBlock& block : round.blocks) {
      const std::uint64_t k = block.base.size();
      ids += block.shape == QueryShape::kSingle ? k : k * k;
    }
  }
  return ids;
}

void WriteLedgerJson(const QueryLedger& ledger, std::ostream& out) {
  const bool full = ledger.detail() == LedgerDetail::kFull;
  if (full && ExportedQueryIds(ledger) > kMaxExportedQueryIds) {
    throw CapacityError(
        "full ledger spells out " + std::to_string(ExportedQueryIds(ledger)) +
        " element ids (limit " + std::to_string(kMaxExportedQueryIds) +
        "); use summary detail");
  }
  // Keys in the order nlohmann uses, so both writers agree after parsing.
  out << "{\"detail\":\"" << (full ? "full" : "summary") << "\",\n";
  out << "\"queries_per_round\":"
      << nlohmann::json(ledger.queries_per_round()).dump() << ",\n";
  if (full) {
    out << "\"rounds\":[";
    bool first_round = true;
    for (const QueryLedger::Round& round : ledger.records()) {
      out << (first_round ? "\n[" : ",\n[");
      first_round = false;
      bool first = true;
      for (std::size_t i = 0; i < round.blocks.size(); ++i) {
        ForEachQuery(round.blocks[i], round.answers[i],
                     [&](const ElementSet& q, bool answer) {
                       out << (first ? "\n" : ",\n") << "{\"answer\":"
                           << (answer ? "true" : "false") << ",\"query\":[";
                       first = false;
                       for (std::size_t k = 0; k < q.size(); ++k) {
                         if (k > 0) out << ',';
                         out << q[k];
                       }
                       out << "]}";
                     });
      }
      out << "]";
    }
    out << "],\n";
  }
  out << "\"summary\":{\"max_queries_per_round\":"
      << ledger.max_queries_per_round() << ",\"rounds\":" << ledger.rounds()
      << ",\"total_queries\":" << ledger.total_queries() << "}}\n";
}

std::vector<std::vector<RecordedQuery>> RecordedRoundsFromJson(
    const nlohmann::json& ledger_json) {
  if (!ledger_json.contains("rounds") || !ledger_json["rounds"].is_array()) {
    throw InputError("ledger JSON has no 'rounds' array (summary ledger?)");
  }
  std::vector<std::vector<RecordedQuery>> rounds;
  for (const auto& round : ledger_json["rounds"]) {
    std::vector<RecordedQuery> queries;
    for (const auto& entry : round) {
      if (!entry.contains("query") || !entry.contains("answer")) {
        throw InputError("ledger entry lacks 'query' or 'answer'");
      }
      queries.push_back(RecordedQuery{
          ElementSet::FromUnsorted(entry["query"].get<std::vector<ElementId>>()),
          entry["answer"].get<bool>()});
    }
    rounds.push_back(std::move(queries));
  }
  return rounds;
}

namespace {

// SAX consumer for ledger documents. Depths: 1 document, 2 rounds array,
// 3 one round, 4 one entry, 5 the query ids.
class LedgerSax : public nlohmann::json_sax<nlohmann::json> {
 public:
  using Fn = std::function<void(std::size_t, const ElementSet&, bool)>;
  explicit LedgerSax(const Fn& fn) : fn_(fn) {}

  bool saw_rounds() const { return saw_rounds_; }

  bool null() override { return Scalar(); }
  bool boolean(bool value) override {
    if (depth_ == 4 && key_ == "answer") {
      answer_ = value;
      has_answer_ = true;
    }
    return Scalar();
  }
  bool number_integer(number_integer_t value) override {
    if (depth_ == 5 && in_query_) {
      if (value < 0) throw InputError("negative element id in ledger");
      ids_.push_back(static_cast<ElementId>(value));
    }
    return Scalar();
  }
  bool number_unsigned(number_unsigned_t value) override {
    if (depth_ == 5 && in_query_) ids_.push_back(static_cast<ElementId>(value));
    return Scalar();
  }
  bool number_float(number_float_t, const string_t&) override {
    if (depth_ == 5 && in_query_) throw InputError("non-integer element id in ledger");
    return Scalar();
  }
  bool string(string_t&) override { return Scalar(); }
  bool binary(binary_t&) override { return Scalar(); }

  bool start_object(std::size_t) override {
    ++depth_;
    if (depth_ == 4 && in_rounds_) {
      ids_.clear();
      has_query_ = has_answer_ = false;
    }
    key_.clear();
    return true;
  }
  bool key(string_t& name) override {
    key_ = name;
    return true;
  }
  bool end_object() override {
    if (depth_ == 4 && in_rounds_) {
      if (!has_query_ || !has_answer_) {
        throw InputError("ledger entry lacks 'query' or 'answer'");
      }
      fn_(round_, ElementSet::FromUnsorted(ids_), answer_);
    }
    --depth_;
    return true;
  }
  bool start_array(std::size_t) override {
    ++depth_;
    if (depth_ == 2 && key_ == "rounds") {
      in_rounds_ = saw_rounds_ = true;
    } else if (depth_ == 3 && in_rounds_) {
      ++round_;
    } else if (depth_ == 5 && in_rounds_ && key_ == "query") {
      in_query_ = has_query_ = true;
    }
    return true;
  }
  bool end_array() override {
    if (depth_ == 2) in_rounds_ = false;
    if (depth_ == 5) in_query_ = false;
    --depth_;
    return true;
  }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception& e) override {
    throw InputError(std::string("ledger JSON: ") + e.what());
  }

 private:
  bool Scalar() { return true; }

  const Fn& fn_;
  int depth_ = 0;
  std::string key_;
  bool in_rounds_ = false;
  bool saw_rounds_ = false;
  bool in_query_ = false;
  bool has_query_ = false;
  bool has_answer_ = false;
  bool answer_ = false;
  std::size_t round_ = 0;
  std::vector<ElementId> ids_;
};

}  // namespace

void ForEachRecordedQuery(
    std::istream& in,
    const std::function<void(std::size_t, const ElementSet&, bool)>& fn) {
  LedgerSax sax(fn);
  nlohmann::json::sax_parse(in, &sax);
  if (!sax.saw_rounds()) {
    throw InputError("ledger JSON has no 'rounds' array (summary ledger?)");
  }
}

}  // namespace parbasis
