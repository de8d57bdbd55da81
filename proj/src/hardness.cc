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


#include "parbasis/hardness.h"

#include <cmath>
#include <numeric>
#include <sstream>

#include "parbasis/errors.h"
#include "parbasis/generators.h"
#include "parbasis/random.h"

namespace parbasis {
namespace {

constexpr std::size_t kMaxHardEdges = std::size_t{1} << 28;

}  // namespace

std::uint32_t DefaultLevels(std::uint32_t L, std::uint32_t gamma) {
  if (L == 0 || gamma < 2) throw InputError("need L >= 1 and gamma >= 2");
  // floor(log_gamma(L) / 2) = largest k with gamma^(2k) <= L.
  std::uint32_t k = 0;
  std::uint64_t power = static_cast<std::uint64_t>(gamma) * gamma;
  while (power <= L) {
    ++k;
    power *= static_cast<std::uint64_t>(gamma) * gamma;
  }
  return std::max<std::uint32_t>(1, k);
}

std::uint32_t HardBase(std::uint32_t L) {
  return static_cast<std::uint32_t>(std::llround(std::sqrt(static_cast<double>(L))));
}

LayerMap::LayerMap(std::uint32_t L, std::vector<std::size_t> cycle_lengths,
                   std::vector<std::uint32_t> layer,
                   std::vector<std::uint32_t> cycle)
    : L_(L),
      cycle_lengths_(std::move(cycle_lengths)),
      layer_(std::move(layer)),
      cycle_(std::move(cycle)) {
  if (layer_.size() != cycle_.size()) {
    throw InputError("layer map arrays differ in length");
  }
  std::vector<std::vector<std::size_t>> counts(cycle_lengths_.size(),
                                               std::vector<std::size_t>(L_));
  for (std::size_t e = 0; e < layer_.size(); ++e) {
    if (layer_[e] == 0) continue;
    if (layer_[e] > cycle_lengths_.size() || cycle_[e] >= L_) {
      throw InputError("layer map entry " + std::to_string(e) +
                       " is out of range");
    }
    ++counts[layer_[e] - 1][cycle_[e]];
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t count : counts[i]) {
      if (count != cycle_lengths_[i]) {
        throw InputError("layer map cycle sizes disagree with cycle lengths");
      }
    }
  }
}

nlohmann::json LayerMap::ToJson() const {
  return {{"L", L_},
          {"cycle_lengths", cycle_lengths_},
          {"layer", layer_},
          {"cycle", cycle_}};
}

LayerMap LayerMap::FromJson(const nlohmann::json& json) {
  try {
    return LayerMap(json.at("L").get<std::uint32_t>(),
                    json.at("cycle_lengths").get<std::vector<std::size_t>>(),
                    json.at("layer").get<std::vector<std::uint32_t>>(),
                    json.at("cycle").get<std::vector<std::uint32_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed layer map: ") + e.what());
  }
}

HardInstance GenHardInstance(const HardInstanceParams& params) {
  if (params.L == 0) throw InputError("L must be positive");
  if (params.gamma < 2) throw InputError("gamma must be at least 2");
  const std::uint32_t levels = params.levels != 0
                                   ? params.levels
                                   : DefaultLevels(params.L, params.gamma);
  const std::uint32_t base =
      params.base != 0 ? params.base : HardBase(params.L);

  std::vector<std::size_t> lengths;
  std::size_t total = 0;
  std::size_t length = base;
  for (std::uint32_t i = 0; i < levels; ++i) {
    if (i > 0) length *= params.gamma;
    if (length > kMaxHardEdges / params.L ||
        total + length * params.L > kMaxHardEdges) {
      throw InputError("hard instance would exceed " +
                       std::to_string(kMaxHardEdges) + " edges");
    }
    lengths.push_back(length);
    total += length * params.L;
  }
  std::size_t m = total;
  if (params.pad_to.has_value()) {
    if (*params.pad_to < total) {
      throw InputError("pad_to " + std::to_string(*params.pad_to) +
                       " is below the " + std::to_string(total) +
                       " edges of the cycles");
    }
    if (*params.pad_to > kMaxHardEdges) {
      throw InputError("pad_to is too large");
    }
    m = *params.pad_to;
  }

  // Unlabeled construction, position k.
  std::vector<Edge> edges;
  std::vector<std::uint32_t> layer;
  std::vector<std::uint32_t> cycle;
  edges.reserve(m);
  std::uint32_t next_vertex = 0;
  for (std::uint32_t i = 0; i < levels; ++i) {
    for (std::uint32_t c = 0; c < params.L; ++c) {
      const std::uint32_t first = next_vertex;
      const auto len = static_cast<std::uint32_t>(lengths[i]);
      for (std::uint32_t k = 0; k < len; ++k) {
        edges.push_back({first + k, first + (k + 1) % len});
        layer.push_back(i + 1);
        cycle.push_back(c);
      }
      next_vertex += len;
    }
  }
  while (edges.size() < m) {
    edges.push_back({next_vertex, next_vertex + 1});
    layer.push_back(0);
    cycle.push_back(0);
    next_vertex += 2;
  }

  // Position k becomes element label[k].
  std::vector<ElementId> label(m);
  std::iota(label.begin(), label.end(), ElementId{0});
  Rng rng(StreamKey(params.label_seed, 0x68617264, m));
  rng.Shuffle(label);

  HardInstance out;
  out.graph.num_vertices = std::max<std::uint32_t>(next_vertex, 1);
  out.graph.edges.resize(m);
  std::vector<std::uint32_t> layer_of(m);
  std::vector<std::uint32_t> cycle_of(m);
  for (std::size_t k = 0; k < m; ++k) {
    out.graph.edges[label[k]] = edges[k];
    layer_of[label[k]] = layer[k];
    cycle_of[label[k]] = cycle[k];
  }
  out.layers = LayerMap(params.L, std::move(lengths), std::move(layer_of),
                        std::move(cycle_of));
  return out;
}

std::string LocalityName(Locality verdict) {
  switch (verdict) {
    case Locality::kLocalByCycle:
      return "LocalByCycle";
    case Locality::kLocalBySize:
      return "LocalBySize";
    case Locality::kNonLocal:
      return "NonLocal";
  }
  return "?";
}

double RoundLocality::LocalFraction() const {
  const std::uint64_t n = total();
  return n == 0 ? 1.0
                : static_cast<double>(local_by_cycle + local_by_size) / n;
}

LocalityClassifier::LocalityClassifier(const LayerMap& layers, double c,
                                       bool keep_queries)
    : layers_(layers), keep_queries_(keep_queries) {
  if (!(c >= 0.0)) throw InputError("locality exponent must be >= 0");
  verdict_.c = c;
  const std::uint32_t levels = layers.levels();
  suffix_sizes_.assign(levels + 2, 0);
  for (std::uint32_t i = levels; i >= 1; --i) {
    suffix_sizes_[i] =
        suffix_sizes_[i + 1] + layers.cycle_length(i) * layers.L();
  }
  global_cycle_offset_.assign(levels + 1, 0);
  for (std::uint32_t i = 1; i <= levels; ++i) {
    global_cycle_offset_[i] = global_cycle_offset_[i - 1] + layers.L();
  }
}

Locality LocalityClassifier::Classify(std::size_t round,
                                      const ElementSet& query) const {
  const std::uint32_t levels = layers_.levels();
  const std::uint32_t L = layers_.L();
  // Hits per cycle (global index (layer - 1) * L + cycle) and per layer.
  thread_local std::vector<std::size_t> cycle_hits;
  thread_local std::vector<std::size_t> touched;
  cycle_hits.assign(static_cast<std::size_t>(levels) * L, 0);
  touched.clear();
  std::vector<std::size_t> layer_hits(levels + 2, 0);
  for (ElementId e : query) {
    if (e >= layers_.size()) {
      throw InputError("query element " + std::to_string(e) +
                       " is outside the layer map");
    }
    const std::uint32_t i = layers_.layer(e);
    if (i == 0) continue;
    ++layer_hits[i];
    const std::size_t g = global_cycle_offset_[i - 1] + layers_.cycle(e);
    ++cycle_hits[g];
  }
  const auto j = static_cast<std::uint32_t>(
      std::min<std::size_t>(round, levels + 1));
  bool dependent_above = false;
  bool cycle_in_j = false;
  for (std::uint32_t i = std::max<std::uint32_t>(j, 1); i <= levels; ++i) {
    if (layer_hits[i] < layers_.cycle_length(i)) continue;
    for (std::uint32_t c = 0; c < L; ++c) {
      if (cycle_hits[global_cycle_offset_[i - 1] + c] ==
          layers_.cycle_length(i)) {
        dependent_above = true;
        if (i == j) cycle_in_j = true;
        break;
      }
    }
  }
  if (dependent_above) {
    return cycle_in_j ? Locality::kLocalByCycle : Locality::kNonLocal;
  }
  const double log_l = std::log(static_cast<double>(L));
  std::size_t in_suffix = 0;
  for (std::uint32_t i = levels; i > j; --i) {
    in_suffix += layer_hits[i];
    const double shrink = 100.0 * verdict_.c * log_l /
                          static_cast<double>(layers_.cycle_length(i));
    const double bound =
        std::max(0.0, 1.0 - shrink) * static_cast<double>(suffix_sizes_[i]);
    if (static_cast<double>(in_suffix) > bound) return Locality::kNonLocal;
  }
  return Locality::kLocalBySize;
}

void LocalityClassifier::Record(std::size_t round, const ElementSet& query) {
  const Locality v = Classify(round, query);
  if (verdict_.rounds.size() < round) verdict_.rounds.resize(round);
  RoundLocality& counts = verdict_.rounds[round - 1];
  switch (v) {
    case Locality::kLocalByCycle:
      ++counts.local_by_cycle;
      break;
    case Locality::kLocalBySize:
      ++counts.local_by_size;
      break;
    case Locality::kNonLocal:
      ++counts.non_local;
      break;
  }
  if (keep_queries_) {
    if (verdict_.queries.size() < round) verdict_.queries.resize(round);
    verdict_.queries[round - 1].push_back(v);
  }
}

LocalityVerdict ClassifyLocality(const QueryLedger& ledger,
                                 const LayerMap& layers, double c,
                                 bool keep_queries) {
  if (ledger.detail() != LedgerDetail::kFull) {
    throw InputError("locality analysis needs a full ledger");
  }
  LocalityClassifier classifier(layers, c, keep_queries);
  const auto& records = ledger.records();
  for (std::size_t r = 0; r < records.size(); ++r) {
    for (std::size_t b = 0; b < records[r].blocks.size(); ++b) {
      ForEachQuery(records[r].blocks[b], records[r].answers[b],
                   [&](const ElementSet& q, bool) { classifier.Record(r + 1, q); });
    }
  }
  LocalityVerdict verdict = classifier.verdict();
  verdict.rounds.resize(records.size());
  if (keep_queries) verdict.queries.resize(records.size());
  return verdict;
}

LocalityVerdict ClassifyLocality(
    const std::vector<std::vector<RecordedQuery>>& rounds,
    const LayerMap& layers, double c, bool keep_queries) {
  LocalityClassifier classifier(layers, c, keep_queries);
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    for (const RecordedQuery& q : rounds[r]) classifier.Record(r + 1, q.query);
  }
  LocalityVerdict verdict = classifier.verdict();
  verdict.rounds.resize(rounds.size());
  if (keep_queries) verdict.queries.resize(rounds.size());
  return verdict;
}

double LocalityExponent(std::uint64_t queries_per_round, std::uint32_t L) {
  if (L < 2) throw InputError("locality exponent needs L >= 2");
  if (queries_per_round <= 1) return 0.0;
  return std::log(static_cast<double>(queries_per_round)) /
         std::log(static_cast<double>(L));
}

nlohmann::json VerdictToJson(const LocalityVerdict& verdict) {
  nlohmann::json rounds = nlohmann::json::array();
  for (std::size_t r = 0; r < verdict.rounds.size(); ++r) {
    const RoundLocality& counts = verdict.rounds[r];
    rounds.push_back({{"round", r + 1},
                      {"local_by_cycle", counts.local_by_cycle},
                      {"local_by_size", counts.local_by_size},
                      {"non_local", counts.non_local},
                      {"local_fraction", counts.LocalFraction()}});
  }
  nlohmann::json out = {{"c", verdict.c}, {"rounds", rounds}};
  if (!verdict.queries.empty()) {
    nlohmann::json queries = nlohmann::json::array();
    for (const auto& round : verdict.queries) {
      nlohmann::json names = nlohmann::json::array();
      for (Locality v : round) names.push_back(LocalityName(v));
      queries.push_back(std::move(names));
    }
    out["queries"] = std::move(queries);
  }
  return out;
}

MatroidInstance BenchInstance(const BenchOptions& options, std::size_t size,
                              std::uint64_t seed) {
  const auto n = static_cast<std::uint32_t>(size);
  if (options.family == "cycle") return MatroidInstance(CycleGraph(n));
  if (options.family == "complete") return MatroidInstance(CompleteGraph(n));
  if (options.family == "path") return MatroidInstance(PathGraph(n));
  if (options.family == "random-graph") {
    return MatroidInstance(RandomMultigraph(std::max<std::uint32_t>(n, 2), size, seed));
  }
  if (options.family == "hard") {
    HardInstanceParams params;
    params.L = n;
    params.gamma = options.gamma;
    params.levels = options.levels;
    params.label_seed = seed;
    return MatroidInstance(GenHardInstance(params).graph);
  }
  throw InputError("unknown bench family '" + options.family + "'");
}

std::vector<BenchRow> BenchRounds(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (std::size_t size : options.sizes) {
    for (std::uint64_t seed : options.seeds) {
      BenchRow row;
      row.family = options.family;
      row.size = size;
      row.seed = seed;
      if (options.family == "hard") {
        row.levels = options.levels != 0
                         ? options.levels
                         : DefaultLevels(static_cast<std::uint32_t>(size),
                                         options.gamma);
      }
      try {
        const MatroidInstance instance = BenchInstance(options, size, seed);
        row.m = instance.size();
        SolverConfig config = options.solver;
        config.isolation.rng_seed = seed;
        const SolveResult result = FindBasis(instance, config, options.ledger);
        row.rounds = result.report.rounds;
        row.max_queries_per_round = result.report.max_queries_per_round;
        row.total_queries = result.report.total_queries;
        row.success = result.report.success;
        row.failure = result.report.failure;
      } catch (const std::exception& e) {
        row.success = false;
        row.failure = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string BenchToCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,size,seed,m,rounds,max_qpr,total_queries,success,levels\n";
  for (const BenchRow& row : rows) {
    out << row.family << ',' << row.size << ',' << row.seed << ',' << row.m
        << ',' << row.rounds << ',' << row.max_queries_per_round << ','
        << row.total_queries << ',' << (row.success ? 1 : 0) << ',';
    if (row.levels.has_value()) out << *row.levels;
    out << '\n';
  }
  return out.str();
}

}  // namespace parbasis
