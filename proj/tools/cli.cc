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


#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parbasis/derand.h"
#include "parbasis/errors.h"
#include "parbasis/generators.h"
#include "parbasis/hardness.h"
#include "parbasis/instance_io.h"
#include "parbasis/parallel.h"
#include "parbasis/query_ledger.h"
#include "parbasis/solver.h"
#include "parbasis/truth.h"

namespace parbasis {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Ledgers of larger runs are summarized unless asked otherwise.
constexpr std::size_t kAutoFullLedgerLimit = 32;

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  unsigned threads = 0;
  std::optional<std::uint64_t> round_cap;
};

struct SolverFlags {
  std::size_t g0 = 4;
  double c1 = 1.0;
  std::string repetitions = "scaled:64";
  double growth = 2.0;
  std::size_t fallback = 12;
  std::uint64_t budget = 10'000'000;
  bool no_probe = false;
  bool no_clamp = false;
  unsigned retries = 0;

  void Register(CLI::App* app) {
    app->add_option("--g0", g0, "Initial enumeration girth")
        ->capture_default_str();
    app->add_option("--c1", c1, "Sampling exponent: p^ell = m^-c1")
        ->capture_default_str();
    app->add_option("--repetitions", repetitions,
                    "Samples per isolation round: scaled:F, linear:F, fixed:N")
        ->capture_default_str();
    app->add_option("--growth", growth, "Girth growth factor g")
        ->capture_default_str();
    app->add_option("--fallback", fallback,
                    "Greedy scan once the live set is this small")
        ->capture_default_str();
    app->add_option("--budget", budget, "Subset budget of the first round")
        ->capture_default_str();
    app->add_flag("--no-probe", no_probe,
                  "Do not add Ind(live) to each round");
    app->add_flag("--no-clamp", no_clamp,
                  "Fail instead of lowering g0 to fit the budget");
    app->add_option("--retries", retries,
                    "Re-run with seed+1, seed+2, ... while verification fails")
        ->capture_default_str();
  }

  SolverConfig Build(std::uint64_t seed) const {
    SolverConfig config;
    config.initial_girth = g0;
    config.enumeration_budget = budget;
    config.clamp_initial_girth = !no_clamp;
    config.small_fallback_threshold = fallback;
    config.probe_live_independence = !no_probe;
    config.isolation.sampling_exponent = c1;
    config.isolation.repetitions = RepetitionPolicy::Parse(repetitions);
    config.isolation.growth_factor = growth;
    config.isolation.rng_seed = seed;
    config.Validate();
    return config;
  }
};

std::uint64_t RequireSeed(const GlobalFlags& global, const std::string& what) {
  if (!global.seed.has_value()) {
    throw InputError(what + " needs --seed");
  }
  return *global.seed;
}

std::string InDir(const GlobalFlags& global, const std::string& name) {
  return (fs::path(global.out_dir) / name).string();
}

std::string Stem(const std::string& path) {
  return fs::path(path).stem().string();
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void WriteJson(const std::string& path, const json& value) {
  WriteFileAtomically(path, value.dump(1) + "\n");
}

// --- gen -------------------------------------------------------------------

struct GenFlags {
  std::string kind;
  std::string input;
  std::string output;
  std::uint32_t n = 0;
  std::size_t m = 0;
  std::size_t r = 0;
  double density = 0.5;
  bool loops = false;
  std::uint32_t L = 16;
  std::uint32_t gamma = 4;
  std::uint32_t levels = 0;
  std::uint32_t base = 0;
  std::optional<std::size_t> pad;
};

int CmdGen(const GenFlags& flags, const GlobalFlags& global,
           std::ostream& out) {
  std::optional<MatroidInstance> instance;
  std::optional<LayerMap> layers;
  std::string name;
  const std::string& kind = flags.kind;
  if (kind == "cycle" || kind == "complete" || kind == "path") {
    if (flags.n == 0) throw InputError(kind + " needs --n >= 1");
    if (kind == "cycle") instance.emplace(CycleGraph(flags.n));
    if (kind == "complete") instance.emplace(CompleteGraph(flags.n));
    if (kind == "path") instance.emplace(PathGraph(flags.n));
    name = kind + "_n" + std::to_string(flags.n);
  } else if (kind == "random-graph") {
    const std::uint64_t seed = RequireSeed(global, "gen random-graph");
    if (flags.n == 0) throw InputError("random-graph needs --n >= 1");
    instance.emplace(RandomMultigraph(flags.n, flags.m, seed, flags.loops));
    name = "random_n" + std::to_string(flags.n) + "_m" +
           std::to_string(flags.m) + "_s" + std::to_string(seed);
  } else if (kind == "binary-random") {
    const std::uint64_t seed = RequireSeed(global, "gen binary-random");
    instance.emplace(RandomBinary(flags.m, flags.r, flags.density, seed));
    name = "binary_m" + std::to_string(flags.m) + "_r" +
           std::to_string(flags.r) + "_s" + std::to_string(seed);
  } else if (kind == "hard") {
    HardInstanceParams params;
    params.L = flags.L;
    params.gamma = flags.gamma;
    params.levels = flags.levels;
    params.base = flags.base;
    params.pad_to = flags.pad;
    params.label_seed = RequireSeed(global, "gen hard");
    HardInstance hard = GenHardInstance(params);
    instance.emplace(std::move(hard.graph));
    layers = std::move(hard.layers);
    name = "hard_L" + std::to_string(flags.L) + "_g" +
           std::to_string(flags.gamma) + "_l" +
           std::to_string(layers->levels()) + "_s" +
           std::to_string(params.label_seed);
  } else if (kind == "cographic-of") {
    if (flags.input.empty()) throw InputError("cographic-of needs an input file");
    const MatroidInstance source = ReadInstanceFile(flags.input);
    if (source.kind() != MatroidKind::kGraphic) {
      throw InputError("cographic-of needs a graphic instance");
    }
    instance.emplace(CographicInstance{source.graphic()});
    name = "cographic_of_" + Stem(flags.input);
  } else {
    throw CLI::ValidationError("kind", "unknown kind '" + kind + "'");
  }

  const std::string path =
      flags.output.empty() ? InDir(global, name + ".inst") : flags.output;
  WriteFileAtomically(path, FormatInstance(*instance));
  out << path << "\n";
  if (layers.has_value()) {
    WriteJson(path + ".layers.json", layers->ToJson());
    out << path << ".layers.json\n";
  }
  return kExitOk;
}

// --- run -------------------------------------------------------------------

struct RunFlags {
  std::string instance;
  std::string report;
  std::string ledger;
  std::string ledger_detail = "auto";
  std::string family_file;
  SolverFlags solver;
};

FamilyTable LoadFamilyTable(const std::string& path) {
  const json doc = ReadJsonFile(path);
  FamilyTable table;
  auto add = [&](const json& entry) {
    table.Add(FamilyFromJson(entry.contains("family") ? entry.at("family")
                                                      : entry));
  };
  if (doc.is_array()) {
    for (const json& entry : doc) add(entry);
  } else {
    add(doc);
  }
  return table;
}

int CmdRun(const RunFlags& flags, const GlobalFlags& global, std::ostream& out,
           std::ostream& err) {
  const std::uint64_t seed = RequireSeed(global, "run");
  const MatroidInstance instance = ReadInstanceFile(flags.instance);
  SolverConfig config = flags.solver.Build(seed);
  std::optional<FamilyTable> table;
  if (!flags.family_file.empty()) {
    table = LoadFamilyTable(flags.family_file);
    config.families = &*table;
  }
  LedgerOptions ledger_options;
  ledger_options.round_cap = global.round_cap;
  if (flags.ledger_detail == "full") {
    ledger_options.detail = LedgerDetail::kFull;
  } else if (flags.ledger_detail == "summary") {
    ledger_options.detail = LedgerDetail::kSummary;
  } else {
    ledger_options.detail = instance.size() <= kAutoFullLedgerLimit
                                ? LedgerDetail::kFull
                                : LedgerDetail::kSummary;
  }

  const SolveResult result = FindBasisWithRetries(
      instance, config, flags.solver.retries, ledger_options);
  const std::string stem = Stem(flags.instance);
  const std::string report_path =
      flags.report.empty() ? InDir(global, stem + ".report.json") : flags.report;
  const std::string ledger_path =
      flags.ledger.empty() ? InDir(global, stem + ".ledger.json") : flags.ledger;
  WriteFileAtomically(ledger_path, [&](std::ostream& stream) {
    WriteLedgerJson(result.ledger, stream);
  });
  WriteJson(report_path, ReportToJson(result.report));
  out << "basis size " << result.report.basis.size() << ", rounds "
      << result.report.rounds << ", max queries/round "
      << result.report.max_queries_per_round << ", total queries "
      << result.report.total_queries << "\n";
  if (!result.report.success) {
    err << "verification failed: " << result.report.failure << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyFlags {
  std::string instance;
  std::string check;
  std::vector<unsigned> alphas;
  std::string report;
};

int CmdVerify(const VerifyFlags& flags, std::ostream& out) {
  const MatroidInstance instance = ReadInstanceFile(flags.instance);
  json result = json::object();
  bool pass = true;

  if (!flags.report.empty()) {
    const SolveReport report = ReportFromJson(ReadJsonFile(flags.report));
    const bool ok = VerifyBasis(instance, report.basis);
    bool partition_ok = true;
    if (ok && instance.kind() == MatroidKind::kGraphic) {
      partition_ok =
          ComponentLabels(instance.graphic(), report.basis) ==
          ComponentLabels(instance.graphic(), ElementSet::Range(instance.size()));
    }
    result["report"] = {{"basis_valid", ok},
                        {"component_partition_matches", partition_ok}};
    pass = pass && ok && partition_ok;
  }

  const std::string check =
      flags.check.empty() ? (flags.report.empty() ? "all" : "") : flags.check;
  if (!check.empty()) {
    const CircuitCatalog catalog = EnumerateCircuits(instance);
    result["circuits"] = catalog.circuits.size();
    result["girth"] = catalog.girth.has_value() ? json(*catalog.girth) : json();
    if (check == "counting" || check == "all") {
      std::vector<unsigned> alphas = flags.alphas;
      if (alphas.empty()) alphas = {1, 2, 3};
      json counting = json::object();
      for (unsigned alpha : alphas) {
        if (catalog.circuits.empty()) {
          counting[std::to_string(alpha)] = "vacuous";
          continue;
        }
        const bool ok = CheckCountingBound(catalog, instance.size(), alpha);
        counting[std::to_string(alpha)] = ok;
        pass = pass && ok;
      }
      result["counting"] = counting;
    }
    if (check == "overlap" || check == "all") {
      const bool ok = CheckOverlapLemma(catalog);
      result["overlap"] = ok;
      pass = pass && ok;
    }
    if (check == "xor" || check == "all") {
      const bool ok = CheckXorClosure(catalog, instance);
      result["xor"] = ok;
      pass = pass && ok;
    }
    if (check != "counting" && check != "overlap" && check != "xor" &&
        check != "all") {
      throw CLI::ValidationError("--check", "unknown check '" + check + "'");
    }
  }
  result["pass"] = pass;
  out << result.dump(1) << "\n";
  return pass ? kExitOk : kExitFailure;
}

// --- bench -----------------------------------------------------------------

struct BenchFlags {
  std::string family = "cycle";
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::uint32_t gamma = 4;
  std::uint32_t levels = 0;
  std::string output;
  SolverFlags solver;
};

int CmdBench(const BenchFlags& flags, const GlobalFlags& global,
             std::ostream& out) {
  BenchOptions options;
  options.family = flags.family;
  options.sizes = flags.sizes;
  options.seeds = flags.seeds;
  if (options.seeds.empty()) {
    options.seeds.push_back(RequireSeed(global, "bench"));
  }
  options.gamma = flags.gamma;
  options.levels = flags.levels;
  options.solver = flags.solver.Build(options.seeds.front());
  options.ledger.round_cap = global.round_cap;
  // Reject an unknown family before any work.
  if (!options.sizes.empty()) BenchInstance(options, 1, 0);
  const std::string csv = BenchToCsv(BenchRounds(options));
  if (flags.output.empty()) {
    out << csv;
  } else {
    WriteFileAtomically(flags.output, csv);
    out << flags.output << "\n";
  }
  return kExitOk;
}

// --- derand ----------------------------------------------------------------

struct DerandFlags {
  std::size_t m = 5;
  std::size_t ell = 2;
  double growth = 1.5;
  std::size_t family_size = 0;
  std::uint64_t budget = 10'000;
  std::size_t max_vertices = 5;
  double c1 = 0.5;
  std::string verify;
  std::string output;
};

json UniverseJson(const GraphUniverse& universe) {
  return {{"m", universe.m},
          {"max_vertices", universe.max_vertices},
          {"girth", universe.girth},
          {"growth", universe.growth},
          {"graphs_visited", universe.graphs_visited},
          {"matroids", universe.members.size()},
          {"targets", universe.TargetCount()}};
}

int CmdDerand(const DerandFlags& flags, const GlobalFlags& global,
              std::ostream& out) {
  json result;
  bool ok = false;
  if (!flags.verify.empty()) {
    const json doc = ReadJsonFile(flags.verify);
    UniversalFamily family =
        FamilyFromJson(doc.contains("family") ? doc.at("family") : doc);
    const GraphUniverse universe = BuildGraphUniverse(
        family.m, flags.max_vertices, family.girth, family.growth);
    const FamilyVerdict verdict = VerifyUniversalFamily(family, universe);
    family.verified = verdict.universal;
    ok = verdict.universal;
    result = {{"universe", UniverseJson(universe)},
              {"verdict", VerdictToJson(verdict)},
              {"family", FamilyToJson(family)}};
  } else {
    SearchOptions options;
    options.family_size = flags.family_size;
    options.budget = flags.budget;
    options.seed = RequireSeed(global, "derand");
    options.sampling_exponent = flags.c1;
    const GraphUniverse universe =
        BuildGraphUniverse(flags.m, flags.max_vertices, flags.ell, flags.growth);
    const SearchResult search = SearchUniversalFamily(universe, options);
    ok = search.family.has_value();
    result = {{"found", ok},
              {"candidates_tried", search.candidates_tried},
              {"best_coverage", search.best_coverage},
              {"seed", options.seed},
              {"universe", UniverseJson(universe)}};
    if (ok) result["family"] = FamilyToJson(*search.family);
  }
  const std::string path =
      flags.output.empty()
          ? InDir(global, "derand_m" + std::to_string(flags.m) + "_l" +
                              std::to_string(flags.ell) + ".json")
          : flags.output;
  WriteJson(path, result);
  out << path << "\n";
  return ok ? kExitOk : kExitFailure;
}

// --- analyze-locality ------------------------------------------------------

struct LocalityFlags {
  std::string ledger;
  std::string layers;
  std::optional<double> c;
  bool per_query = false;
  std::string output;
};

int CmdAnalyzeLocality(const LocalityFlags& flags, const GlobalFlags& global,
                       std::ostream& out) {
  const LayerMap layers = LayerMap::FromJson(ReadJsonFile(flags.layers));
  // Ledgers can be large; they are streamed twice instead of loaded.
  auto stream_ledger = [&](const auto& fn) {
    std::ifstream in(flags.ledger);
    if (!in) throw InputError("cannot open " + flags.ledger);
    ForEachRecordedQuery(in, fn);
  };
  double c = 0.0;
  if (flags.c.has_value()) {
    c = *flags.c;
  } else {
    std::uint64_t cap = 0;
    if (global.round_cap.has_value()) {
      cap = *global.round_cap;
    } else {
      std::vector<std::uint64_t> sizes;
      stream_ledger([&](std::size_t round, const ElementSet&, bool) {
        if (sizes.size() < round) sizes.resize(round, 0);
        ++sizes[round - 1];
      });
      for (std::uint64_t size : sizes) cap = std::max(cap, size);
    }
    c = LocalityExponent(cap, layers.L());
  }
  LocalityClassifier classifier(layers, c, flags.per_query);
  stream_ledger([&](std::size_t round, const ElementSet& query, bool) {
    classifier.Record(round, query);
  });
  const LocalityVerdict& verdict = classifier.verdict();
  const json result = VerdictToJson(verdict);
  if (flags.output.empty()) {
    out << result.dump(1) << "\n";
  } else {
    WriteJson(flags.output, result);
    out << flags.output << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Parallel basis finding with independence oracles"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags global;
  app.add_option("--seed", global.seed, "Random seed (required where used)");
  app.add_option("--out-dir", global.out_dir, "Directory for default outputs")
      ->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads; 0 = all cores")
      ->capture_default_str();
  app.add_option("--round-cap", global.round_cap,
                 "Maximum oracle queries in one round");

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("kind", gen.kind,
                      "cycle, complete, path, random-graph, hard, "
                      "cographic-of, binary-random")
      ->required();
  gen_cmd->add_option("input", gen.input, "Source graph for cographic-of");
  gen_cmd->add_option("-o,--output", gen.output, "Output instance path");
  gen_cmd->add_option("--n", gen.n, "Vertices");
  gen_cmd->add_option("--m", gen.m, "Edges or columns");
  gen_cmd->add_option("--r", gen.r, "Dimension of binary columns");
  gen_cmd->add_option("--density", gen.density, "Bit density of binary columns")
      ->capture_default_str();
  gen_cmd->add_flag("--loops", gen.loops, "Allow self-loops in random graphs");
  gen_cmd->add_option("--L", gen.L, "Cycles per layer")->capture_default_str();
  gen_cmd->add_option("--gamma", gen.gamma, "Layer growth")
      ->capture_default_str();
  gen_cmd->add_option("--levels", gen.levels, "Layers; 0 = floor(log_gamma(L)/2)")
      ->capture_default_str();
  gen_cmd->add_option("--base", gen.base, "Level-1 cycle length; 0 = round(sqrt(L))");
  gen_cmd->add_option("--pad", gen.pad, "Pad with isolated edges to this size");

  RunFlags run;
  CLI::App* run_cmd = app.add_subcommand("run", "Find a basis");
  run_cmd->add_option("instance", run.instance, "Instance file")->required();
  run_cmd->add_option("--report", run.report, "Report JSON path");
  run_cmd->add_option("--ledger", run.ledger, "Ledger JSON path");
  run_cmd->add_option("--ledger-detail", run.ledger_detail,
                      "full, summary, or auto (full up to 32 elements)")
      ->check(CLI::IsMember({"full", "summary", "auto"}))
      ->capture_default_str();
  run_cmd->add_option("--family-file", run.family_file,
                      "Universal families (derand output) to use instead of "
                      "random samples");
  run.solver.Register(run_cmd);

  VerifyFlags verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check structural claims or a report");
  verify_cmd->add_option("instance", verify.instance, "Instance file")
      ->required();
  verify_cmd->add_option("--check", verify.check,
                         "counting, overlap, xor or all")
      ->check(CLI::IsMember({"counting", "overlap", "xor", "all"}));
  verify_cmd->add_option("--alpha", verify.alphas,
                         "Counting-bound alpha (repeatable; default 1,2,3)");
  verify_cmd->add_option("--report", verify.report,
                         "Re-verify the basis of a run report");

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Round-scaling table");
  bench_cmd->add_option("--family", bench.family,
                        "cycle, complete, path, random-graph, hard")
      ->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--seeds", bench.seeds,
                        "Comma-separated seeds (default: --seed)")
      ->delimiter(',');
  bench_cmd->add_option("--gamma", bench.gamma, "Hard family layer growth")
      ->capture_default_str();
  bench_cmd->add_option("--levels", bench.levels, "Hard family layers")
      ->capture_default_str();
  bench_cmd->add_option("-o,--output", bench.output, "CSV path (default stdout)");
  bench.solver.Register(bench_cmd);

  DerandFlags derand;
  CLI::App* derand_cmd =
      app.add_subcommand("derand", "Search or verify a universal query family");
  derand_cmd->add_option("--m", derand.m, "Elements")->capture_default_str();
  derand_cmd->add_option("--ell", derand.ell, "Girth threshold")
      ->capture_default_str();
  derand_cmd->add_option("--growth", derand.growth, "Growth factor g")
      ->capture_default_str();
  derand_cmd->add_option("--family-size", derand.family_size,
                         "Sets per candidate; 0 = 2^m")
      ->capture_default_str();
  derand_cmd->add_option("--budget", derand.budget, "Candidate families")
      ->capture_default_str();
  derand_cmd->add_option("--max-vertices", derand.max_vertices,
                         "Vertex bound of the graph universe")
      ->capture_default_str();
  derand_cmd->add_option("--c1", derand.c1, "Sampling exponent")
      ->capture_default_str();
  derand_cmd->add_option("--verify", derand.verify,
                         "Verify this family file instead of searching");
  derand_cmd->add_option("-o,--output", derand.output, "Output JSON path");

  LocalityFlags locality;
  CLI::App* locality_cmd = app.add_subcommand(
      "analyze-locality", "Classify ledger queries on a hard instance");
  locality_cmd->add_option("ledger", locality.ledger, "Full ledger JSON")
      ->required();
  locality_cmd->add_option("--layers", locality.layers, "Layer-map sidecar")
      ->required();
  locality_cmd->add_option("--c", locality.c,
                           "Exponent c (default: q = L^c from the round cap "
                           "or the largest round)");
  locality_cmd->add_flag("--per-query", locality.per_query,
                         "Include every query's verdict");
  locality_cmd->add_option("-o,--output", locality.output,
                           "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    SetThreadCount(global.threads);
    if (*gen_cmd) return CmdGen(gen, global, out);
    if (*run_cmd) return CmdRun(run, global, out, err);
    if (*verify_cmd) return CmdVerify(verify, out);
    if (*bench_cmd) return CmdBench(bench, global, out);
    if (*derand_cmd) return CmdDerand(derand, global, out);
    if (*locality_cmd) return CmdAnalyzeLocality(locality, global, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInput;
}

}  // namespace parbasis
