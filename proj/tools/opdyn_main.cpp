// Command-line front end.  Everything goes through the C API so the tool
// doubles as its reference client.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opdyn.h"

namespace {

[[noreturn]] void die(opdyn_status st) {
  std::fprintf(stderr, "error: %s\n", opdyn_last_error());
  std::exit(st == OPDYN_ERR_PARSE || st == OPDYN_ERR_INVALID_ARGUMENT ? 2 : 1);
}

void check(opdyn_status st) {
  if (st != OPDYN_OK) die(st);
}

using GraphPtr = std::unique_ptr<opdyn_graph, decltype(&opdyn_graph_free)>;
using PartitionPtr =
    std::unique_ptr<opdyn_partition, decltype(&opdyn_partition_free)>;
using StringPtr = std::unique_ptr<char, decltype(&opdyn_string_free)>;

GraphPtr load_graph(const std::string& path) {
  opdyn_graph* g = nullptr;
  check(opdyn_graph_load(path.c_str(), &g));
  return {g, &opdyn_graph_free};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-Choices opinion dynamics on core-periphery networks"};
  app.require_subcommand(1);

  // ---- run: full experiment on a dataset --------------------------------
  std::string run_input, run_method = "densest", run_out, run_core_file;
  std::string run_mode = "plain", run_name;
  std::uint32_t run_trials = 50;
  std::uint64_t run_max_rounds = 0, run_seed = 0, run_stats_every = 1;
  double run_consensus = 0.95;
  std::uint32_t run_threads = 0;
  auto* run = app.add_subcommand("run", "run repeated dynamics trials");
  run->add_option("--input", run_input, "edge list file")->required();
  run->add_option("--core-method", run_method, "densest | krich")
      ->check(CLI::IsMember({"densest", "krich"}));
  run->add_option("--trials", run_trials, "trial count (default 50)");
  run->add_option("--max-rounds", run_max_rounds,
                  "round budget per trial (default: agent count)");
  run->add_option("--consensus", run_consensus,
                  "winning volume fraction (default 0.95)");
  run->add_option("--seed", run_seed, "base seed; trial i uses seed+i");
  run->add_option("--stats-every", run_stats_every,
                  "rounds between RoundStats rows (0 = skip rounds CSVs)");
  run->add_option("--out", run_out, "output directory")->required();
  run->add_option("--core-file", run_core_file,
                  "use this core (one label per line) instead of extracting");
  run->add_option("--mode", run_mode, "plain | stubborn-core")
      ->check(CLI::IsMember({"plain", "stubborn-core"}));
  run->add_option("--name", run_name, "dataset name in the report");
  run->add_option("--threads", run_threads, "worker threads (0 = auto)");

  // ---- synth: generate a core-periphery network -------------------------
  std::string synth_cr, synth_cd, synth_out;
  std::uint64_t synth_n = 0, synth_seed = 0;
  double synth_eps = 0.5;
  std::uint32_t synth_dco = 0, synth_dpi = 0;
  auto* synth =
      app.add_subcommand("synth", "generate a synthetic core-periphery graph");
  synth->add_option("--n", synth_n, "periphery size")->required();
  synth->add_option("--epsilon", synth_eps, "core size exponent, in [0.5, 1]")
      ->required();
  synth->add_option("--cr", synth_cr, "target robustness (e.g. 2 or 45/4096)")
      ->required();
  synth->add_option("--cd", synth_cd, "target dominance (e.g. 0.35)")
      ->required();
  synth->add_option("--d-core-out", synth_dco,
                    "periphery neighbors per core agent")
      ->required();
  synth->add_option("--d-peri-in", synth_dpi,
                    "periphery neighbors per periphery agent")
      ->required();
  synth->add_option("--seed", synth_seed, "generator seed");
  synth->add_option("--out", synth_out, "edge list output path")->required();

  // ---- metrics: partition metrics for a dataset -------------------------
  std::string met_input, met_method = "densest", met_core_out;
  auto* metrics =
      app.add_subcommand("metrics", "extract a core and print its metrics");
  metrics->add_option("--input", met_input, "edge list file")->required();
  metrics->add_option("--core-method", met_method, "densest | krich")
      ->check(CLI::IsMember({"densest", "krich"}));
  metrics->add_option("--core-out", met_core_out,
                      "also write core labels to this file");

  // ---- scatter: aggregate report.json files -----------------------------
  std::string sc_reports, sc_out;
  auto* scatter =
      app.add_subcommand("scatter", "aggregate experiment reports to CSV");
  scatter->add_option("--reports", sc_reports, "directory with report.json files")
      ->required();
  scatter->add_option("--out", sc_out, "CSV output path")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    GraphPtr g = load_graph(run_input);
    PartitionPtr core{nullptr, &opdyn_partition_free};
    if (!run_core_file.empty()) {
      opdyn_partition* p = nullptr;
      check(opdyn_partition_from_core_file(g.get(), run_core_file.c_str(), &p));
      core.reset(p);
    }
    opdyn_experiment_config cfg{};
    const std::string name = run_name.empty()
                                 ? std::filesystem::path(run_input).stem().string()
                                 : run_name;
    cfg.dataset = name.c_str();
    cfg.core_method = run_method.c_str();
    cfg.core_override = core.get();
    cfg.mode = run_mode.c_str();
    cfg.trials = run_trials;
    cfg.max_rounds = run_max_rounds;
    cfg.consensus_fraction = run_consensus;
    cfg.base_seed = run_seed;
    cfg.stats_every = run_stats_every;
    cfg.out_dir = run_out.c_str();
    cfg.threads = run_threads;
    char* report = nullptr;
    check(opdyn_run_experiment(g.get(), &cfg, &report));
    StringPtr guard(report, &opdyn_string_free);
    std::printf("%s", report);
    return 0;
  }

  if (synth->parsed()) {
    opdyn_synth_spec spec{};
    spec.n_periphery = synth_n;
    spec.epsilon = synth_eps;
    spec.d_core_out = synth_dco;
    spec.d_peri_in = synth_dpi;
    check(opdyn_parse_rational(synth_cr.c_str(), &spec.cr_num, &spec.cr_den));
    check(opdyn_parse_rational(synth_cd.c_str(), &spec.cd_num, &spec.cd_den));
    spec.seed = synth_seed;
    opdyn_graph* g = nullptr;
    opdyn_partition* p = nullptr;
    char* warning = nullptr;
    check(opdyn_synth_generate(&spec, &g, &p, &warning));
    GraphPtr graph(g, &opdyn_graph_free);
    PartitionPtr part(p, &opdyn_partition_free);
    if (warning) {
      std::fprintf(stderr, "warning: %s\n", warning);
      opdyn_string_free(warning);
    }
    check(opdyn_graph_write_canonical(graph.get(), synth_out.c_str()));
    const std::string core_path = synth_out + ".core";
    check(opdyn_partition_write_core(graph.get(), part.get(),
                                     core_path.c_str()));
    uint64_t nodes = 0, edges = 0;
    check(opdyn_graph_counts(graph.get(), &nodes, &edges));
    std::fprintf(stderr, "wrote %s (%llu agents, %llu edges) and %s\n",
                 synth_out.c_str(), static_cast<unsigned long long>(nodes),
                 static_cast<unsigned long long>(edges), core_path.c_str());
    return 0;
  }

  if (metrics->parsed()) {
    GraphPtr g = load_graph(met_input);
    opdyn_partition* p = nullptr;
    check(opdyn_extract_core(g.get(), met_method.c_str(), &p));
    PartitionPtr part(p, &opdyn_partition_free);
    char* json = nullptr;
    check(opdyn_metrics_json(g.get(), part.get(), &json));
    StringPtr guard(json, &opdyn_string_free);
    std::printf("%s\n", json);
    if (!met_core_out.empty())
      check(opdyn_partition_write_core(g.get(), part.get(),
                                       met_core_out.c_str()));
    return 0;
  }

  if (scatter->parsed()) {
    std::vector<std::string> paths;
    for (const auto& entry :
         std::filesystem::recursive_directory_iterator(sc_reports))
      if (entry.is_regular_file() && entry.path().filename() == "report.json")
        paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());  // deterministic row order
    std::vector<const char*> cpaths;
    for (const auto& s : paths) cpaths.push_back(s.c_str());
    char* csv = nullptr;
    check(opdyn_scatter_csv(cpaths.data(), cpaths.size(), &csv));
    StringPtr guard(csv, &opdyn_string_free);
    FILE* out = std::fopen(sc_out.c_str(), "wb");
    if (!out) {
      std::fprintf(stderr, "error: cannot open %s\n", sc_out.c_str());
      return 1;
    }
    std::fputs(csv, out);
    std::fclose(out);
    std::fprintf(stderr, "wrote %s (%zu reports)\n", sc_out.c_str(),
                 paths.size());
    return 0;
  }
  return 0;
}
