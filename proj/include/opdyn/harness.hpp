#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opdyn/dynamics.hpp"
#include "opdyn/extraction.hpp"
#include "opdyn/graph.hpp"
#include "opdyn/partition.hpp"
#include "opdyn/theory.hpp"

// Experiment orchestration: preprocess a dataset, split it, run repeated
// trials of the dynamics from the core-blue start, and aggregate outcome
// fractions into a serializable report.

namespace opdyn {

struct ExperimentConfig {
  std::string dataset;  // name used in reports and scatter rows
  CoreMethod method = CoreMethod::kDensest;
  // When set, this core (agent ids) seeds the dynamics and the primary
  // metrics instead of an extracted one — e.g. a generator's planted core.
  std::optional<std::vector<agent_id>> core_override;
  DynMode mode = DynMode::kPlain;  // kPlain or kStubbornCore
  std::uint32_t trials = 50;
  std::uint64_t max_rounds = 0;  // 0 = number of agents after preprocessing
  double consensus_fraction = 0.95;
  std::uint64_t base_seed = 0;  // trial i runs with seed base_seed + i
  std::uint64_t stats_every = 0;  // 0 = no rounds_<trial>.csv content
  std::string out_dir;  // empty = don't write files
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct OutcomeFractions {
  std::uint32_t consensus_core = 0;
  std::uint32_t consensus_periphery = 0;
  std::uint32_t metastable = 0;
  std::uint32_t total = 0;
  double frac_core() const { return ratio(consensus_core); }
  double frac_periphery() const { return ratio(consensus_periphery); }
  double frac_metastable() const { return ratio(metastable); }

 private:
  double ratio(std::uint32_t c) const {
    return total ? static_cast<double>(c) / total : 0.0;
  }
};

OutcomeFractions classify(const std::vector<TrialOutcome>& outcomes);

struct ExperimentReport {
  std::string dataset;
  std::uint64_t n = 0, m = 0;
  std::string core_method;  // "densest", "krich" or "override"
  std::string alt_method;
  std::uint64_t core_size = 0;
  std::uint64_t vol_core = 0, vol_peri = 0;
  double c_r = 0.0, c_d = 0.0;          // selected partition
  double c_r_alt = 0.0, c_d_alt = 0.0;  // the other extraction method
  std::string mode;
  std::uint32_t trials = 0;
  std::uint64_t max_rounds = 0;
  double consensus_fraction = 0.95;
  std::uint64_t base_seed = 0;
  OutcomeFractions fractions;
  double mean_rounds = 0.0;  // over all trials
  std::string predicted_regime;
  double dominance_gap = 0.0;
  double robustness_gap = 0.0;

  std::string to_json() const;
  static ExperimentReport from_json(const std::string& text);
};

// Preprocessed-graph entry point: extracts/loads the partition, runs the
// trials (in parallel, deterministically), optionally writes report.json,
// trials.csv and rounds_<trial>.csv under cfg.out_dir plus core.txt with
// the core's external labels.
ExperimentReport run_experiment(const Graph& g, const ExperimentConfig& cfg);

// Loads path (parse → normalize → largest component) and runs.
ExperimentReport run_experiment_file(const std::string& path,
                                     ExperimentConfig cfg);

// One scatter row per report: where the dataset sits against the two
// thresholds and what its trials did.
struct ScatterRow {
  std::string dataset;
  double c_d = 0.0;
  std::string dominant;  // label with the largest fraction
  double frac_core = 0.0, frac_periphery = 0.0, frac_metastable = 0.0;
  double mean_rounds = 0.0;
  std::string side_of_c_star;  // "below", "above" or "at"
  std::string side_of_sigma;
};

struct ScatterData {
  std::vector<ScatterRow> rows;
  // Fraction of datasets below/above the empirical threshold sigma whose
  // dominant outcome is metastable resp. consensus.  Unset when no dataset
  // falls on that side (0/0).
  std::optional<double> metastable_below_sigma;
  std::optional<double> consensus_above_sigma;

  std::string to_csv() const;
};

ScatterData scatter_data(const std::vector<ExperimentReport>& reports);

}  // namespace opdyn
