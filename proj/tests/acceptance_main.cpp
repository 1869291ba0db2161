// Acceptance gate: ten numbered criteria, one [PASS]/[FAIL] line each.
//
//   acceptance            runs all criteria
//   acceptance 4 7        runs criteria 4 and 7 only
//
// Exit status: 0 if every criterion that ran passed; 77 if the only
// non-passes were blocked on a missing input file (criterion 9 without its
// dataset); 1 otherwise.  Each criterion carries a wall-clock budget;
// exceeding it fails the criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "opdyn/dynamics.hpp"
#include "opdyn/extraction.hpp"
#include "opdyn/graph.hpp"
#include "opdyn/harness.hpp"
#include "opdyn/partition.hpp"
#include "opdyn/rng.hpp"
#include "opdyn/synth.hpp"
#include "opdyn/theory.hpp"

#ifndef OPDYN_ACCEPT_DATA_DIR
#define OPDYN_ACCEPT_DATA_DIR ""
#endif

namespace {

using opdyn::agent_id;
using opdyn::Color;
using opdyn::ColorConfig;
using opdyn::DynamicsParams;
using opdyn::DynMode;
using opdyn::Graph;
using opdyn::Partition;

// kBlocked: the criterion could not be evaluated because a required input
// file is absent — still a non-pass, but distinguished in the exit status so
// a harness can report "skipped for missing data" instead of "broken".
enum class Outcome { kPass, kFail, kBlocked };

// ---- tolerances and fixed parameters, all pinned here -------------------

constexpr double kIdentityTol = 1e-12;       // criterion 1 closed forms
constexpr double kRootTol = 1e-10;           // criterion 1 root residuals
constexpr double kTvTol = 0.01;              // criterion 2 total variation
constexpr std::uint64_t kTvSamples = 1'000'000;
constexpr double kSamplerSigmas = 4.0;       // criterion 3 z-score bound
constexpr std::uint64_t kSamplerReplays = 1'000'000;
constexpr std::uint32_t kTrials = 50;        // criteria 4-7, 9
constexpr std::uint32_t kTrialsNeeded = 48;  // "≥ 48 of 50"
constexpr double kConsensusFraction = 0.95;
constexpr double kCeilingSlack = 0.03;       // criterion 5
constexpr double kQuarter = 0.75;            // criteria 5, 7 volume floors
constexpr double kApproxFactor = 0.5;        // criterion 8 peel guarantee
constexpr int kPlantedInstances = 100;       // criterion 8
constexpr int kPlantedNeeded = 95;
constexpr double kMetricTol = 0.2;           // criterion 9 c_r / c_d windows
constexpr double kTargetCd = 1.32;           // criterion 9 reference values
constexpr double kTargetCr = 0.75;
constexpr double kMinFracCore = 0.75;        // criterion 9 outcome floor

constexpr std::uint64_t kSeedGraphs = 0x2c5e;   // criterion 2 graph stream
constexpr std::uint64_t kSeedSampler = 0x3a11;  // criterion 3 replays
constexpr std::uint64_t kSeedRegular = 0x4d6;   // criteria 4/5 graph
constexpr std::uint64_t kSeedTrials = 0x7717;   // dynamics base seed
constexpr std::uint64_t kSeedSynth = 0x5321;    // criteria 6/7/10 generator
constexpr std::uint64_t kSeedPlanted = 0x8a2;   // criterion 8 instances

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

// Random connected graph: a random attachment tree plus extra edges.
Graph random_connected_graph(std::size_t n, double extra_prob,
                             std::uint64_t seed) {
  opdyn::rng::Stream stream(seed, 0xacce51, 0);
  std::set<std::pair<agent_id, agent_id>> edges;
  for (agent_id v = 1; v < n; ++v)
    edges.emplace(static_cast<agent_id>(stream.next_below(v)), v);
  for (agent_id u = 0; u < n; ++u)
    for (agent_id v = u + 1; v < n; ++v)
      if (stream.next_unit() < extra_prob) edges.emplace(u, v);
  return Graph(n, {edges.begin(), edges.end()});
}

std::uint64_t induced_pairs(const Graph& g, const std::vector<agent_id>& s) {
  std::vector<std::uint8_t> in(g.node_count(), 0);
  for (agent_id v : s) in[v] = 1;
  std::uint64_t pairs = 0;
  for (agent_id v : s)
    for (agent_id u : g.neighbors(v)) pairs += in[u];
  return pairs;  // ordered pairs: each internal edge counts twice
}

// ---- criterion 1: closed-form identity suite -----------------------------

Outcome criterion1(std::string& detail) {
  namespace th = opdyn::theory;
  bool ok = true;
  const double f_at_min = std::abs(th::drift_f(th::phi_bar(th::p_star), th::p_star));
  ok &= f_at_min <= kIdentityTol;
  ok &= std::abs(th::q_from_cd(th::c_star) - th::p_star) <= kIdentityTol;
  ok &= th::metastability_ceiling(0.0) == 0.25;

  double worst_root = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double p = th::p_star * i / 101.0;
    const th::DriftRoots roots = th::drift_roots(p);
    if (!roots.real) {
      ok = false;
      continue;
    }
    worst_root = std::max({worst_root, std::abs(th::drift_f(roots.lower, p)),
                           std::abs(th::drift_f(roots.upper, p))});
  }
  ok &= worst_root < kRootTol;
  detail = "|f(phi_bar(p*),p*)| = " + fmt(f_at_min) +
           ", max |f(root)| = " + fmt(worst_root);
  return ok ? Outcome::kPass : Outcome::kFail;
}

// ---- criterion 2: exact distribution vs Monte Carlo ----------------------

Outcome criterion2(std::string& detail) {
  constexpr int kGraphs = 20;
  constexpr std::uint32_t kRounds = 3;
  const double biases[] = {0.0, 0.1, 0.25};
  double worst_tv = 0.0;

  for (int i = 0; i < kGraphs; ++i) {
    const std::size_t n = 4 + static_cast<std::size_t>(i % 5);  // 4..8
    const Graph g = random_connected_graph(n, 0.3, kSeedGraphs + i);

    std::vector<Color> colors(n, Color::kRed);
    for (std::size_t v = 0; v < n; ++v)
      if (opdyn::rng::keyed(kSeedGraphs, i, v, 9) & 1) colors[v] = Color::kBlue;
    const ColorConfig init = opdyn::make_config(g, colors);

    DynamicsParams params;
    if (i % 4 == 0) {
      params.mode = DynMode::kPlain;
    } else {
      params.mode = DynMode::kBiased;
      params.p = biases[i % 4 - 1];
      params.sigma = Color::kBlue;
    }

    const std::vector<double> exact =
        opdyn::exact_distribution(g, init, params, kRounds);

    std::vector<std::uint64_t> counts(exact.size(), 0);
    ColorConfig cur = init, next = init;
    for (std::uint64_t s = 0; s < kTvSamples; ++s) {
      cur.colors = init.colors;
      cur.blue_volume = init.blue_volume;
      cur.round = 0;
      params.seed = opdyn::rng::keyed(kSeedGraphs, 0xeca7, i, s);
      for (std::uint32_t r = 0; r < kRounds; ++r) {
        opdyn::step_into(g, cur, next, params, nullptr);
        std::swap(cur, next);
      }
      std::size_t state = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (cur.colors[v] == Color::kBlue) state |= std::size_t{1} << v;
      ++counts[state];
    }

    double tv = 0.0;
    for (std::size_t s = 0; s < exact.size(); ++s)
      tv += std::abs(static_cast<double>(counts[s]) / kTvSamples - exact[s]);
    tv /= 2.0;
    worst_tv = std::max(worst_tv, tv);
  }
  detail = "max TV over " + std::to_string(kGraphs) + " graphs = " +
           fmt(worst_tv) + " (bound " + fmt(kTvTol) + ")";
  return worst_tv < kTvTol ? Outcome::kPass : Outcome::kFail;
}

// ---- criterion 3: per-agent one-step sampler check ------------------------

Outcome criterion3(std::string& detail) {
  constexpr std::size_t kAgents = 20;
  const double biases[] = {0.0, 0.1, 0.25, 0.5, opdyn::theory::p_star};
  double worst_z = 0.0;
  bool ok = true;

  for (int c = 0; c < 5; ++c) {
    const Graph g = random_connected_graph(kAgents, 0.2, kSeedSampler + c);
    std::vector<Color> colors(kAgents, Color::kRed);
    for (std::size_t v = 0; v < kAgents; ++v)
      if (opdyn::rng::keyed(kSeedSampler, c, v, 3) & 1)
        colors[v] = Color::kBlue;
    const ColorConfig init = opdyn::make_config(g, colors);

    DynamicsParams params;
    if (biases[c] == 0.0) {
      params.mode = DynMode::kPlain;
    } else {
      params.mode = DynMode::kBiased;
      params.p = biases[c];
      params.sigma = Color::kBlue;
    }

    std::vector<std::uint64_t> red_after(kAgents, 0);
    ColorConfig next = init;
    for (std::uint64_t s = 0; s < kSamplerReplays; ++s) {
      params.seed = opdyn::rng::keyed(kSeedSampler, 0x5e1f, c, s);
      opdyn::step_into(g, init, next, params, nullptr);
      for (std::size_t v = 0; v < kAgents; ++v)
        red_after[v] += next.colors[v] == Color::kRed;
    }

    for (std::size_t v = 0; v < kAgents; ++v) {
      std::uint64_t red_neighbors = 0;
      for (agent_id u : g.neighbors(static_cast<agent_id>(v)))
        red_neighbors += init.colors[u] == Color::kRed;
      const double phi = static_cast<double>(red_neighbors) / g.degree(v);
      const double q = opdyn::red_stay_probability(
          phi, biases[c], init.colors[v] == Color::kRed);
      const double freq =
          static_cast<double>(red_after[v]) / kSamplerReplays;
      const double sigma = std::sqrt(q * (1.0 - q) / kSamplerReplays);
      if (sigma == 0.0) {
        ok &= freq == q;  // degenerate probabilities must hit exactly
      } else {
        const double z = std::abs(freq - q) / sigma;
        worst_z = std::max(worst_z, z);
        ok &= z <= kSamplerSigmas;
      }
    }
  }
  detail = "max z over 5 configs x 20 agents = " + fmt(worst_z) + " (bound " +
           fmt(kSamplerSigmas) + ")";
  return ok ? Outcome::kPass : Outcome::kFail;
}

// ---- criteria 4 and 5: single-population phase transition -----------------

const Graph& regular_4096() {
  static const Graph g = opdyn::random_regular_graph(4096, 64, kSeedRegular);
  return g;
}

Outcome criterion4(std::string& detail) {
  const Graph& g = regular_4096();
  const std::uint64_t threshold = static_cast<std::uint64_t>(
      std::ceil(kConsensusFraction * static_cast<double>(g.volume())));
  constexpr std::uint64_t kBudget = 120;  // 10 * log2(4096)

  const ColorConfig init =
      opdyn::make_config(g, std::vector<Color>(g.node_count(), Color::kRed));
  DynamicsParams params;
  params.mode = DynMode::kBiased;
  params.p = 0.25;
  params.sigma = Color::kBlue;

  int successes = 0;
  ColorConfig cur = init, next = init;
  for (std::uint32_t t = 0; t < kTrials; ++t) {
    params.seed = kSeedTrials + t;
    cur.colors = init.colors;
    cur.blue_volume = 0;
    cur.round = 0;
    for (std::uint64_t r = 0; r < kBudget; ++r) {
      opdyn::step_into(g, cur, next, params, nullptr);
      std::swap(cur, next);
      if (cur.blue_volume >= threshold) {
        ++successes;
        break;
      }
    }
  }
  detail = std::to_string(successes) + "/" + std::to_string(kTrials) +
           " trials reached " + fmt(kConsensusFraction) + " blue volume in " +
           std::to_string(kBudget) + " rounds (need >= " +
           std::to_string(kTrialsNeeded) + ")";
  return successes >= static_cast<int>(kTrialsNeeded) ? Outcome::kPass
                                                      : Outcome::kFail;
}

Outcome criterion5(std::string& detail) {
  const Graph& g = regular_4096();
  const double cap = opdyn::theory::metastability_ceiling(0.10) + kCeilingSlack;
  const double vol = static_cast<double>(g.volume());
  constexpr std::uint64_t kRounds = 4096;  // n

  const ColorConfig init =
      opdyn::make_config(g, std::vector<Color>(g.node_count(), Color::kRed));
  DynamicsParams params;
  params.mode = DynMode::kBiased;
  params.p = 0.10;
  params.sigma = Color::kBlue;

  double max_frac = 0.0;
  bool red_held = true;
  ColorConfig cur = init, next = init;
  for (std::uint32_t t = 0; t < kTrials; ++t) {
    params.seed = kSeedTrials + t;
    cur.colors = init.colors;
    cur.blue_volume = 0;
    cur.round = 0;
    for (std::uint64_t r = 0; r < kRounds; ++r) {
      opdyn::step_into(g, cur, next, params, nullptr);
      std::swap(cur, next);
      const double frac = static_cast<double>(cur.blue_volume) / vol;
      max_frac = std::max(max_frac, frac);
      red_held &= (1.0 - frac) >= kQuarter;
    }
  }
  detail = "max blue fraction " + fmt(max_frac) + " (cap " + fmt(cap) +
           "), red held >= 3/4: " + (red_held ? "yes" : "no");
  return max_frac <= cap && red_held ? Outcome::kPass : Outcome::kFail;
}

// ---- criteria 6 and 7: synthetic core-periphery corollaries ---------------

opdyn::SynthResult synth_consensus_instance() {
  opdyn::SynthSpec spec;
  spec.n_periphery = 8192;
  spec.epsilon = 0.5;
  spec.d_core_out = 8192;  // complete bipartite cut
  spec.d_peri_in = 260;
  spec.c_r = {45, 4096};  // core-internal degree 90 (a clique on 91)
  spec.c_d = {7, 20};     // 0.35 > c*
  spec.seed = kSeedSynth;
  return opdyn::generate(spec);
}

Outcome criterion6(std::string& detail) {
  const opdyn::SynthResult synth = synth_consensus_instance();
  const Graph& g = synth.graph;
  const std::uint64_t budget = static_cast<std::uint64_t>(
      10.0 * std::log2(static_cast<double>(g.node_count())));

  std::uint32_t min_degree = g.degree(0);
  for (agent_id v = 0; v < g.node_count(); ++v)
    min_degree = std::min(min_degree, g.degree(v));

  opdyn::ExperimentConfig cfg;
  cfg.dataset = "synth-consensus";
  cfg.core_override = synth.partition.core();
  cfg.mode = DynMode::kStubbornCore;
  cfg.trials = kTrials;
  cfg.max_rounds = budget;
  cfg.consensus_fraction = kConsensusFraction;
  cfg.base_seed = kSeedTrials;
  const opdyn::ExperimentReport rep = opdyn::run_experiment(g, cfg);

  detail = std::to_string(rep.fractions.consensus_core) + "/" +
           std::to_string(kTrials) + " blue consensus in " +
           std::to_string(budget) + " rounds (c_d " + fmt(rep.c_d) +
           ", min degree " + std::to_string(min_degree) + ")";
  const bool ok = rep.fractions.consensus_core >= kTrialsNeeded &&
                  min_degree >= 64 && rep.c_d > opdyn::theory::c_star;
  return ok ? Outcome::kPass : Outcome::kFail;
}

Outcome criterion7(std::string& detail) {
  opdyn::SynthSpec spec;
  spec.n_periphery = 2401;
  spec.epsilon = 0.75;  // core size 7^3 = 343 exactly
  spec.d_core_out = 28;
  spec.d_peri_in = 50;
  spec.c_r = {10, 1};  // 10 > 1/c*
  spec.c_d = {2, 25};  // 0.08 < c*
  spec.seed = kSeedSynth;
  const opdyn::SynthResult synth = opdyn::generate(spec);
  const Graph& g = synth.graph;
  const Partition& part = synth.partition;

  const std::uint64_t rounds = g.node_count();  // max_rounds = n
  const std::uint64_t vol_core = part.core_volume();
  const std::uint64_t vol_peri = part.periphery_volume();
  const std::uint64_t consensus_threshold = static_cast<std::uint64_t>(
      std::ceil(kConsensusFraction * static_cast<double>(g.volume())));

  const ColorConfig init = opdyn::core_blue_init(g, part);
  DynamicsParams params;  // plain mode

  int successes = 0;
  ColorConfig cur = init, next = init;
  for (std::uint32_t t = 0; t < kTrials; ++t) {
    params.seed = kSeedTrials + t;
    cur.colors = init.colors;
    cur.blue_volume = init.blue_volume;
    cur.round = 0;
    bool held = true;
    bool consensus = false;
    for (std::uint64_t r = 0; r < rounds && held && !consensus; ++r) {
      opdyn::step_into(g, cur, next, params, &part);
      std::swap(cur, next);
      std::uint64_t blue_core = 0, red_peri = 0;
      for (agent_id v = 0; v < g.node_count(); ++v) {
        if (part.in_core(v)) {
          if (cur.colors[v] == Color::kBlue) blue_core += g.degree(v);
        } else if (cur.colors[v] == Color::kRed) {
          red_peri += g.degree(v);
        }
      }
      held = static_cast<double>(blue_core) >=
                 kQuarter * static_cast<double>(vol_core) &&
             static_cast<double>(red_peri) >=
                 kQuarter * static_cast<double>(vol_peri);
      consensus = cur.blue_volume >= consensus_threshold ||
                  g.volume() - cur.blue_volume >= consensus_threshold;
    }
    successes += held && !consensus;
  }
  detail = std::to_string(successes) + "/" + std::to_string(kTrials) +
           " trials metastable with both 3/4-volume floors held over " +
           std::to_string(rounds) + " rounds";
  return successes >= static_cast<int>(kTrialsNeeded) ? Outcome::kPass
                                                      : Outcome::kFail;
}

// ---- criterion 8: densest-subgraph approximation ---------------------------

Outcome criterion8(std::string& detail) {
  double worst_ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 6 + static_cast<std::size_t>(i % 9);  // 6..14
    const Graph g = random_connected_graph(n, 0.25, kSeedPlanted + i);

    double best = 0.0;  // exhaustive densest subgraph, ordered-pair density
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<agent_id> subset;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1) subset.push_back(static_cast<agent_id>(v));
      const std::uint64_t pairs = induced_pairs(g, subset);
      if (pairs == 0) continue;
      best = std::max(best,
                      static_cast<double>(pairs) / static_cast<double>(subset.size()));
    }

    const std::vector<agent_id> peel =
        opdyn::constrained_densest_subgraph(g, g.volume(), {});
    if (peel.empty()) {
      detail = "peel returned nothing on instance " + std::to_string(i);
      return Outcome::kFail;
    }
    const double got = static_cast<double>(induced_pairs(g, peel)) /
                       static_cast<double>(peel.size());
    worst_ratio = std::min(worst_ratio, got / best);
    if (got < kApproxFactor * best - 1e-12) {
      detail = "approximation broke on instance " + std::to_string(i) +
               ": got " + fmt(got) + " vs optimal " + fmt(best);
      return Outcome::kFail;
    }
  }

  int recovered = 0;
  for (int i = 0; i < kPlantedInstances; ++i) {
    constexpr std::size_t n = 60;
    opdyn::rng::Stream stream(kSeedPlanted, 0x9a9, i);
    std::set<std::pair<agent_id, agent_id>> edges;
    for (agent_id v = 1; v < n; ++v)
      edges.emplace(static_cast<agent_id>(stream.next_below(v)), v);
    for (agent_id u = 0; u < n; ++u)
      for (agent_id v = u + 1; v < n; ++v)
        if (stream.next_unit() < 0.02) edges.emplace(u, v);

    std::vector<agent_id> clique;  // 8 distinct planted agents
    while (clique.size() < 8) {
      const agent_id v = static_cast<agent_id>(stream.next_below(n));
      if (std::find(clique.begin(), clique.end(), v) == clique.end())
        clique.push_back(v);
    }
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = a + 1; b < 8; ++b)
        edges.emplace(std::min(clique[a], clique[b]),
                      std::max(clique[a], clique[b]));

    const Graph g(n, {edges.begin(), edges.end()});
    std::vector<agent_id> found =
        opdyn::constrained_densest_subgraph(g, g.volume(), {});
    std::sort(found.begin(), found.end());
    std::sort(clique.begin(), clique.end());
    recovered += found == clique;
  }

  detail = "worst peel/optimal ratio " + fmt(worst_ratio) +
           " (bound 0.5); planted K8 recovered " + std::to_string(recovered) +
           "/" + std::to_string(kPlantedInstances) + " (need >= " +
           std::to_string(kPlantedNeeded) + ")";
  return recovered >= kPlantedNeeded ? Outcome::kPass : Outcome::kFail;
}

// ---- criterion 9: dataset regression ---------------------------------------

Outcome criterion9(std::string& detail) {
  std::filesystem::path path;
  if (const char* dir = std::getenv("OPDYN_DATA_DIR"))
    path = std::filesystem::path(dir) / "email-Eu-core.txt";
  else
    path = std::filesystem::path(OPDYN_ACCEPT_DATA_DIR) / "email-Eu-core.txt";

  if (!std::filesystem::exists(path)) {
    detail = "dataset file not found: " + path.string() +
             " (place the email-Eu-core edge list there or set "
             "OPDYN_DATA_DIR)";
    return Outcome::kBlocked;
  }

  const Graph g = opdyn::load_graph(path.string());
  const Partition part = opdyn::densest_core(g);
  const double c_r = opdyn::robustness(part).value();
  const double c_d = opdyn::dominance(part).value();

  opdyn::ExperimentConfig cfg;
  cfg.dataset = "email-Eu-core";
  cfg.trials = kTrials;
  cfg.base_seed = kSeedTrials;
  const opdyn::ExperimentReport rep = opdyn::run_experiment(g, cfg);
  const double frac_core = rep.fractions.frac_core();

  detail = "c_r " + fmt(c_r) + " (target " + fmt(kTargetCr) + "±" +
           fmt(kMetricTol) + "), c_d " + fmt(c_d) + " (target " +
           fmt(kTargetCd) + "±" + fmt(kMetricTol) + "), frac_C " +
           fmt(frac_core) + " (need >= " + fmt(kMinFracCore) + ")";
  const bool ok = std::abs(c_r - kTargetCr) <= kMetricTol &&
                  std::abs(c_d - kTargetCd) <= kMetricTol &&
                  frac_core >= kMinFracCore;
  return ok ? Outcome::kPass : Outcome::kFail;
}

// ---- criterion 10: byte-level determinism ----------------------------------

Outcome criterion10(std::string& detail) {
  const opdyn::SynthResult synth = synth_consensus_instance();
  const std::uint64_t budget = static_cast<std::uint64_t>(
      10.0 * std::log2(static_cast<double>(synth.graph.node_count())));

  const auto base =
      std::filesystem::temp_directory_path() / "opdyn_acceptance_det";
  std::filesystem::remove_all(base);
  const auto dir_a = base / "a", dir_b = base / "b";

  opdyn::ExperimentConfig cfg;
  cfg.dataset = "synth-consensus";
  cfg.core_override = synth.partition.core();
  cfg.mode = DynMode::kStubbornCore;
  cfg.trials = kTrials;
  cfg.max_rounds = budget;
  cfg.consensus_fraction = kConsensusFraction;
  cfg.base_seed = kSeedTrials;

  cfg.out_dir = dir_a.string();
  opdyn::run_experiment(synth.graph, cfg);
  cfg.out_dir = dir_b.string();
  opdyn::run_experiment(synth.graph, cfg);

  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string{std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>()};
  };
  const std::string report_a = slurp(dir_a / "report.json");
  const bool reports_equal = !report_a.empty() &&
                             report_a == slurp(dir_b / "report.json");
  const std::string trials_a = slurp(dir_a / "trials.csv");
  const bool trials_equal =
      !trials_a.empty() && trials_a == slurp(dir_b / "trials.csv");
  std::filesystem::remove_all(base);

  detail = std::string("report.json ") +
           (reports_equal ? "identical" : "DIFFERS") + ", trials.csv " +
           (trials_equal ? "identical" : "DIFFERS");
  return reports_equal && trials_equal ? Outcome::kPass : Outcome::kFail;
}

// ---- driver ----------------------------------------------------------------

struct Criterion {
  int id;
  const char* label;
  std::function<Outcome(std::string&)> fn;
  double budget_seconds;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "closed-form identity suite", criterion1, 1.0},
      {2, "exact-oracle equivalence (TV < 0.01 at 1e6 samples)", criterion2,
       300.0},
      {3, "per-agent sampler 4-sigma check", criterion3, 300.0},
      {4, "consensus regime on a 4096-agent regular graph (p = 0.25)",
       criterion4, 120.0},
      {5, "metastability ceiling on the same graph (p = 0.10)", criterion5,
       600.0},
      {6, "synthetic core-periphery consensus (c_d = 0.35, stubborn core)",
       criterion6, 300.0},
      {7, "synthetic core-periphery metastability (c_d = 0.08, c_r = 10)",
       criterion7, 900.0},
      {8, "densest-subgraph 1/2-approximation and planted-K8 recovery",
       criterion8, 300.0},
      {9, "email-Eu-core dataset regression", criterion9, 600.0},
      {10, "byte-identical reruns of the synthetic consensus experiment",
       criterion10, 600.0},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    try {
      const int id = std::stoi(argv[i]);
      if (id < 1 || id > 10) throw std::out_of_range("id");
      selected.push_back(id);
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [criterion-number ...]  (1..10)\n";
      return 2;
    }
  }
  if (selected.empty())
    for (const Criterion& c : criteria()) selected.push_back(c.id);

  bool any_failed = false, any_blocked = false;
  for (int id : selected) {
    const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = Outcome::kFail;
    try {
      outcome = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("unexpected exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (outcome == Outcome::kPass && seconds > c.budget_seconds) {
      outcome = Outcome::kFail;
      detail += " [exceeded " + fmt(c.budget_seconds) + " s budget]";
    }
    std::cout << (outcome == Outcome::kPass ? "[PASS]" : "[FAIL]")
              << " criterion " << c.id << ": " << c.label << " — " << detail
              << " (" << fmt(seconds) << " s)" << std::endl;
    any_failed |= outcome == Outcome::kFail;
    any_blocked |= outcome == Outcome::kBlocked;
  }
  if (any_failed) return 1;
  return any_blocked ? 77 : 0;  // 77: only missing-input blockages
}
