#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "opdyn/graph.hpp"
#include "opdyn/partition.hpp"

// Synchronous 2-Choices opinion dynamics.  Each round, every agent samples
// two neighbors uniformly at random WITH replacement and adopts a color only
// if both samples show it; otherwise it keeps its own.  The biased variant
// overrides each sampled color independently with probability p by a fixed
// target color; the stubborn variant freezes core agents.

namespace opdyn {

enum class Color : std::uint8_t { kRed = 0, kBlue = 1 };

inline Color opposite(Color c) {
  return c == Color::kRed ? Color::kBlue : Color::kRed;
}

// Colors of all agents plus the running blue volume (sum of degrees of blue
// agents) and the round counter.  blue_volume is maintained incrementally by
// step(); recomputing it from scratch must always agree.
struct ColorConfig {
  std::vector<Color> colors;
  std::uint64_t blue_volume = 0;
  std::uint64_t round = 0;
};

ColorConfig make_config(const Graph& g, const std::vector<Color>& colors);
// Core agents blue, periphery red — the standard experiment start.
ColorConfig core_blue_init(const Graph& g, const Partition& p);
std::uint64_t recompute_blue_volume(const Graph& g, const ColorConfig& c);

enum class DynMode : std::uint8_t {
  kPlain,        // unbiased 2-Choices
  kBiased,       // each pick independently replaced by `sigma` w.p. p
  kStubbornCore, // plain, but core agents never update
};

struct DynamicsParams {
  DynMode mode = DynMode::kPlain;
  double p = 0.0;               // bias strength, [0, 1] (kBiased only)
  Color sigma = Color::kBlue;   // bias target color (kBiased only)
  std::uint64_t seed = 0;
  std::uint64_t max_rounds = 0;
  double consensus_fraction = 0.95;  // of total volume, in (1/2, 1]
};

// Round-level summary.  phi_v is the red fraction of agent v's neighborhood;
// min/max range over all agents.  Computing them costs a full edge scan, so
// run() only does it when a stats sink asks.
struct RoundStats {
  std::uint64_t round = 0;
  std::uint64_t blue_volume = 0;
  std::uint64_t red_volume = 0;
  double phi_min = 0.0;
  double phi_max = 0.0;
};

RoundStats compute_round_stats(const Graph& g, const ColorConfig& c);

enum class TrialLabel : std::uint8_t {
  kCoreConsensus,      // blue (the core's color) took the volume
  kPeripheryConsensus, // red took the volume
  kMetastable,         // neither, within max_rounds
};

const char* trial_label_name(TrialLabel l);

struct TrialOutcome {
  TrialLabel label = TrialLabel::kMetastable;
  std::uint64_t rounds = 0;  // rounds executed before the verdict
  std::uint64_t final_blue_volume = 0;
};

// Observation hooks for run().  on_stats fires every stats_every rounds
// (and at round 0 and the final round) with full RoundStats; on_round fires
// every round with the raw configuration and costs nothing extra.
struct RunHooks {
  std::uint64_t stats_every = 0;  // 0 = never compute RoundStats
  std::function<void(const RoundStats&)> on_stats;
  std::function<void(const ColorConfig&)> on_round;
};

// One synchronous round.  Reads only `current`, writes `next` (buffers must
// be distinct), leaving `current` untouched: update order is immaterial.
// The partition is only consulted in stubborn-core mode.
void step_into(const Graph& g, const ColorConfig& current, ColorConfig& next,
               const DynamicsParams& params, const Partition* partition);

// Functional convenience over step_into.
ColorConfig step(const Graph& g, const ColorConfig& current,
                 const DynamicsParams& params,
                 const Partition* partition = nullptr);

// Runs until one color's volume reaches consensus_fraction · vol(V)
// (checked at round 0 as well) or max_rounds is exhausted (metastable).
// Setup errors: any degree-0 agent, invalid p or consensus_fraction,
// stubborn mode without a partition.
TrialOutcome run(const Graph& g, const ColorConfig& init,
                 const DynamicsParams& params,
                 const Partition* partition = nullptr,
                 const RunHooks* hooks = nullptr);

// P(agent is red next round) given its current color and neighborhood red
// fraction, under bias p toward blue: the quantity the sampler must match.
double red_stay_probability(double phi, double p, bool currently_red);

// Exact color-configuration distribution after `rounds` synchronous rounds,
// by forward evolution of the full 2^n-state Markov chain (bit v of a state
// index = 1 when agent v is blue).  Requires n ≤ 12 and rounds ≤ 8.
std::vector<double> exact_distribution(const Graph& g, const ColorConfig& init,
                                       const DynamicsParams& params,
                                       std::uint32_t rounds,
                                       const Partition* partition = nullptr);

}  // namespace opdyn
