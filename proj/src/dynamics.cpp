#include "opdyn/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "opdyn/rng.hpp"

namespace opdyn {

ColorConfig make_config(const Graph& g, const std::vector<Color>& colors) {
  if (colors.size() != g.node_count())
    throw std::invalid_argument("color vector size does not match graph");
  ColorConfig cfg;
  cfg.colors = colors;
  cfg.blue_volume = recompute_blue_volume(g, cfg);
  return cfg;
}

ColorConfig core_blue_init(const Graph& g, const Partition& p) {
  std::vector<Color> colors(g.node_count(), Color::kRed);
  for (agent_id v : p.core()) colors[v] = Color::kBlue;
  return make_config(g, colors);
}

std::uint64_t recompute_blue_volume(const Graph& g, const ColorConfig& c) {
  std::uint64_t vol = 0;
  for (agent_id v = 0; v < g.node_count(); ++v)
    if (c.colors[v] == Color::kBlue) vol += g.degree(v);
  return vol;
}

RoundStats compute_round_stats(const Graph& g, const ColorConfig& c) {
  RoundStats s;
  s.round = c.round;
  s.blue_volume = c.blue_volume;
  s.red_volume = g.volume() - c.blue_volume;
  s.phi_min = 1.0;
  s.phi_max = 0.0;
  for (agent_id v = 0; v < g.node_count(); ++v) {
    std::uint32_t red = 0;
    for (agent_id w : g.neighbors(v)) red += (c.colors[w] == Color::kRed);
    const double phi = static_cast<double>(red) / g.degree(v);
    s.phi_min = std::min(s.phi_min, phi);
    s.phi_max = std::max(s.phi_max, phi);
  }
  return s;
}

namespace {

void validate_setup(const Graph& g, const DynamicsParams& params,
                    const Partition* partition) {
  for (agent_id v = 0; v < g.node_count(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument(
          "dynamics setup: agent " + std::to_string(v) +
          " has degree 0 and cannot sample neighbors");
  if (params.mode == DynMode::kBiased &&
      !(params.p >= 0.0 && params.p <= 1.0))
    throw std::invalid_argument("dynamics setup: bias p must be in [0, 1]");
  if (params.mode == DynMode::kStubbornCore && partition == nullptr)
    throw std::invalid_argument(
        "dynamics setup: stubborn-core mode needs a partition");
  if (!(params.consensus_fraction > 0.5 && params.consensus_fraction <= 1.0))
    throw std::invalid_argument(
        "dynamics setup: consensus fraction must lie in (1/2, 1]");
}

}  // namespace

void step_into(const Graph& g, const ColorConfig& current, ColorConfig& next,
               const DynamicsParams& params, const Partition* partition) {
  const std::size_t n = g.node_count();
  if (&current == &next)
    throw std::invalid_argument("step_into: buffers must be distinct");
  next.colors.resize(n);
  next.blue_volume = current.blue_volume;
  next.round = current.round + 1;

  const std::uint64_t r = current.round;
  const std::uint64_t seed = params.seed;
  const bool biased = params.mode == DynMode::kBiased && params.p > 0.0;
  const bool stubborn = params.mode == DynMode::kStubbornCore;
  // Override threshold on the raw u64 scale; p = 1 must always fire.
  const std::uint64_t p_bits =
      !biased ? 0
      : params.p >= 1.0
          ? ~0ULL
          : static_cast<std::uint64_t>(params.p * 0x1p64);

  for (agent_id v = 0; v < n; ++v) {
    const Color own = current.colors[v];
    if (stubborn && partition->in_core(v)) {
      next.colors[v] = own;
      continue;
    }
    const auto nb = g.neighbors(v);
    // Streams 0/1: the two neighbor picks (with replacement).
    Color seen0 = current.colors[nb[rng::bounded(rng::keyed(seed, r, v, 0),
                                                 nb.size())]];
    Color seen1 = current.colors[nb[rng::bounded(rng::keyed(seed, r, v, 1),
                                                 nb.size())]];
    if (biased) {
      // Streams 2/3: independent per-pick overrides toward sigma.
      if (rng::keyed(seed, r, v, 2) < p_bits) seen0 = params.sigma;
      if (rng::keyed(seed, r, v, 3) < p_bits) seen1 = params.sigma;
    }
    const Color adopted = (seen0 == seen1) ? seen0 : own;
    next.colors[v] = adopted;
    if (adopted != own) {
      if (adopted == Color::kBlue)
        next.blue_volume += g.degree(v);
      else
        next.blue_volume -= g.degree(v);
    }
  }
}

ColorConfig step(const Graph& g, const ColorConfig& current,
                 const DynamicsParams& params, const Partition* partition) {
  validate_setup(g, params, partition);
  ColorConfig next;
  step_into(g, current, next, params, partition);
  return next;
}

TrialOutcome run(const Graph& g, const ColorConfig& init,
                 const DynamicsParams& params, const Partition* partition,
                 const RunHooks* hooks) {
  validate_setup(g, params, partition);
  if (init.colors.size() != g.node_count())
    throw std::invalid_argument("run: initial colors do not match graph");

  const std::uint64_t total = g.volume();
  // Consensus on volume, not head count: a color wins once it holds at least
  // consensus_fraction of the total degree mass.
  const auto winner = [&](const ColorConfig& c) -> const char* {
    const double blue = static_cast<double>(c.blue_volume);
    const double need = params.consensus_fraction * static_cast<double>(total);
    if (blue >= need) return "blue";
    if (static_cast<double>(total) - blue >= need) return "red";
    return nullptr;
  };
  const auto emit = [&](const ColorConfig& c) {
    if (hooks && hooks->on_round) hooks->on_round(c);
    if (hooks && hooks->on_stats && hooks->stats_every > 0 &&
        (c.round % hooks->stats_every == 0))
      hooks->on_stats(compute_round_stats(g, c));
  };

  ColorConfig cur = init;
  ColorConfig buf;
  emit(cur);
  // The initial configuration may already be a consensus.
  if (const char* w = winner(cur)) {
    return {w[0] == 'b' ? TrialLabel::kCoreConsensus
                        : TrialLabel::kPeripheryConsensus,
            0, cur.blue_volume};
  }
  for (std::uint64_t t = 0; t < params.max_rounds; ++t) {
    step_into(g, cur, buf, params, partition);
    std::swap(cur, buf);
    emit(cur);
    if (const char* w = winner(cur)) {
      if (hooks && hooks->on_stats && hooks->stats_every > 0 &&
          (cur.round % hooks->stats_every != 0))
        hooks->on_stats(compute_round_stats(g, cur));  // final-round stats
      return {w[0] == 'b' ? TrialLabel::kCoreConsensus
                          : TrialLabel::kPeripheryConsensus,
              t + 1, cur.blue_volume};
    }
  }
  if (hooks && hooks->on_stats && hooks->stats_every > 0 &&
      (cur.round % hooks->stats_every != 0))
    hooks->on_stats(compute_round_stats(g, cur));  // final-round stats
  return {TrialLabel::kMetastable, params.max_rounds, cur.blue_volume};
}

double red_stay_probability(double phi, double p, bool currently_red) {
  // One pick observes blue with probability p + (1−p)(1−φ): either the
  // override fires, or it doesn't and the sampled neighbor is blue.
  const double see_blue = p + (1.0 - p) * (1.0 - phi);
  if (currently_red) return 1.0 - see_blue * see_blue;
  const double see_red = (1.0 - p) * phi;
  return see_red * see_red;
}

std::vector<double> exact_distribution(const Graph& g, const ColorConfig& init,
                                       const DynamicsParams& params,
                                       std::uint32_t rounds,
                                       const Partition* partition) {
  const std::size_t n = g.node_count();
  if (n > 12)
    throw std::invalid_argument(
        "exact_distribution: state space limited to n <= 12");
  if (rounds > 8)
    throw std::invalid_argument("exact_distribution: rounds limited to 8");
  validate_setup(g, params, partition);
  if (init.colors.size() != n)
    throw std::invalid_argument("exact_distribution: bad initial config");

  const std::size_t states = std::size_t{1} << n;
  std::vector<double> dist(states, 0.0), scratch(states);
  std::size_t start = 0;
  for (agent_id v = 0; v < n; ++v)
    if (init.colors[v] == Color::kBlue) start |= std::size_t{1} << v;
  dist[start] = 1.0;

  const double p = params.mode == DynMode::kBiased ? params.p : 0.0;
  const double to_blue = params.sigma == Color::kBlue ? p : 0.0;
  const double to_red = params.sigma == Color::kRed ? p : 0.0;
  std::vector<double> p_blue(n);
  std::vector<double> amp(states);

  for (std::uint32_t t = 0; t < rounds; ++t) {
    std::fill(scratch.begin(), scratch.end(), 0.0);
    for (std::size_t s = 0; s < states; ++s) {
      if (dist[s] == 0.0) continue;
      // Per-agent blue probabilities given configuration s; agents update
      // independently within a round.
      for (agent_id v = 0; v < n; ++v) {
        if (partition && params.mode == DynMode::kStubbornCore &&
            partition->in_core(v)) {
          p_blue[v] = (s >> v) & 1 ? 1.0 : 0.0;
          continue;
        }
        const auto nb = g.neighbors(v);
        std::uint32_t blue_nb = 0;
        for (agent_id w : nb) blue_nb += (s >> w) & 1;
        const double frac_blue = static_cast<double>(blue_nb) / nb.size();
        const double see_blue = to_blue + (1.0 - p) * frac_blue;
        const double see_red = to_red + (1.0 - p) * (1.0 - frac_blue);
        const double own_blue = (s >> v) & 1 ? 1.0 : 0.0;
        p_blue[v] = see_blue * see_blue +
                    (1.0 - see_blue * see_blue - see_red * see_red) * own_blue;
      }
      // Fold the independent per-agent outcomes into next-state masses:
      // after processing agent v, amp[0..2^(v+1)) holds the joint
      // probability of each partial assignment (bit v = blue).
      amp[0] = dist[s];
      std::size_t width = 1;
      for (agent_id v = 0; v < n; ++v) {
        for (std::size_t i = width; i-- > 0;) {
          amp[width + i] = amp[i] * p_blue[v];
          amp[i] *= 1.0 - p_blue[v];
        }
        width *= 2;
      }
      for (std::size_t i = 0; i < states; ++i) scratch[i] += amp[i];
    }
    dist.swap(scratch);
  }
  return dist;
}

const char* trial_label_name(TrialLabel l) {
  switch (l) {
    case TrialLabel::kCoreConsensus:
      return "core-consensus";
    case TrialLabel::kPeripheryConsensus:
      return "periphery-consensus";
    case TrialLabel::kMetastable:
      return "metastable";
  }
  return "unknown";
}

}  // namespace opdyn
