#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opdyn/dynamics.hpp"
#include "opdyn/graph.hpp"
#include "opdyn/rng.hpp"

// Brute-force oracles and tiny graph builders for the tests.  Every oracle
// reimplements the quantity under test the slow, obvious way, sharing no code
// with the library beyond the Graph container itself.

namespace testutil {

using opdyn::agent_id;
using opdyn::Graph;

// ---------- builders ----------

inline Graph from_edges(std::size_t n,
                        std::vector<std::pair<agent_id, agent_id>> edges) {
  return Graph(n, edges);
}

inline Graph clique(std::size_t n) {
  std::vector<std::pair<agent_id, agent_id>> e;
  for (agent_id u = 0; u < n; ++u)
    for (agent_id v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<std::pair<agent_id, agent_id>> e;
  for (agent_id v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<agent_id, agent_id>> e;
  for (agent_id v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(static_cast<agent_id>(n - 1), 0);
  return Graph(n, e);
}

// Star with the hub at id 0 and `leaves` spokes.
inline Graph star(std::size_t leaves) {
  std::vector<std::pair<agent_id, agent_id>> e;
  for (agent_id v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

// Uniform random spanning tree plus independent extra edges: connected,
// simple, deterministic in `seed`.
inline Graph random_connected_graph(std::size_t n, double extra_edge_prob,
                                    std::uint64_t seed) {
  opdyn::rng::Stream rnd(seed, 0x7e57, 0);
  std::vector<std::pair<agent_id, agent_id>> e;
  for (agent_id v = 1; v < n; ++v)
    e.emplace_back(static_cast<agent_id>(rnd.next_below(v)), v);
  for (agent_id u = 0; u < n; ++u)
    for (agent_id v = u + 1; v < n; ++v) {
      if (std::find(e.begin(), e.end(), std::make_pair(u, v)) != e.end())
        continue;
      if (rnd.next_unit() < extra_edge_prob) e.emplace_back(u, v);
    }
  return Graph(n, e);
}

// ---------- oracles ----------

// Ordered-pair cut |c(A, B)| by scanning every pair.
inline std::uint64_t cut_oracle(const Graph& g, std::span<const agent_id> a,
                                std::span<const agent_id> b) {
  std::uint64_t count = 0;
  for (agent_id u : a)
    for (agent_id v : b) count += g.has_edge(u, v);
  return count;
}

struct DensestResult {
  std::uint64_t pairs = 0;  // ordered pairs inside the best subset
  std::size_t size = 0;
  std::vector<agent_id> subset;
  double density() const {
    return size ? static_cast<double>(pairs) / static_cast<double>(size) : 0.0;
  }
};

// Densest subset by full enumeration under an original-degree volume cap
// (cap >= vol(V) disables it).  Zero-density subsets never qualify.
inline DensestResult densest_oracle(const Graph& g, std::uint64_t volume_cap) {
  const std::size_t n = g.node_count();
  if (n > 20) throw std::invalid_argument("densest_oracle: n too large");
  DensestResult best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t pairs = 0, vol = 0;
    std::size_t size = 0;
    for (agent_id u = 0; u < n; ++u) {
      if (!((mask >> u) & 1)) continue;
      ++size;
      vol += g.degree(u);
      for (agent_id v : g.neighbors(u)) pairs += (mask >> v) & 1;
    }
    if (pairs == 0 || vol > volume_cap) continue;
    const bool better =
        best.size == 0 || static_cast<unsigned __int128>(pairs) * best.size >
                              static_cast<unsigned __int128>(best.pairs) * size;
    if (!better) continue;
    best.pairs = pairs;
    best.size = size;
    best.subset.clear();
    for (agent_id u = 0; u < n; ++u)
      if ((mask >> u) & 1) best.subset.push_back(u);
  }
  return best;
}

// Graph isomorphism by permutation enumeration; n <= 8.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.node_count();
  if (n != b.node_count() || a.edge_count() != b.edge_count()) return false;
  if (n > 8) throw std::invalid_argument("isomorphic: n too large");
  std::vector<agent_id> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (agent_id u = 0; u < n && ok; ++u)
      for (agent_id v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline double tv_distance(const std::vector<double>& p,
                          const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("tv: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return s / 2.0;
}

// P(agent is red next round) by enumerating the two picks crossed with their
// bias overrides (bias target blue).  phi is the red neighborhood fraction.
inline double red_stay_oracle(double phi, double p, bool currently_red) {
  double prob = 0.0;
  for (int o0 = 0; o0 < 2; ++o0)
    for (int c0 = 0; c0 < 2; ++c0)
      for (int o1 = 0; o1 < 2; ++o1)
        for (int c1 = 0; c1 < 2; ++c1) {
          const double w = (o0 ? p : 1 - p) * (c0 ? phi : 1 - phi) *
                           (o1 ? p : 1 - p) * (c1 ? phi : 1 - phi);
          const bool red0 = !o0 && c0;  // an override always shows blue
          const bool red1 = !o1 && c1;
          const bool red_next = (red0 == red1) ? red0 : currently_red;
          if (red_next) prob += w;
        }
  return prob;
}

inline std::size_t config_index(const opdyn::ColorConfig& c) {
  std::size_t s = 0;
  for (std::size_t v = 0; v < c.colors.size(); ++v)
    if (c.colors[v] == opdyn::Color::kBlue) s |= std::size_t{1} << v;
  return s;
}

// Empirical distribution over color configurations after `rounds` rounds,
// from `samples` independent simulator runs (one fresh seed per sample).
inline std::vector<double> empirical_distribution(
    const Graph& g, const opdyn::ColorConfig& init,
    opdyn::DynamicsParams params, std::uint32_t rounds, std::uint64_t samples,
    const opdyn::Partition* partition = nullptr) {
  const std::size_t states = std::size_t{1} << g.node_count();
  std::vector<double> freq(states, 0.0);
  const std::uint64_t base = params.seed;
  for (std::uint64_t i = 0; i < samples; ++i) {
    params.seed = opdyn::rng::keyed(base, 0x5a317e, i, 0);
    opdyn::ColorConfig cur = init, buf;
    for (std::uint32_t t = 0; t < rounds; ++t) {
      opdyn::step_into(g, cur, buf, params, partition);
      std::swap(cur, buf);
    }
    freq[config_index(cur)] += 1.0;
  }
  for (double& f : freq) f /= static_cast<double>(samples);
  return freq;
}

}  // namespace testutil
