#include "opdyn/extraction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace opdyn {

std::vector<agent_id> k_rich_club(const Graph& g, std::size_t k) {
  const std::size_t n = g.node_count();
  if (k == 0 || k >= n)
    throw std::invalid_argument("k_rich_club: k must satisfy 0 < k < n");
  std::vector<agent_id> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Highest degree first; ids ascending inside a degree class.
  std::sort(order.begin(), order.end(), [&](agent_id a, agent_id b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

std::size_t symmetry_point(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<agent_id> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](agent_id a, agent_id b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  // First k whose degree sum reaches vol(V)/2 = m.  The minimum degree of a
  // graph never exceeds m, so k < n is guaranteed.
  const std::uint64_t half = g.edge_count();
  std::uint64_t cum = 0;
  for (std::size_t k = 0; k < n; ++k) {
    cum += g.degree(order[k]);
    if (cum >= half) return k + 1;
  }
  return n;  // unreachable for graphs with at least one edge
}

Partition k_rich_club_partition(const Graph& g) {
  return Partition(g, k_rich_club(g, symmetry_point(g)));
}

std::vector<agent_id> constrained_densest_subgraph(
    const Graph& g, std::uint64_t volume_cap,
    std::span<const agent_id> existing_core, PeelingTrace* trace) {
  const std::size_t n = g.node_count();
  std::vector<std::uint8_t> active(n, 1);
  std::uint64_t existing_vol = 0;
  for (agent_id v : existing_core) {
    if (v >= n)
      throw std::invalid_argument("constrained peel: agent out of range");
    active[v] = 0;
    existing_vol += g.degree(v);
  }

  // Current degrees within the active set, the active internal ordered-pair
  // count, and the active volume measured in g's (original) degrees.
  std::vector<std::uint32_t> deg(n, 0);
  std::uint64_t pairs = 0, size = 0, vol = 0;
  std::set<std::pair<std::uint32_t, agent_id>> queue;
  for (agent_id v = 0; v < n; ++v) {
    if (!active[v]) continue;
    for (agent_id w : g.neighbors(v)) deg[v] += active[w];
    pairs += deg[v];
    vol += g.degree(v);
    ++size;
    queue.emplace(deg[v], v);
  }

  PeelingTrace local;
  PeelingTrace& tr = trace ? *trace : local;
  tr = PeelingTrace{};
  // Exact density comparison: suffix (pairs, size) beats the best so far iff
  // pairs * best_size > best_pairs * size, avoiding float ties.
  std::uint64_t best_pairs = 0, best_size = 0;
  std::size_t best_index = 0;
  bool have_best = false;

  auto consider = [&](std::size_t removed) {
    if (pairs == 0) return;  // zero-density suffixes never qualify
    const bool better =
        !have_best || static_cast<unsigned __int128>(pairs) * best_size >
                          static_cast<unsigned __int128>(best_pairs) * size;
    if (!better) return;
    if (existing_vol + vol > volume_cap) {
      ++tr.skipped_oversized;  // denser but oversized: keep peeling
      return;
    }
    best_pairs = pairs;
    best_size = size;
    best_index = removed;
    have_best = true;
  };

  consider(0);
  while (size > 0) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    for (agent_id w : g.neighbors(v)) {
      if (!active[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.insert({deg[w], w});
    }
    active[v] = 0;
    pairs -= 2 * static_cast<std::uint64_t>(d);
    vol -= g.degree(v);
    --size;
    tr.removal_order.push_back(v);
    consider(tr.removal_order.size());
  }

  if (!have_best) return {};
  tr.best_prefix_index = best_index;
  tr.best_prefix_density =
      static_cast<double>(best_pairs) / static_cast<double>(best_size);

  // The winning suffix: everything that was active, minus the first
  // best_index removals.
  std::vector<std::uint8_t> removed_early(n, 0);
  for (std::size_t i = 0; i < best_index; ++i)
    removed_early[tr.removal_order[i]] = 1;
  std::vector<agent_id> out;
  out.reserve(best_size);
  std::vector<std::uint8_t> in_existing(n, 0);
  for (agent_id v : existing_core) in_existing[v] = 1;
  for (agent_id v = 0; v < n; ++v)
    if (!in_existing[v] && !removed_early[v]) out.push_back(v);
  return out;
}

Partition densest_core(const Graph& g, std::vector<PeelingTrace>* traces) {
  // Budget: the accumulated core may take at most half the total volume,
  // measured in the original graph's degrees throughout.
  const std::uint64_t cap = g.volume() / 2;
  std::vector<agent_id> core;
  for (;;) {
    PeelingTrace tr;
    auto found = constrained_densest_subgraph(g, cap, core, &tr);
    if (traces) traces->push_back(std::move(tr));
    if (found.empty()) break;
    core.insert(core.end(), found.begin(), found.end());
  }
  if (core.empty())
    throw std::runtime_error(
        "no extractable core: every candidate subgraph exceeds half the "
        "graph volume or has zero density");
  std::sort(core.begin(), core.end());
  return Partition(g, core);
}

Partition extract_core(const Graph& g, CoreMethod method) {
  switch (method) {
    case CoreMethod::kDensest:
      return densest_core(g);
    case CoreMethod::kRichClub:
      return k_rich_club_partition(g);
  }
  throw std::invalid_argument("unknown core extraction method");
}

}  // namespace opdyn
