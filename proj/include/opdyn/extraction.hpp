#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opdyn/graph.hpp"
#include "opdyn/partition.hpp"

// Core extraction: a degree-based rich-club cut and a greedy
// densest-subgraph peel under a volume budget.

namespace opdyn {

// Record of one greedy peel.  removal_order lists agents in the order they
// were peeled; best_prefix_index says how many removals precede the chosen
// suffix (0 = nothing removed), so the suffix is removal_order[best_prefix_
// index..] — recomputing its density from scratch reproduces
// best_prefix_density.  skipped_oversized counts suffixes that beat the best
// density but violated the volume cap and were passed over.
struct PeelingTrace {
  std::vector<agent_id> removal_order;
  double best_prefix_density = 0.0;
  std::size_t best_prefix_index = 0;
  std::size_t skipped_oversized = 0;
};

// The k highest-degree agents (ties toward smaller id).  Requires 0 < k < n
// so both sides of the resulting split are nonempty.
std::vector<agent_id> k_rich_club(const Graph& g, std::size_t k);

// Smallest k whose top-k degree sum reaches half the total volume.
std::size_t symmetry_point(const Graph& g);

// Rich-club partition at the symmetry point.
Partition k_rich_club_partition(const Graph& g);

// Greedy peel (repeatedly remove the lowest-degree agent of the remaining
// subgraph, ties toward smaller id) over the subgraph induced by the agents
// NOT in existing_core.  Tracks the best-density suffix among those whose
// volume — measured in g's degrees, added to existing_core's volume — stays
// within volume_cap; suffixes of zero density never qualify.  Returns the
// best suffix, possibly empty.  Pass volume_cap ≥ vol(V) to disable the cap.
std::vector<agent_id> constrained_densest_subgraph(
    const Graph& g, std::uint64_t volume_cap,
    std::span<const agent_id> existing_core, PeelingTrace* trace = nullptr);

// Iterated peel: accumulate best suffixes, removing each from play, while
// the accumulated core stays within half the graph's total volume.  Stops at
// the first empty extraction; an empty FIRST extraction means the graph has
// no extractable core and is an error.
Partition densest_core(const Graph& g, std::vector<PeelingTrace>* traces = nullptr);

enum class CoreMethod { kDensest, kRichClub };

Partition extract_core(const Graph& g, CoreMethod method);

}  // namespace opdyn
