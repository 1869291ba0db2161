#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "opdyn/graph.hpp"
#include "opdyn/partition.hpp"

// Synthetic core-periphery networks with exact per-agent block degrees: a
// d_core_in-regular core, a d_peri_in-regular periphery, and a biregular
// bipartite cut, so every agent realizes the requested robustness and
// dominance ratios exactly (zero variance across agents).

namespace opdyn {

// Exact nonnegative rational input (e.g. c_d = 7/20).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

// Accepts "7/20", "0.35", "2".  Decimal forms become exact fractions over a
// power of ten.
Rational parse_rational(const std::string& text);

struct SynthSpec {
  std::uint64_t n_periphery = 0;
  double epsilon = 0.5;       // core size = round(n_periphery^epsilon)
  std::uint32_t d_core_out = 0;  // periphery neighbors per core agent
  std::uint32_t d_peri_in = 0;   // periphery neighbors per periphery agent
  Rational c_r;               // target robustness
  Rational c_d;               // target dominance
  std::uint64_t seed = 0;
};

// The integer degree quadruple the spec normalizes to, plus bookkeeping.
struct DegreePlan {
  std::uint64_t core_size = 0;
  double core_size_exact = 0.0;  // n^epsilon before rounding, for reporting
  std::uint32_t d_core_in = 0;   // = c_r * d_core_out
  std::uint32_t d_core_out = 0;
  std::uint32_t d_peri_core = 0;  // = c_d * d_peri_in
  std::uint32_t d_peri_in = 0;
  std::string warning;  // set when min degree < 2*log2(total agents)
};

// Checks the arithmetic contract: the implied block degrees must be positive
// integers and the cut handshake |C|*d_core_out = |P|*d_peri_core must hold.
// Throws std::invalid_argument naming the violated constraint.  Geometric
// realizability (degree below block size, parity) is generate()'s concern: a
// plan can be arithmetically sound yet impossible to draw as a simple graph.
DegreePlan validate(const SynthSpec& spec);

struct SynthResult {
  Graph graph;
  Partition partition;
  DegreePlan plan;
};

// Deterministic in spec.seed: same spec and seed give the same graph,
// byte-identical under canonical serialization.  Agents 0..|C|-1 are the
// core.  Throws when a block cannot be made simple or the graph cannot be
// made connected within the retry budget.
SynthResult generate(const SynthSpec& spec);

// Simple d-regular graph on n agents (the core/periphery block builder,
// exposed for single-population experiments).
Graph random_regular_graph(std::uint64_t n, std::uint32_t d,
                           std::uint64_t seed);

}  // namespace opdyn
