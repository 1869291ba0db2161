#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "opdyn/graph.hpp"

// Core/periphery bipartitions and their cut statistics.  All cut quantities
// use the ordered-pair convention: c(A, B) is the set of ordered pairs
// (u, v) with u ∈ A, v ∈ B and {u, v} an edge, so an undirected edge inside
// a set contributes 2 to c(X, X) and the identity
// |c(C,C)| + 2|c(C,P)| + |c(P,P)| = 2m always holds.

namespace opdyn {

// Nonnegative rational that may be infinite (positive numerator over zero).
// Infinite values are first-class and order above every finite value.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  bool infinite() const { return den == 0; }
  double value() const {
    if (den == 0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num) / static_cast<double>(den);
  }
  // Cross-multiplied exact comparison; infinities sort above all finites.
  friend bool operator<(const Ratio& a, const Ratio& b) {
    if (a.infinite()) return false;
    if (b.infinite()) return true;
    return static_cast<unsigned __int128>(a.num) * b.den <
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend bool operator==(const Ratio& a, const Ratio& b) {
    if (a.infinite() || b.infinite()) return a.infinite() == b.infinite();
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

// A core/periphery split of a graph's agents with the cut counts cached at
// construction.  Both sides must be nonempty.
class Partition {
 public:
  Partition(const Graph& g, std::span<const agent_id> core);

  bool in_core(agent_id v) const { return in_core_[v] != 0; }
  const std::vector<agent_id>& core() const { return core_; }
  std::size_t core_size() const { return core_.size(); }
  std::size_t periphery_size() const { return n_ - core_.size(); }
  std::vector<agent_id> periphery() const;

  // Ordered-pair cut cardinalities.
  std::uint64_t cc() const { return cc_; }  // |c(C,C)|
  std::uint64_t cp() const { return cp_; }  // |c(C,P)| = |c(P,C)|
  std::uint64_t pp() const { return pp_; }  // |c(P,P)|

  std::uint64_t core_volume() const { return vol_core_; }
  std::uint64_t periphery_volume() const { return vol_peri_; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> in_core_;
  std::vector<agent_id> core_;
  std::uint64_t cc_ = 0, cp_ = 0, pp_ = 0;
  std::uint64_t vol_core_ = 0, vol_peri_ = 0;
};

// |c(A, B)| for arbitrary agent sets (ordered pairs; A and B may overlap).
std::uint64_t cut_size(const Graph& g, std::span<const agent_id> a,
                       std::span<const agent_id> b);

// δ(X) = |c(X, X)| / |X|.  Empty X is an error.
double density(const Graph& g, std::span<const agent_id> x);

// Dominance c_d = |c(C,P)| / |c(P,P)| — the core's pull on the periphery.
// Robustness c_r = |c(C,C)| / |c(P,C)| — the core's insulation from it.
// A zero denominator under a positive numerator is the infinite ratio; 0/0
// is an error (the graph's connectivity normally rules it out).
Ratio dominance(const Partition& p);
Ratio robustness(const Partition& p);

// Per-agent ratio analogues: for a core agent, core-neighbors over
// periphery-neighbors; for a periphery agent, core-neighbors over
// periphery-neighbors.  Exact rationals, possibly infinite.
struct PerAgentRatios {
  std::vector<Ratio> core;       // indexed like Partition::core()
  std::vector<Ratio> periphery;  // indexed like Partition::periphery()
};
PerAgentRatios per_agent_ratios(const Graph& g, const Partition& p);

// Flat metrics record (JSON text): n, m, core size, volumes, c_r, c_d,
// per-agent ratio min/mean/max for both sides, density(C), density(V).
// Infinite values serialize as the string "inf".
std::string metrics_json(const Graph& g, const Partition& p);

}  // namespace opdyn
