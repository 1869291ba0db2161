#include "opdyn/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace opdyn {

Partition::Partition(const Graph& g, std::span<const agent_id> core)
    : n_(g.node_count()), in_core_(g.node_count(), 0) {
  for (agent_id v : core) {
    if (v >= n_) throw std::invalid_argument("partition: agent out of range");
    if (in_core_[v]) throw std::invalid_argument("partition: duplicate agent");
    in_core_[v] = 1;
  }
  core_.assign(core.begin(), core.end());
  std::sort(core_.begin(), core_.end());
  if (core_.empty()) throw std::invalid_argument("partition: empty core");
  if (core_.size() == n_)
    throw std::invalid_argument("partition: empty periphery");

  for (agent_id u = 0; u < n_; ++u) {
    if (in_core_[u])
      vol_core_ += g.degree(u);
    else
      vol_peri_ += g.degree(u);
    for (agent_id v : g.neighbors(u)) {
      if (in_core_[u] && in_core_[v])
        ++cc_;
      else if (!in_core_[u] && !in_core_[v])
        ++pp_;
      else if (in_core_[u])
        ++cp_;  // count ordered core→periphery pairs once
    }
  }
}

std::vector<agent_id> Partition::periphery() const {
  std::vector<agent_id> out;
  out.reserve(periphery_size());
  for (agent_id v = 0; v < n_; ++v)
    if (!in_core_[v]) out.push_back(v);
  return out;
}

std::uint64_t cut_size(const Graph& g, std::span<const agent_id> a,
                       std::span<const agent_id> b) {
  std::vector<std::uint8_t> in_b(g.node_count(), 0);
  for (agent_id v : b) in_b[v] = 1;
  std::uint64_t count = 0;
  for (agent_id u : a)
    for (agent_id v : g.neighbors(u)) count += in_b[v];
  return count;
}

double density(const Graph& g, std::span<const agent_id> x) {
  if (x.empty()) throw std::invalid_argument("density of empty agent set");
  return static_cast<double>(cut_size(g, x, x)) / static_cast<double>(x.size());
}

namespace {
Ratio make_ratio(std::uint64_t num, std::uint64_t den, const char* what) {
  if (den == 0 && num == 0)
    throw std::invalid_argument(std::string(what) + " is 0/0 (no such edges)");
  return Ratio{num, den};
}
}  // namespace

Ratio dominance(const Partition& p) {
  return make_ratio(p.cp(), p.pp(), "dominance");
}

Ratio robustness(const Partition& p) {
  return make_ratio(p.cc(), p.cp(), "robustness");
}

PerAgentRatios per_agent_ratios(const Graph& g, const Partition& p) {
  PerAgentRatios out;
  auto ratio_for = [&](agent_id v) {
    std::uint64_t to_core = 0, to_peri = 0;
    for (agent_id w : g.neighbors(v)) (p.in_core(w) ? to_core : to_peri) += 1;
    return Ratio{to_core, to_peri};
  };
  out.core.reserve(p.core_size());
  for (agent_id v : p.core()) out.core.push_back(ratio_for(v));
  out.periphery.reserve(p.periphery_size());
  for (agent_id v : p.periphery()) out.periphery.push_back(ratio_for(v));
  return out;
}

namespace {

// JSON has no infinity; report it as the string "inf".
nlohmann::ordered_json json_number(double x) {
  if (std::isinf(x)) return "inf";
  return x;
}

nlohmann::ordered_json ratio_stats(const std::vector<Ratio>& rs) {
  nlohmann::ordered_json j;
  const Ratio* mn = &rs.front();
  const Ratio* mx = &rs.front();
  bool any_inf = false;
  double sum = 0;
  for (const Ratio& r : rs) {
    if (r < *mn) mn = &r;
    if (*mx < r) mx = &r;
    if (r.infinite())
      any_inf = true;
    else
      sum += r.value();
  }
  j["min"] = json_number(mn->value());
  j["mean"] = any_inf ? json_number(std::numeric_limits<double>::infinity())
                      : json_number(sum / static_cast<double>(rs.size()));
  j["max"] = json_number(mx->value());
  return j;
}

}  // namespace

std::string metrics_json(const Graph& g, const Partition& p) {
  nlohmann::ordered_json j;
  j["n"] = g.node_count();
  j["m"] = g.edge_count();
  j["core_size"] = p.core_size();
  j["vol_core"] = p.core_volume();
  j["vol_periphery"] = p.periphery_volume();
  j["robustness"] = json_number(robustness(p).value());
  j["dominance"] = json_number(dominance(p).value());
  // The global edge-count ratios above are the headline numbers; per-agent
  // aggregates follow as the alternative per-agent reading.
  auto ratios = per_agent_ratios(g, p);
  j["core_agent_ratio"] = ratio_stats(ratios.core);
  j["periphery_agent_ratio"] = ratio_stats(ratios.periphery);
  std::vector<agent_id> all(g.node_count());
  for (agent_id v = 0; v < g.node_count(); ++v) all[v] = v;
  j["density_core"] = density(g, p.core());
  j["density_total"] = density(g, all);
  j["cut_convention"] = "ordered-pair";
  return j.dump(2);
}

}  // namespace opdyn
