#include "opdyn/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "opdyn/rng.hpp"

namespace opdyn {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::int64_t num = std::stoll(text.substr(0, slash));
    const std::int64_t den = std::stoll(text.substr(slash + 1));
    if (den <= 0 || num < 0)
      throw std::invalid_argument("rational must be nonnegative: " + text);
    return {num, den};
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    const std::int64_t num = std::stoll(text);
    if (num < 0) throw std::invalid_argument("rational must be nonnegative");
    return {num, 1};
  }
  // Decimal: digits after the point become a power-of-ten denominator.
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t frac_len = text.size() - dot - 1;
  if (frac_len == 0 || digits.empty())
    throw std::invalid_argument("malformed rational: " + text);
  std::int64_t num = std::stoll(digits);
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  if (num < 0) throw std::invalid_argument("rational must be nonnegative");
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

namespace {

// c * d as an exact integer, or -1 when it does not divide evenly.
std::int64_t scaled_degree(const Rational& c, std::uint32_t d) {
  const std::int64_t prod = c.num * static_cast<std::int64_t>(d);
  if (c.den == 0 || prod % c.den != 0) return -1;
  return prod / c.den;
}

using Edge = std::pair<agent_id, agent_id>;

std::uint64_t edge_key(agent_id a, agent_id b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Repairs loops/duplicates in a stub pairing by double-edge swaps that
// preserve every endpoint's degree.  `bipartite` restricts swaps to the
// second endpoint so sides never mix.  Returns false if the pairing cannot
// be untangled within the pass budget.
bool repair_pairing(std::vector<Edge>& edges, bool bipartite,
                    rng::Stream& rnd) {
  constexpr int kPasses = 500;
  constexpr int kTriesPerBad = 40;
  std::unordered_map<std::uint64_t, std::uint32_t> count;
  count.reserve(edges.size() * 2);

  for (int pass = 0; pass < kPasses; ++pass) {
    count.clear();
    for (const Edge& e : edges) ++count[edge_key(e.first, e.second)];
    std::vector<std::size_t> bad;
    std::unordered_map<std::uint64_t, bool> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto [a, b] = edges[i];
      if (a == b) {
        bad.push_back(i);
        continue;
      }
      const std::uint64_t k = edge_key(a, b);
      if (count[k] > 1 && std::exchange(seen[k], true))
        bad.push_back(i);  // every copy beyond the first
    }
    if (bad.empty()) return true;

    for (std::size_t i : bad) {
      for (int t = 0; t < kTriesPerBad; ++t) {
        const std::size_t j = rnd.next_below(edges.size());
        if (j == i) continue;
        auto [a, b] = edges[i];
        auto [c, d] = edges[j];
        // Swap the second endpoints: (a,b),(c,d) -> (a,d),(c,b).  In the
        // bipartite blocks all second endpoints are on the same side, so
        // the swap keeps the orientation.
        if (!bipartite && rnd.next() & 1) std::swap(c, d);
        if (a == d || c == b) continue;
        const std::uint64_t k1 = edge_key(a, d), k2 = edge_key(c, b);
        if (k1 == k2 || count[k1] > 0 || count[k2] > 0) continue;
        --count[edge_key(a, b)];
        --count[edge_key(c, d)];
        ++count[k1];
        ++count[k2];
        edges[i] = {a, d};
        edges[j] = {c, b};
        break;
      }
    }
  }
  return false;
}

// Simple d-regular block on ids [offset, offset+size).
std::vector<Edge> regular_block(std::uint64_t size, std::uint32_t d,
                                agent_id offset, std::uint64_t seed,
                                std::uint64_t stream_tag,
                                const char* what = "regular block") {
  if (d == 0) return {};
  if (d >= size)
    throw std::invalid_argument(std::string(what) +
                                ": degree must be below the block size");
  if (size * d % 2 != 0)
    throw std::invalid_argument(std::string(what) +
                                ": block size times degree must be even");
  if (d == size - 1) {
    // Complete graph is the unique simple realization; emit it directly.
    std::vector<Edge> edges;
    edges.reserve(size * d / 2);
    for (agent_id u = 0; u < size; ++u)
      for (agent_id v = u + 1; v < size; ++v)
        edges.emplace_back(offset + u, offset + v);
    return edges;
  }

  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    rng::Stream rnd(seed, stream_tag, static_cast<std::uint64_t>(attempt));
    std::vector<agent_id> stubs;
    stubs.reserve(size * d);
    for (agent_id v = 0; v < size; ++v)
      for (std::uint32_t i = 0; i < d; ++i) stubs.push_back(offset + v);
    for (std::size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[rnd.next_below(i)]);
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i < stubs.size(); i += 2)
      edges.emplace_back(stubs[i], stubs[i + 1]);
    if (repair_pairing(edges, /*bipartite=*/false, rnd)) return edges;
  }
  throw std::runtime_error(
      std::string(what) +
      ": retries exhausted making the pairing simple; use larger degrees or "
      "a larger population");
}

// Biregular bipartite block: left ids [0, left_size) each with d_left
// edges into right ids [right_offset, right_offset+right_size).
std::vector<Edge> bipartite_block(std::uint64_t left_size, std::uint32_t d_left,
                                  std::uint64_t right_size,
                                  std::uint32_t d_right, agent_id right_offset,
                                  std::uint64_t seed,
                                  std::uint64_t stream_tag) {
  if (d_left == 0) return {};
  if (static_cast<std::uint64_t>(d_left) * left_size !=
      static_cast<std::uint64_t>(d_right) * right_size)
    throw std::invalid_argument("bipartite block: stub counts disagree");
  if (d_left > right_size || d_right > left_size)
    throw std::invalid_argument("bipartite block: degree exceeds far side");
  if (d_left == right_size) {
    // Complete bipartite: unique simple realization.
    std::vector<Edge> edges;
    edges.reserve(left_size * right_size);
    for (agent_id u = 0; u < left_size; ++u)
      for (agent_id w = 0; w < right_size; ++w)
        edges.emplace_back(u, right_offset + w);
    return edges;
  }

  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    rng::Stream rnd(seed, stream_tag, static_cast<std::uint64_t>(attempt));
    std::vector<agent_id> right_stubs;
    right_stubs.reserve(right_size * d_right);
    for (agent_id w = 0; w < right_size; ++w)
      for (std::uint32_t i = 0; i < d_right; ++i)
        right_stubs.push_back(right_offset + w);
    for (std::size_t i = right_stubs.size(); i > 1; --i)
      std::swap(right_stubs[i - 1], right_stubs[rnd.next_below(i)]);
    std::vector<Edge> edges;
    edges.reserve(right_stubs.size());
    std::size_t k = 0;
    for (agent_id u = 0; u < left_size; ++u)
      for (std::uint32_t i = 0; i < d_left; ++i)
        edges.emplace_back(u, right_stubs[k++]);
    if (repair_pairing(edges, /*bipartite=*/true, rnd)) return edges;
  }
  throw std::runtime_error(
      "bipartite block: retries exhausted making the pairing simple; use "
      "larger degrees or a larger population");
}

bool connected(const Graph& g) {
  std::vector<std::uint8_t> seen(g.node_count(), 0);
  std::vector<agent_id> stack{0};
  seen[0] = 1;
  std::size_t visited = 0;
  while (!stack.empty()) {
    const agent_id v = stack.back();
    stack.pop_back();
    ++visited;
    for (agent_id w : g.neighbors(v))
      if (!std::exchange(seen[w], 1)) stack.push_back(w);
  }
  return visited == g.node_count();
}

}  // namespace

DegreePlan validate(const SynthSpec& spec) {
  if (spec.n_periphery < 2)
    throw std::invalid_argument("synth: n_periphery must be at least 2");
  if (!(spec.epsilon >= 0.5 && spec.epsilon <= 1.0))
    throw std::invalid_argument("synth: epsilon must lie in [1/2, 1]");
  DegreePlan plan;
  plan.core_size_exact =
      std::pow(static_cast<double>(spec.n_periphery), spec.epsilon);
  plan.core_size = static_cast<std::uint64_t>(std::llround(plan.core_size_exact));
  if (plan.core_size < 1 || plan.core_size >= spec.n_periphery)
    throw std::invalid_argument("synth: core size rounds outside [1, n)");
  plan.d_core_out = spec.d_core_out;
  plan.d_peri_in = spec.d_peri_in;

  // Validation covers the arithmetic contract only: integrality of the
  // implied degrees and the cut handshake.  Geometric realizability (degree
  // below block size, parity) is generate()'s concern, so a plan can be
  // arithmetically sound yet impossible to draw as a simple graph.
  const std::int64_t core_in = scaled_degree(spec.c_r, spec.d_core_out);
  if (core_in <= 0)
    throw std::invalid_argument(
        "synth: c_r * d_core_out is not a positive integer (core-internal "
        "degree)");
  const std::int64_t peri_core = scaled_degree(spec.c_d, spec.d_peri_in);
  if (peri_core <= 0)
    throw std::invalid_argument(
        "synth: c_d * d_peri_in is not a positive integer (periphery-core "
        "degree)");
  plan.d_core_in = static_cast<std::uint32_t>(core_in);
  plan.d_peri_core = static_cast<std::uint32_t>(peri_core);

  if (plan.core_size * plan.d_core_out !=
      spec.n_periphery * static_cast<std::uint64_t>(plan.d_peri_core))
    throw std::invalid_argument(
        "synth: cut handshake violated (|C|*d_core_out != |P|*d_peri_core)");

  const std::uint64_t total = plan.core_size + spec.n_periphery;
  const std::uint32_t min_deg =
      std::min(plan.d_core_in + plan.d_core_out,
               plan.d_peri_core + plan.d_peri_in);
  const double needed = 2.0 * std::log2(static_cast<double>(total));
  if (static_cast<double>(min_deg) < needed)
    plan.warning = "minimum degree " + std::to_string(min_deg) +
                   " is below 2*log2(n) = " + std::to_string(needed) +
                   "; concentration guarantees are weak at this scale";
  return plan;
}

SynthResult generate(const SynthSpec& spec) {
  const DegreePlan plan = validate(spec);
  const std::uint64_t nc = plan.core_size, np = spec.n_periphery;
  const auto peri_offset = static_cast<agent_id>(nc);

  constexpr int kConnectivityRetries = 50;
  for (int attempt = 0; attempt < kConnectivityRetries; ++attempt) {
    // Salt every block's stream with the connectivity attempt so a retry
    // redraws everything.
    const std::uint64_t salt = static_cast<std::uint64_t>(attempt) * 4;
    std::vector<Edge> edges =
        regular_block(nc, plan.d_core_in, 0, spec.seed,
                      /*stream_tag=*/1 + salt, "core-internal block");
    auto peri =
        regular_block(np, plan.d_peri_in, peri_offset, spec.seed,
                      /*stream_tag=*/2 + salt, "periphery-internal block");
    edges.insert(edges.end(), peri.begin(), peri.end());
    auto cut = bipartite_block(nc, plan.d_core_out, np, plan.d_peri_core,
                               peri_offset, spec.seed, /*stream_tag=*/3 + salt);
    edges.insert(edges.end(), cut.begin(), cut.end());

    Graph g(nc + np, edges);
    if (!connected(g)) continue;
    std::vector<agent_id> core(nc);
    std::iota(core.begin(), core.end(), 0);
    Partition part(g, core);
    return {std::move(g), std::move(part), plan};
  }
  throw std::runtime_error(
      "synth: could not produce a connected graph in 50 attempts; use larger "
      "degrees or a larger population");
}

Graph random_regular_graph(std::uint64_t n, std::uint32_t d,
                           std::uint64_t seed) {
  if (d == 0) throw std::invalid_argument("random_regular_graph: degree 0");
  return Graph(n, regular_block(n, d, 0, seed, /*stream_tag=*/0));
}

}  // namespace opdyn
