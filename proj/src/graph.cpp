#include "opdyn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace opdyn {

Graph::Graph(std::size_t n,
             const std::vector<std::pair<agent_id, agent_id>>& edges,
             std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != n)
    throw std::invalid_argument("graph: label count does not match node count");

  std::vector<std::uint32_t> deg(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop in edge set");
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency_.begin() + offsets_[v];
    auto last = adjacency_.begin() + offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last)
      throw std::invalid_argument("graph: duplicate edge in edge set");
  }
}

bool Graph::has_edge(agent_id u, agent_id v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::volume_of(std::span<const agent_id> agents) const {
  std::uint64_t vol = 0;
  for (agent_id v : agents) vol += degree(v);
  return vol;
}

std::vector<std::pair<agent_id, agent_id>> Graph::sorted_edges() const {
  std::vector<std::pair<agent_id, agent_id>> edges;
  edges.reserve(edge_count());
  for (agent_id u = 0; u < node_count(); ++u)
    for (agent_id v : neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  // CSR iteration already yields (u, v) ascending; nothing to sort.
  return edges;
}

std::string Graph::canonical_text() const {
  std::string out;
  for (auto [u, v] : sorted_edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

void Graph::write_canonical(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << canonical_text();
  if (!out) throw std::runtime_error("write failed: " + path);
}

EdgeList parse_edge_list(std::istream& in) {
  EdgeList result;
  std::unordered_map<std::string, agent_id> ids;
  std::string line, tok_u, tok_v;
  std::size_t line_no = 0;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] =
        ids.try_emplace(label, static_cast<agent_id>(result.labels.size()));
    if (inserted) result.labels.push_back(label);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    if (!(ls >> tok_u)) continue;  // blank line
    if (tok_u[0] == '#' || tok_u[0] == '%') continue;
    if (!(ls >> tok_v))
      throw ParseError("edge line has fewer than two tokens (line " +
                           std::to_string(line_no) + ")",
                       line_no);
    const agent_id u = intern(tok_u);  // sequenced: u interns before v
    const agent_id v = intern(tok_v);
    result.pairs.emplace_back(u, v);
    // Extra tokens (weights, timestamps) are deliberately ignored.
  }
  if (result.pairs.empty())
    throw ParseError("input contains no edges", line_no);
  return result;
}

EdgeList parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

EdgeList load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return parse_edge_list(in);
}

Graph normalize(const EdgeList& edges) {
  std::vector<std::pair<agent_id, agent_id>> unique;
  unique.reserve(edges.pairs.size());
  for (auto [u, v] : edges.pairs) {
    if (u == v) continue;  // self-loop
    unique.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (unique.empty())
    throw std::invalid_argument(
        "graph has zero edges after normalization (only self-loops)");
  return Graph(edges.labels.size(), unique, edges.labels);
}

Graph largest_component(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> component(n, UINT32_MAX);
  std::vector<std::size_t> size_of;
  std::vector<agent_id> queue;

  for (agent_id start = 0; start < n; ++start) {
    if (component[start] != UINT32_MAX) continue;
    const auto comp = static_cast<std::uint32_t>(size_of.size());
    component[start] = comp;
    queue.assign(1, start);
    std::size_t sz = 0;
    while (!queue.empty()) {
      agent_id v = queue.back();
      queue.pop_back();
      ++sz;
      for (agent_id w : g.neighbors(v)) {
        if (component[w] == UINT32_MAX) {
          component[w] = comp;
          queue.push_back(w);
        }
      }
    }
    size_of.push_back(sz);
  }

  // Components are discovered in increasing order of their smallest id, so
  // keeping the first maximum resolves size ties toward the smallest id.
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < size_of.size(); ++c)
    if (size_of[c] > size_of[best]) best = c;

  // Re-densify ids, preserving relative order.
  std::vector<agent_id> remap(n, UINT32_MAX);
  std::vector<std::string> labels;
  labels.reserve(size_of[best]);
  agent_id next = 0;
  for (agent_id v = 0; v < n; ++v) {
    if (component[v] == best) {
      remap[v] = next++;
      labels.push_back(g.label(v));
    }
  }
  std::vector<std::pair<agent_id, agent_id>> edges;
  for (auto [u, v] : g.sorted_edges())
    if (component[u] == best && component[v] == best)
      edges.emplace_back(remap[u], remap[v]);
  return Graph(size_of[best], edges, std::move(labels));
}

Graph load_graph(const std::string& path) {
  return largest_component(normalize(load_edge_list(path)));
}

}  // namespace opdyn
