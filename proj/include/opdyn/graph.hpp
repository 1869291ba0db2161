#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Undirected simple graphs over dense agent ids, plus the text pipeline that
// produces them: parse → normalize → largest component.  Internal ids are
// 0..n-1; the original file labels ride along so results can be reported in
// the input's vocabulary.

namespace opdyn {

using agent_id = std::uint32_t;

// Parse failure; carries the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t line)
      : std::runtime_error(std::move(msg)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raw parsed edge list: endpoint pairs over dense ids assigned in order of
// first appearance, before any cleanup.  May still contain self-loops,
// duplicates and both orientations.
struct EdgeList {
  std::vector<std::pair<agent_id, agent_id>> pairs;
  std::vector<std::string> labels;  // dense id -> original label
};

// Immutable undirected simple graph in CSR form.  Neighbor lists are sorted
// ascending.  Degree-0 vertices are representable (a source file can mention
// an agent only in self-loops) but never survive largest_component().
class Graph {
 public:
  Graph() = default;
  // Builds from unique undirected edges (u < v not required; no loops or
  // duplicates allowed — callers go through normalize() for raw input).
  Graph(std::size_t n, const std::vector<std::pair<agent_id, agent_id>>& edges,
        std::vector<std::string> labels = {});

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::uint64_t edge_count() const { return adjacency_.size() / 2; }  // m
  std::uint64_t volume() const { return adjacency_.size(); }          // 2m

  std::uint32_t degree(agent_id v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const agent_id> neighbors(agent_id v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  bool has_edge(agent_id u, agent_id v) const;

  const std::string& label(agent_id v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Total degree of a set of agents (duplicates in `agents` count twice).
  std::uint64_t volume_of(std::span<const agent_id> agents) const;

  // Edges as (u, v) with u < v, sorted ascending — the canonical order.
  std::vector<std::pair<agent_id, agent_id>> sorted_edges() const;

  // Canonical text form: one "u v" line per edge, u < v, lines sorted
  // ascending by (u, v).  Byte-identical across runs and platforms.
  std::string canonical_text() const;
  void write_canonical(const std::string& path) const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<agent_id> adjacency_;
  std::vector<std::string> labels_;
};

// Reads a whitespace-separated edge list.  Lines starting with '#' or '%'
// and blank lines are skipped; the first two tokens of a data line are the
// endpoints and any extra tokens (weights, timestamps) are ignored.  A data
// line with fewer than two tokens raises ParseError with its line number,
// as does input containing no edges at all.
EdgeList parse_edge_list(std::istream& in);
EdgeList parse_edge_list_text(const std::string& text);
EdgeList load_edge_list(const std::string& path);

// Drops orientation, self-loops and duplicate edges.  Multi-edges collapse
// to one (multigraph sources lose their multiplicities here).  A result with
// zero edges is an error.
Graph normalize(const EdgeList& edges);

// Induced subgraph on the largest connected component; ties on node count go
// to the component containing the smallest internal id.  Ids are re-densified
// preserving relative order, labels follow.  Idempotent.
Graph largest_component(const Graph& g);

// parse + normalize + largest_component in one step.
Graph load_graph(const std::string& path);

}  // namespace opdyn
