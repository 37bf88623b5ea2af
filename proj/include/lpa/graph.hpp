#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpa {

/// Vertices and edges are identified by their declaration index.
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised for malformed graph text, duplicate identifiers and unknown
/// endpoints. `line()` and `column()` are 1-based; 0 means "not from text".
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Finite directed multigraph. Declaration order is the canonical total
/// order on vertices and on edges. Immutable once built.
class Graph {
 public:
  struct Edge {
    std::string name;
    VertexId source;
    VertexId range;
  };

  Graph() = default;

  /// Parses the line format
  ///   # comment
  ///   vertex <id>
  ///   edge <id> <source> <range>
  static Graph parse(std::string_view text);

  VertexId add_vertex(const std::string& name);
  EdgeId add_edge(const std::string& name, VertexId source, VertexId range);
  EdgeId add_edge(const std::string& name, std::string_view source, std::string_view range);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::string& edge_name(EdgeId e) const { return edges_.at(e).name; }
  VertexId source(EdgeId e) const { return edges_.at(e).source; }
  VertexId range(EdgeId e) const { return edges_.at(e).range; }

  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// Neither a sink nor an infinite emitter; for a finite graph this is
  /// out-degree >= 1.
  bool is_regular(VertexId v) const { return !out_.at(v).empty(); }

  /// Text form accepted by `parse`.
  std::string to_text() const;

 private:
  void check_fresh(const std::string& name) const;

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

bool is_identifier(std::string_view s);

/// Vertex sets are sorted, duplicate-free vectors of ids.
using VertexSet = std::vector<VertexId>;

VertexSet regular_vertices(const Graph& g);

/// A cycle: closed path with pairwise distinct edge sources, given by its
/// least rotation.
struct CycleWitness {
  std::vector<EdgeId> edges;
  VertexSet vertices;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Every cycle of g exactly once (one witness per rotation class), sorted
/// by (length, edge sequence).
std::vector<CycleWitness> cycles(const Graph& g);

bool cycle_has_exit(const Graph& g, const CycleWitness& c);

/// Vertices reachable from `from` by a possibly trivial path.
VertexSet reachable_from(const Graph& g, std::span<const VertexId> from);

/// Least hereditary and saturated superset of h.
VertexSet hereditary_saturated_closure(const Graph& g, std::span<const VertexId> h);

struct SimplicityReport {
  bool simple = false;
  /// Empty when simple; otherwise names the first failing vertex or cycle.
  std::string reason;
};

SimplicityReport is_simple_lpa(const Graph& g);

std::string format_edges(const Graph& g, std::span<const EdgeId> edges);

}  // namespace lpa
