#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "streamcut/errors.hpp"

namespace streamcut {

using VertexId = std::uint32_t;

enum class StreamKind { insertion_arbitrary, insertion_random_order, dynamic };

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::uint64_t edge_key(Edge e) { return (std::uint64_t{e.u} << 32) | e.v; }

/// One stream item: edge plus delta (+1 insertion, -1 deletion).
struct EdgeEvent {
  VertexId u = 0;
  VertexId v = 0;
  int delta = +1;
  Edge edge() const { return {u, v}; }
  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

struct GraphStream {
  VertexId n = 0;
  StreamKind kind = StreamKind::insertion_arbitrary;
  std::vector<EdgeEvent> events;
};

/// Final (end-of-stream) simple graph. Edges canonical (u < v), sorted, unique.
struct Graph {
  VertexId n = 0;
  std::vector<Edge> edges;

  std::size_t m() const { return edges.size(); }
  std::vector<std::uint32_t> degrees() const;
  std::vector<std::vector<VertexId>> adjacency() const;
};

/// Synthetic stream with its optimum known by construction (or brute force).
struct PlantedInstance {
  GraphStream stream;
  std::int64_t opt_value = 0;
  bool opt_is_exact = false;
  std::optional<std::vector<std::int8_t>> opt_assignment;  // ±1 per vertex
};

/// Returns (min(u,v), max(u,v)); self-loops are malformed.
Edge canonicalize_edge(VertexId u, VertexId v);

/// Replays the event sequence, enforcing that every edge's accumulated
/// multiplicity stays in {0,1}. The error message names the offending event.
Graph build_final_graph(const GraphStream& stream);

struct MaxCutResult {
  std::int64_t opt_value = 0;
  std::vector<std::int8_t> assignment;  // ±1, vertex 0 on the + side
};

inline constexpr VertexId kDefaultExactCap = 24;

/// Exact MAX-CUT by enumerating the 2^(n-1) bipartitions with vertex 0 fixed
/// to the + side. Ties break toward the assignment whose later vertices prefer
/// the + side (lexicographically smallest with + ordered before -).
MaxCutResult brute_force_maxcut(const Graph& g, VertexId n_exact = kDefaultExactCap);

/// Cut edges of g under the given ±1 assignment.
std::int64_t cut_value(const Graph& g, const std::vector<std::int8_t>& assignment);

/// m distinct edges across the (n_left, n_right) bipartition, uniform without
/// replacement. OPT = m exactly; + side = left.
PlantedInstance gen_planted_bipartite(VertexId n_left, VertexId n_right, std::uint64_t m,
                                      std::uint64_t rng_seed);

/// Bipartite base of m_low edges between non-hub left vertices and the right
/// side, plus `hubs` left vertices each joined to hub_degree distinct right
/// vertices. Still bipartite, so OPT = m_low + hubs*hub_degree.
PlantedInstance gen_hub_instance(VertexId n, std::uint64_t m_low, VertexId hubs,
                                 std::uint64_t hub_degree, std::uint64_t rng_seed);

/// Fisher-Yates permutation of an insertion-only stream's events.
GraphStream shuffle_to_random_order(const GraphStream& stream, std::uint64_t rng_seed);

/// Interleaves the base insertions with churn_edges insert-then-delete pairs
/// on edges absent from the base final graph. Final graph and opt metadata
/// are preserved; kind becomes dynamic.
PlantedInstance gen_dynamic_stream(const PlantedInstance& base, std::uint64_t churn_edges,
                                   std::uint64_t rng_seed);

/// theta = eps^2 * m / c with c = 80/delta.
double high_degree_threshold(double eps, double delta, std::uint64_t m);

}  // namespace streamcut
