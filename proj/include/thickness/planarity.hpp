#pragma once

#include <optional>
#include <vector>

#include "thickness/graph.hpp"

namespace thickness {

/// Outcome of a planarity test. Exactly one witness is present: a rotation
/// system (combinatorial embedding) when planar, a Kuratowski subgraph edge
/// list when not. `rotation[i]` lists the neighbors of vertex i (as indices
/// into the graph's vertex list) in cyclic embedding order.
struct PlanarityVerdict {
  bool planar = false;
  std::optional<std::vector<std::vector<int>>> rotation;
  std::optional<std::vector<VertexPair>> kuratowski;
};

enum class WitnessMode { none, full };

PlanarityVerdict is_planar(const Graph& g, WitnessMode mode = WitnessMode::full);

/// Boolean-only planarity on a raw edge list over vertices 0..vertex_count-1.
/// Hot path for the search module.
bool is_planar_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

/// Maximum edges of a simple planar graph: 0 for 1 vertex, 1 for 2, 3n-6 else.
/// Throws for vertex_count < 1.
int euler_edge_cap(int vertex_count);

/// True when the edge count alone already rules out planarity.
bool fast_reject(const Graph& g);

/// Face count and Euler check for a claimed rotation system, computed by
/// tracing face orbits component by component. Isolated vertices count one
/// face each toward their own component.
struct EmbeddingCheck {
  bool shape_ok = false;  // rotation lists match the graph's adjacency
  bool euler_ok = false;  // every component satisfies V - E + F = 2
  int faces = 0;
  int components = 0;
};
EmbeddingCheck check_embedding(const Graph& g, const std::vector<std::vector<int>>& rotation);

/// True when `edges` all belong to `host` and form a subdivision of K_5 or
/// K_{3,3}.
bool is_kuratowski_witness(const Graph& host, const std::vector<VertexPair>& edges);

}  // namespace thickness
