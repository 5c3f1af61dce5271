#pragma once

#include <optional>
#include <stdexcept>

#include "thickness/decomposition.hpp"

namespace thickness {

/// Two hub edges that must share a page sit on different ones.
struct PairingError : std::runtime_error {
  PairingError(std::string message, VertexId hub_vertex, int slot_value)
      : std::runtime_error(std::move(message)), hub(std::move(hub_vertex)), slot(slot_value) {}
  VertexId hub;
  int slot;
};

/// No page relabeling makes consecutive blocks agree at a hub.
struct AlignmentError : std::runtime_error {
  AlignmentError(std::string message, VertexId hub_vertex)
      : std::runtime_error(std::move(message)), hub(std::move(hub_vertex)) {}
  VertexId hub;
};

/// A construction produced a decomposition that fails re-verification.
struct ConstructionError : std::runtime_error {
  ConstructionError(std::string message, VerificationReport failed_report)
      : std::runtime_error(std::move(message)), report(std::move(failed_report)) {}
  VerificationReport report;
};

/// K_n square P_m with Layer labels (layer = path position, slot = complete
/// graph vertex position).
Graph product_graph(int n, int m);

/// The chain graph for the product family: m complete layers of n vertices,
/// hubs w_1..w_{m-1}, hub j adjacent to every vertex of layers j and j+1.
/// Block 1 and block m are complete graphs on n+1 vertices; every interior
/// block is a complete graph on n+2 vertices minus its hub-hub edge.
Graph build_chain_graph(int n, int m);

/// If `g` equals build_chain_graph(n, m) for some n, m, return (n, m).
std::optional<std::pair<int, int>> chain_shape(const Graph& g);
/// If `g` equals product_graph(n, m) for some n, m, return (n, m).
std::optional<std::pair<int, int>> product_shape(const Graph& g);

/// Mirror doubling: from a valid decomposition of a complete graph with a
/// designated hub vertex, build a decomposition of the two-layer chain graph
/// (two copies glued at one hub) by placing a copy and its mirror image on
/// each page. Preserves page count; the result satisfies hub pairing by
/// construction.
Decomposition double_decomposition(const Decomposition& base, const VertexId& hub);

/// Contract a chain decomposition back to the product: each paired pair of
/// hub edges at (hub j, slot q) becomes the rung between layers j and j+1 at
/// slot q. Throws PairingError when pairing fails and ConstructionError when
/// a contracted page loses planarity.
Decomposition contract_chain(const Decomposition& d);

/// Two-layer special case of contract_chain; `hub` must be the chain's only
/// hub vertex.
Decomposition contract_hub_p2(const Decomposition& d, const VertexId& hub);

/// Inverse rewrite of contract_chain: each rung edge of a product
/// decomposition is replaced by its two hub edges on the same page. Total,
/// but NOT always validity-preserving: a lifted page can lose planarity, so
/// callers must verify the result.
Decomposition expand_decomposition(const Decomposition& d);

/// Glue two valid decompositions at one vertex. Pages with equal index are
/// merged; the shorter side is padded with empty pages, so the page count is
/// the maximum of the two.
Decomposition amalgamate_decompositions(const Decomposition& d1, const VertexId& v1,
                                        const Decomposition& d2, const VertexId& v2,
                                        const VertexId& label);

/// Input to chain_decomposition. The end base decomposes a complete graph on
/// n+1 vertices (hub = end_hub); the middle base, required for m >= 3,
/// decomposes a complete graph on n+2 vertices minus the edge between the two
/// designated hubs.
struct ChainSpec {
  int n = 0;
  int m = 0;
  Decomposition end_base;
  VertexId end_hub;
  std::optional<Decomposition> mid_base;
  std::optional<VertexPair> mid_hubs;
};

/// Assemble a decomposition of build_chain_graph(n, m) from per-block bases,
/// aligning pages at every hub. Blocks may be page-permuted, slot-permuted
/// and flipped independently; hub-symmetric middle bases align trivially,
/// other bases go through a per-junction alignment search. Page count is the
/// maximum of the base page counts. Throws AlignmentError when some junction
/// cannot be aligned.
Decomposition chain_decomposition(const ChainSpec& spec);

}  // namespace thickness
