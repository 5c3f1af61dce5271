#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thickness/graph.hpp"
#include "thickness/planarity.hpp"

namespace thickness {

/// An assignment of host edges to pages (candidate planar subgraphs). Pages
/// are stored as sorted sets of host edge indices; every page is a spanning
/// subgraph of the host. A decomposition always has at least one page, even
/// for edgeless hosts. Validity (partition into planar pages) is checked by
/// verify(), not enforced by the type.
class Decomposition {
 public:
  Decomposition() : Decomposition(Graph(), {{}}) {}
  Decomposition(Graph host, std::vector<std::vector<int>> pages);

  /// All host edges on one page.
  static Decomposition single_page(Graph host);
  /// Pages given as edge label pairs; every edge must exist in the host.
  static Decomposition from_edge_labels(Graph host,
                                        const std::vector<std::vector<VertexPair>>& pages);

  const Graph& host() const { return host_; }
  int page_count() const { return static_cast<int>(pages_.size()); }
  const std::vector<std::vector<int>>& pages() const { return pages_; }

  /// Page as a spanning subgraph of the host.
  Graph page_graph(int page) const;
  std::vector<VertexPair> page_edge_labels(int page) const;

  /// Same decomposition with empty pages appended up to `page_count` pages.
  Decomposition padded(int page_count) const;

  bool operator==(const Decomposition&) const = default;

 private:
  Graph host_;
  std::vector<std::vector<int>> pages_;
};

/// Result of checking a decomposition. `valid()` means the pages partition
/// the host's edge set and every page is planar. Hub pairing (every hub edge
/// pair (layer j, slot q)-hub and (layer j+1, slot q)-hub on a common page)
/// is reported when the host has hub vertices; it is a precondition for
/// contraction, not for validity.
struct VerificationReport {
  bool partition_ok = false;  // no edge on two pages
  bool coverage_ok = false;   // every edge on some page
  std::vector<PlanarityVerdict> page_verdicts;
  std::optional<bool> pairing_ok;
  std::string detail;  // first failure, human-readable; empty if fully clean

  bool pages_planar() const;
  bool valid() const;
};

VerificationReport verify(const Decomposition& d, WitnessMode mode = WitnessMode::full);

/// Induced sub-decomposition: host restricted to `keep`, every page keeps its
/// surviving edges. Page count is preserved.
Decomposition restrict_to(const Decomposition& d, const std::vector<VertexId>& keep);

}  // namespace thickness
