#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "thickness/bounds.hpp"
#include "thickness/decomposition.hpp"

namespace thickness {

struct SearchBudget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = 60.0;
  /// Edges assigned to a page between incremental planarity checks.
  /// 0 = auto: every edge for hosts with <= 25 edges, every third edge above.
  int planarity_check_interval = 0;
};

/// Optional restrictions on the searched decompositions. Constraints only
/// prune: any decomposition satisfying them stays reachable.
struct SearchConstraint {
  /// Two nonadjacent vertices (a, b): for every x adjacent to both, the edges
  /// xa and xb are forced onto a common page.
  std::optional<VertexPair> hub_symmetric;
  /// Edges forced onto specific pages (0-based page indices). Pins disable
  /// the page-symmetry reduction.
  std::vector<std::pair<VertexPair, int>> pinned;

  bool empty() const { return !hub_symmetric && pinned.empty(); }
};

enum class SearchStatus { found, exhausted, inconclusive };
std::string search_status_name(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<Decomposition> certificate;  // present iff status == found
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Candidate filter: return true to keep the candidate (ends the search) or
/// false to discard it and continue enumerating.
using AcceptFn = std::function<bool(const Decomposition&)>;

/// Backtracking search for a k-page decomposition of g. Deterministic: edges
/// are assigned in a fixed vertex-incremental order, pages are tried in
/// ascending order, and page symmetry is broken by never opening page i+1
/// before page i (unless pins name explicit pages). Exceeding the budget
/// yields an explicit `inconclusive`.
SearchResult find_decomposition(const Graph& g, int k, const SearchConstraint& constraint = {},
                                const SearchBudget& budget = {}, const AcceptFn& accept = nullptr);

/// First-fit: assign each edge to the lowest page that stays planar, opening
/// pages as needed. Always succeeds; the result is a valid decomposition.
Decomposition greedy_decomposition(const Graph& g);

struct ExactThicknessResult {
  ThicknessBound bound;  // provenance search_certificate
  std::optional<Decomposition> certificate;  // bound.hi pages
  std::uint64_t nodes = 0;
  double seconds = 0.0;

  bool exact() const { return bound.exact(); }
};

/// Determine thickness by searching k = lower bound, lower bound + 1, ...
/// The result is exact when every smaller k was exhausted; if the budget runs
/// out the result is the honest interval [largest k not yet excluded,
/// best certificate found].
ExactThicknessResult exact_thickness(const Graph& g, const SearchBudget& budget = {});

}  // namespace thickness
