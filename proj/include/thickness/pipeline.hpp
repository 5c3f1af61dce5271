#pragma once

#include <stdexcept>

#include "thickness/constructions.hpp"
#include "thickness/search.hpp"

namespace thickness {

/// The construction pipeline could not produce a verified decomposition.
/// `status` is exhausted when every candidate base was enumerated and
/// rejected, inconclusive when a budget ran out first.
struct PipelineError : std::runtime_error {
  PipelineError(std::string message, SearchStatus failure_status)
      : std::runtime_error(std::move(message)), status(failure_status) {}
  SearchStatus status;
};

struct PipelineOptions {
  SearchBudget budget;
  /// Page count to aim for; 0 derives the targets from the closed-form
  /// bracket and tries each value from its lower to its upper end.
  int page_count = 0;
};

struct PipelineResult {
  Decomposition decomposition;  // verified decomposition of product_graph(n, m)
  int rejected_bases = 0;       // candidates whose chain or contraction failed
  bool used_fallback = false;   // unconstrained (non-hub-symmetric) base search
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Build a verified decomposition of K_n square P_m.
///
/// m == 1 searches the single layer directly. m == 2 searches bases over the
/// complete graph on n+1 vertices and mirror-doubles them. m >= 3 searches
/// hub-symmetric bases over the complete graph on n+2 vertices minus the
/// hub edge, derives the end bases by restriction, chains m blocks and
/// contracts; when the constrained search yields nothing the unconstrained
/// alignment fallback runs. Every candidate's final product decomposition is
/// re-verified before being returned.
PipelineResult construct_product_decomposition(int n, int m, const PipelineOptions& options = {});

}  // namespace thickness
