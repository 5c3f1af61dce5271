#include "thickness/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace thickness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<VertexId> all_but(const Graph& g, const VertexId& skip) {
  std::vector<VertexId> keep;
  for (const auto& v : g.vertices())
    if (v != skip) keep.push_back(v);
  return keep;
}

/// Base searches run constraint-heavy trees where checking planarity after
/// every edge prunes far better than the general default; the caller's
/// explicit interval still wins.
SearchBudget slice_budget(const SearchBudget& outer, double seconds) {
  SearchBudget sub = outer;
  sub.max_seconds = seconds;
  if (sub.planarity_check_interval == 0) sub.planarity_check_interval = 1;
  return sub;
}

}  // namespace

PipelineResult construct_product_decomposition(int n, int m, const PipelineOptions& options) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("construct_product_decomposition: n, m must be >= 1");
  if (options.page_count < 0)
    throw std::invalid_argument("construct_product_decomposition: page_count must be >= 0");

  auto t0 = Clock::now();
  PipelineResult out;
  std::vector<int> targets;
  if (options.page_count > 0) {
    targets.push_back(options.page_count);
  } else {
    ThicknessBound bound = product_thickness(n, m);
    for (int k = bound.lo; k <= bound.hi; ++k) targets.push_back(k);
  }

  bool any_inconclusive = false;
  auto remaining = [&]() { return options.budget.max_seconds - seconds_since(t0); };

  std::optional<Decomposition> product;

  for (size_t ti = 0; ti < targets.size(); ++ti) {
    int k = targets[ti];
    bool last = ti + 1 == targets.size();
    double slice = last ? remaining() : std::min(remaining() * 0.2, 20.0);
    if (slice <= 0) {
      any_inconclusive = true;
      break;
    }

    if (m == 1) {
      SearchBudget sub = slice_budget(options.budget, slice);
      SearchResult res = find_decomposition(product_graph(n, 1), k, {}, sub);
      out.nodes += res.nodes;
      if (res.status == SearchStatus::found) {
        product = std::move(res.certificate);
        break;
      }
      if (res.status == SearchStatus::inconclusive) any_inconclusive = true;
      continue;
    }

    if (m == 2) {
      Graph base_host = complete_graph(n + 1);
      VertexId hub = base_host.vertices().back();
      AcceptFn accept = [&](const Decomposition& base) {
        try {
          product = contract_chain(double_decomposition(base, hub));
          return true;
        } catch (const ConstructionError&) {
        } catch (const PairingError&) {
        }
        ++out.rejected_bases;
        return false;
      };
      SearchBudget sub = slice_budget(options.budget, slice);
      SearchResult res = find_decomposition(base_host, k, {}, sub, accept);
      out.nodes += res.nodes;
      if (res.status == SearchStatus::found) break;
      if (res.status == SearchStatus::inconclusive) any_inconclusive = true;
      continue;
    }

    // m >= 3: hub-symmetric middle bases first, then the alignment fallback
    Graph full = complete_graph(n + 2);
    VertexId a = full.vertices()[n];
    VertexId b = full.vertices()[n + 1];
    Graph mid_host = delete_edge(full, a, b);

    bool fallback_phase = false;
    AcceptFn accept = [&](const Decomposition& mid) {
      struct EndChoice {
        VertexId drop, hub;
      };
      for (const auto& [drop, hub] : {EndChoice{b, a}, EndChoice{a, b}}) {
        try {
          ChainSpec spec;
          spec.n = n;
          spec.m = m;
          spec.end_base = restrict_to(mid, all_but(mid.host(), drop));
          spec.end_hub = hub;
          spec.mid_base = mid;
          spec.mid_hubs = VertexPair{a, b};
          product = contract_chain(chain_decomposition(spec));
          out.used_fallback = fallback_phase;
          return true;
        } catch (const ConstructionError&) {
        } catch (const AlignmentError&) {
        } catch (const PairingError&) {
        }
      }
      ++out.rejected_bases;
      return false;
    };

    SearchConstraint hub_symmetric;
    hub_symmetric.hub_symmetric = VertexPair{a, b};
    SearchBudget sub = slice_budget(options.budget, slice * 0.7);
    SearchResult res = find_decomposition(mid_host, k, hub_symmetric, sub, accept);
    out.nodes += res.nodes;
    if (res.status == SearchStatus::found) break;
    if (res.status == SearchStatus::inconclusive) any_inconclusive = true;

    fallback_phase = true;
    SearchBudget fb = slice_budget(
        options.budget, last ? remaining() : std::min(remaining() * 0.1, 10.0));
    if (fb.max_seconds <= 0) {
      any_inconclusive = true;
      break;
    }
    SearchResult res2 = find_decomposition(mid_host, k, {}, fb, accept);
    out.nodes += res2.nodes;
    if (res2.status == SearchStatus::found) break;
    if (res2.status == SearchStatus::inconclusive) any_inconclusive = true;
  }

  out.seconds = seconds_since(t0);
  if (!product) {
    std::ostringstream msg;
    msg << "no verified " << (options.page_count > 0 ? "requested-size " : "")
        << "decomposition of K_" << n << " x P_" << m << " was produced";
    if (any_inconclusive) {
      msg << " within the budget";
      throw PipelineError(msg.str(), SearchStatus::inconclusive);
    }
    msg << "; all candidate bases were enumerated and rejected";
    throw PipelineError(msg.str(), SearchStatus::exhausted);
  }
  out.decomposition = std::move(*product);
  return out;
}

}  // namespace thickness
