#pragma once

#include <string>

#include "thickness/graph.hpp"

namespace thickness {

/// Where a bound's value comes from, named by mathematical role.
enum class Provenance {
  edge_count_lower,   // ceil(E / (3V - 6)) style counting
  product_lower,      // closed-form lower bound for the product family
  complete_formula,   // closed-form thickness of complete graphs
  p2_formula,         // closed-form result for products with a 2-path
  pm_formula,         // closed-form result for products with longer paths
  containment_upper,  // upper bound via embedding into a larger complete graph
  search_certificate, // value backed by an explicit decomposition / exhaustion
};

std::string provenance_name(Provenance p);

/// Inclusive thickness bracket. Exact when lo == hi; otherwise the value is
/// open and known to lie in [lo, hi].
struct ThicknessBound {
  int lo = 1;
  int hi = 1;
  Provenance provenance = Provenance::edge_count_lower;

  bool exact() const { return lo == hi; }
};

/// max(1, ceil(E / cap(V))) where cap is the planar edge maximum.
int euler_lower_bound(const Graph& g);

/// Closed-form lower bound for the thickness of K_n square P_m (n, m >= 1).
/// Equals ceil(((n+1)(mn-2) + 2) / (6(mn-2))) specialized by n mod 6.
int product_lower_bound(int n, int m);

/// Thickness of K_n: floor((n+7)/6) with the two sporadic exceptions where
/// the value is 3.
int complete_graph_thickness(int n);

/// Thickness bracket of K_n square P_2. Exact except for n == 4 (mod 6),
/// where it is the open bracket [floor((n+8)/6) - 1, floor((n+8)/6)]
/// (lower end clamped to the product lower bound); sporadic exact value 3
/// at n in {8, 9}.
ThicknessBound product_p2_thickness(int n);

/// Thickness bracket of K_n square P_m for m >= 3. Exact floor((n+9)/6)
/// except: exact 2 at n == 7; open [2, 3] at n == 8; open brackets
/// [max(product_lower_bound, f-1), f] for n == 3, 4 (mod 6).
ThicknessBound product_pm_thickness(int n, int m);

/// Thickness of K_{n+1} (m == 2) or K_{n+2} (m >= 3), which contain the
/// product.
int upper_bound_via_containment(int n, int m);

/// Dispatcher over m: m == 1 gives the complete graph value, m == 2 the
/// 2-path bracket, m >= 3 the long-path bracket.
ThicknessBound product_thickness(int n, int m);

}  // namespace thickness
