#include "thickness/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "thickness/planarity.hpp"

namespace thickness {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::edge_count_lower: return "edge_count_lower";
    case Provenance::product_lower: return "product_lower";
    case Provenance::complete_formula: return "complete_formula";
    case Provenance::p2_formula: return "p2_formula";
    case Provenance::pm_formula: return "pm_formula";
    case Provenance::containment_upper: return "containment_upper";
    case Provenance::search_certificate: return "search_certificate";
  }
  throw std::logic_error("provenance_name: unknown value");
}

int euler_lower_bound(const Graph& g) {
  if (g.vertex_count() == 0 || g.edge_count() == 0) return 1;
  int cap = euler_edge_cap(g.vertex_count());
  if (cap == 0) return 1;
  return std::max(1, (g.edge_count() + cap - 1) / cap);
}

int product_lower_bound(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("product_lower_bound: n, m must be >= 1");
  int p = n / 6;
  int r = n % 6;
  return r == 5 ? p + 2 : p + 1;
}

int complete_graph_thickness(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph_thickness: n must be >= 1");
  if (n == 9 || n == 10) return 3;
  return (n + 7) / 6;
}

ThicknessBound product_p2_thickness(int n) {
  if (n < 1) throw std::invalid_argument("product_p2_thickness: n must be >= 1");
  int f = (n + 8) / 6;
  if (n == 8 || n == 9) return {3, 3, Provenance::p2_formula};
  if (n % 6 == 4) return {std::max(product_lower_bound(n, 2), f - 1), f, Provenance::p2_formula};
  return {f, f, Provenance::p2_formula};
}

ThicknessBound product_pm_thickness(int n, int m) {
  if (n < 1) throw std::invalid_argument("product_pm_thickness: n must be >= 1");
  if (m < 3) throw std::invalid_argument("product_pm_thickness: m must be >= 3");
  int f = (n + 9) / 6;
  if (n == 7) return {2, 2, Provenance::pm_formula};
  if (n == 8) return {2, 3, Provenance::pm_formula};
  if (n % 6 == 3 || n % 6 == 4)
    return {std::max(product_lower_bound(n, m), f - 1), f, Provenance::pm_formula};
  return {f, f, Provenance::pm_formula};
}

int upper_bound_via_containment(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("upper_bound_via_containment: n, m must be >= 1");
  if (m == 1) return complete_graph_thickness(n);
  if (m == 2) return complete_graph_thickness(n + 1);
  return complete_graph_thickness(n + 2);
}

ThicknessBound product_thickness(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("product_thickness: n, m must be >= 1");
  if (m == 1) {
    int t = complete_graph_thickness(n);
    return {t, t, Provenance::complete_formula};
  }
  if (m == 2) return product_p2_thickness(n);
  return product_pm_thickness(n, m);
}

}  // namespace thickness
