#include "thickness/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thickness {

std::string VertexId::str() const {
  std::ostringstream out;
  if (is_layer()) {
    out << "v:" << as_layer().layer << ":" << as_layer().slot;
  } else if (is_hub()) {
    out << "w:" << as_hub().position;
  } else {
    out << as_plain().name;
  }
  return out.str();
}

VertexPair make_edge(VertexId a, VertexId b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

Graph::Graph(std::vector<VertexId> vertices, const std::vector<VertexPair>& edges)
    : verts_(std::move(vertices)) {
  std::sort(verts_.begin(), verts_.end());
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
    throw std::invalid_argument("graph: duplicate vertex label");
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("graph: loop edge at " + a.str());
    auto ia = vertex_index(a), ib = vertex_index(b);
    if (!ia || !ib)
      throw std::invalid_argument("graph: edge endpoint not a vertex: " +
                                  (ia ? b.str() : a.str()));
    edges_.push_back({std::min(*ia, *ib), std::max(*ia, *ib)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

VertexPair Graph::edge_label(int edge_index) const {
  const auto& [i, j] = edges_.at(edge_index);
  return {verts_[i], verts_[j]};
}

std::vector<VertexPair> Graph::edge_labels() const {
  std::vector<VertexPair> out;
  out.reserve(edges_.size());
  for (int e = 0; e < edge_count(); ++e) out.push_back(edge_label(e));
  return out;
}

std::optional<int> Graph::vertex_index(const VertexId& v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - verts_.begin());
}

std::optional<int> Graph::edge_index(const VertexId& a, const VertexId& b) const {
  auto ia = vertex_index(a), ib = vertex_index(b);
  if (!ia || !ib) return std::nullopt;
  std::pair<int, int> key{std::min(*ia, *ib), std::max(*ia, *ib)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(verts_.size());
  for (const auto& [i, j] : edges_) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

int Graph::degree(int vertex_index) const {
  int d = 0;
  for (const auto& [i, j] : edges_)
    if (i == vertex_index || j == vertex_index) ++d;
  return d;
}

Graph Graph::edge_subgraph(const std::vector<int>& edge_indices) const {
  std::vector<VertexPair> labels;
  labels.reserve(edge_indices.size());
  for (int e : edge_indices) labels.push_back(edge_label(e));
  return Graph(verts_, labels);
}

Graph Graph::induced_subgraph(const std::vector<VertexId>& keep) const {
  std::set<VertexId> keep_set(keep.begin(), keep.end());
  for (const auto& v : keep_set)
    if (!has_vertex(v))
      throw std::invalid_argument("induced_subgraph: not a vertex: " + v.str());
  std::vector<VertexPair> labels;
  for (const auto& [i, j] : edges_)
    if (keep_set.count(verts_[i]) && keep_set.count(verts_[j]))
      labels.push_back({verts_[i], verts_[j]});
  return Graph(std::vector<VertexId>(keep_set.begin(), keep_set.end()), labels);
}

namespace {

std::string padded_name(const std::string& prefix, int i, int n) {
  int width = 1;
  for (int t = n; t >= 10; t /= 10) ++width;
  std::string digits = std::to_string(i);
  return prefix + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<VertexId> verts;
  for (int i = 1; i <= n; ++i) verts.push_back(VertexId::plain(padded_name("v", i, n)));
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back(make_edge(verts[i], verts[j]));
  return Graph(std::move(verts), edges);
}

Graph path_graph(int m) {
  if (m < 1) throw std::invalid_argument("path_graph: m must be >= 1");
  std::vector<VertexId> verts;
  for (int i = 1; i <= m; ++i) verts.push_back(VertexId::plain(padded_name("p", i, m)));
  std::vector<VertexPair> edges;
  for (int i = 0; i + 1 < m; ++i) edges.push_back(make_edge(verts[i], verts[i + 1]));
  return Graph(std::move(verts), edges);
}

namespace {

/// If g is structurally a path, return its vertices in path order starting
/// from the smaller-labeled endpoint.
std::optional<std::vector<int>> path_order(const Graph& g) {
  int m = g.vertex_count();
  if (m == 0 || g.edge_count() != m - 1) return std::nullopt;
  if (m == 1) return std::vector<int>{0};
  auto adj = g.adjacency();
  int start = -1;
  for (int v = 0; v < m; ++v) {
    if (adj[v].size() > 2) return std::nullopt;
    if (adj[v].size() == 1 && start < 0) start = v;
  }
  if (start < 0) return std::nullopt;
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < m) {
    int next = -1;
    for (int w : adj[cur])
      if (w != prev) next = w;
    if (next < 0) return std::nullopt;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0)
    throw std::invalid_argument("cartesian_product: factors must be nonempty");

  auto order = path_order(h);
  int ng = g.vertex_count(), nh = h.vertex_count();

  // label of (g vertex i, h vertex j)
  auto label = [&](int i, int j) {
    if (order) {
      auto pos = std::find(order->begin(), order->end(), j) - order->begin();
      return VertexId::layer(static_cast<int>(pos) + 1, i + 1);
    }
    return VertexId::plain("(" + g.vertex(i).str() + "|" + h.vertex(j).str() + ")");
  };

  std::vector<VertexId> verts;
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < nh; ++j) verts.push_back(label(i, j));

  std::vector<VertexPair> edges;
  for (int j = 0; j < nh; ++j)
    for (const auto& [a, b] : g.edges()) edges.push_back(make_edge(label(a, j), label(b, j)));
  for (int i = 0; i < ng; ++i)
    for (const auto& [a, b] : h.edges()) edges.push_back(make_edge(label(i, a), label(i, b)));
  return Graph(std::move(verts), edges);
}

Graph subdivide_edge(const Graph& g, const VertexId& a, const VertexId& b,
                     const VertexId& label) {
  if (!g.has_edge(a, b))
    throw std::invalid_argument("subdivide_edge: no edge " + a.str() + "-" + b.str());
  if (g.has_vertex(label))
    throw std::invalid_argument("subdivide_edge: label already used: " + label.str());
  std::vector<VertexId> verts = g.vertices();
  verts.push_back(label);
  std::vector<VertexPair> edges;
  for (const auto& [x, y] : g.edge_labels())
    if (!(x == std::min(a, b) && y == std::max(a, b))) edges.push_back({x, y});
  edges.push_back(make_edge(a, label));
  edges.push_back(make_edge(b, label));
  return Graph(std::move(verts), edges);
}

Graph merge_vertices(const Graph& g, const std::vector<VertexId>& group,
                     const VertexId& label) {
  if (group.empty()) throw std::invalid_argument("merge_vertices: empty group");
  std::set<VertexId> members(group.begin(), group.end());
  for (const auto& v : members)
    if (!g.has_vertex(v))
      throw std::invalid_argument("merge_vertices: not a vertex: " + v.str());
  for (auto it = members.begin(); it != members.end(); ++it)
    for (auto jt = std::next(it); jt != members.end(); ++jt)
      if (g.has_edge(*it, *jt))
        throw std::invalid_argument("merge_vertices: group members adjacent: " +
                                    it->str() + "-" + jt->str());
  if (g.has_vertex(label) && !members.count(label))
    throw std::invalid_argument("merge_vertices: label already used: " + label.str());

  std::vector<VertexId> verts;
  for (const auto& v : g.vertices())
    if (!members.count(v)) verts.push_back(v);
  verts.push_back(label);

  auto mapped = [&](const VertexId& v) { return members.count(v) ? label : v; };
  std::vector<VertexPair> edges;
  for (const auto& [x, y] : g.edge_labels()) edges.push_back(make_edge(mapped(x), mapped(y)));
  return Graph(std::move(verts), edges);
}

Graph vertex_amalgamation(const Graph& g1, const VertexId& v1, const Graph& g2,
                          const VertexId& v2, const VertexId& label) {
  if (!g1.has_vertex(v1))
    throw std::invalid_argument("vertex_amalgamation: not a vertex of g1: " + v1.str());
  if (!g2.has_vertex(v2))
    throw std::invalid_argument("vertex_amalgamation: not a vertex of g2: " + v2.str());
  Graph a = relabeled(g1, {{v1, label}});
  Graph b = relabeled(g2, {{v2, label}});
  std::set<VertexId> overlap;
  for (const auto& v : a.vertices())
    if (b.has_vertex(v)) overlap.insert(v);
  if (overlap != std::set<VertexId>{label})
    throw std::invalid_argument(
        "vertex_amalgamation: vertex sets must be disjoint apart from the glue vertex");
  std::vector<VertexId> verts = a.vertices();
  for (const auto& v : b.vertices())
    if (v != label) verts.push_back(v);
  std::vector<VertexPair> edges = a.edge_labels();
  auto be = b.edge_labels();
  edges.insert(edges.end(), be.begin(), be.end());
  return Graph(std::move(verts), edges);
}

Graph delete_edge(const Graph& g, const VertexId& a, const VertexId& b) {
  auto e = g.edge_index(a, b);
  if (!e) throw std::invalid_argument("delete_edge: no edge " + a.str() + "-" + b.str());
  std::vector<VertexPair> edges;
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != *e) edges.push_back(g.edge_label(i));
  return Graph(g.vertices(), edges);
}

Graph delete_vertex(const Graph& g, const VertexId& v) {
  if (!g.has_vertex(v)) throw std::invalid_argument("delete_vertex: not a vertex: " + v.str());
  std::vector<VertexId> verts;
  for (const auto& u : g.vertices())
    if (u != v) verts.push_back(u);
  std::vector<VertexPair> edges;
  for (const auto& [x, y] : g.edge_labels())
    if (x != v && y != v) edges.push_back({x, y});
  return Graph(std::move(verts), edges);
}

Graph relabeled(const Graph& g, const std::map<VertexId, VertexId>& mapping) {
  auto mapped = [&](const VertexId& v) {
    auto it = mapping.find(v);
    return it == mapping.end() ? v : it->second;
  };
  std::vector<VertexId> verts;
  for (const auto& v : g.vertices()) verts.push_back(mapped(v));
  std::set<VertexId> unique(verts.begin(), verts.end());
  if (unique.size() != verts.size())
    throw std::invalid_argument("relabeled: mapping must stay injective on the vertex set");
  std::vector<VertexPair> edges;
  for (const auto& [x, y] : g.edge_labels()) edges.push_back(make_edge(mapped(x), mapped(y)));
  return Graph(std::move(verts), edges);
}

Graph smoothed(const Graph& g) {
  Graph cur = g;
  for (;;) {
    bool changed = false;
    auto adj = cur.adjacency();
    for (int v = 0; v < cur.vertex_count(); ++v) {
      if (adj[v].size() != 2) continue;
      int a = adj[v][0], b = adj[v][1];
      if (a == b) continue;
      if (cur.has_edge(cur.vertex(a), cur.vertex(b))) continue;
      VertexId va = cur.vertex(a), vb = cur.vertex(b), vv = cur.vertex(v);
      Graph next = delete_vertex(cur, vv);
      std::vector<VertexPair> edges = next.edge_labels();
      edges.push_back(make_edge(va, vb));
      cur = Graph(next.vertices(), edges);
      changed = true;
      break;
    }
    if (!changed) return cur;
  }
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b,
                        const std::vector<std::vector<int>>& adj_a,
                        const std::vector<std::vector<bool>>& adj_b,
                        const std::vector<int>& order, size_t pos,
                        std::vector<int>& map_ab, std::vector<bool>& used_b,
                        const std::vector<int>& deg_a, const std::vector<int>& deg_b) {
  if (pos == order.size()) return true;
  int va = order[pos];
  for (int vb = 0; vb < b.vertex_count(); ++vb) {
    if (used_b[vb] || deg_a[va] != deg_b[vb]) continue;
    bool ok = true;
    for (int na : adj_a[va]) {
      if (map_ab[na] >= 0 && !adj_b[map_ab[na]][vb]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // non-neighbors already mapped must stay non-neighbors
      for (size_t q = 0; q < pos && ok; ++q) {
        int ua = order[q];
        bool edge_a = std::binary_search(adj_a[va].begin(), adj_a[va].end(), ua);
        if (!edge_a && adj_b[map_ab[ua]][vb]) ok = false;
      }
    }
    if (!ok) continue;
    map_ab[va] = vb;
    used_b[vb] = true;
    if (extend_isomorphism(a, b, adj_a, adj_b, order, pos + 1, map_ab, used_b, deg_a, deg_b))
      return true;
    map_ab[va] = -1;
    used_b[vb] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() > 12 || b.vertex_count() > 12)
    throw std::invalid_argument("isomorphic: supported only for graphs with <= 12 vertices");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  int n = a.vertex_count();
  std::vector<int> deg_a(n), deg_b(n);
  auto adj_a = a.adjacency();
  auto adj_b_list = b.adjacency();
  for (int v = 0; v < n; ++v) {
    deg_a[v] = static_cast<int>(adj_a[v].size());
    deg_b[v] = static_cast<int>(adj_b_list[v].size());
  }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<std::vector<bool>> adj_b(n, std::vector<bool>(n, false));
  for (const auto& [i, j] : b.edges()) adj_b[i][j] = adj_b[j][i] = true;

  // map high-degree vertices first
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return deg_a[x] > deg_a[y]; });

  std::vector<int> map_ab(n, -1);
  std::vector<bool> used_b(n, false);
  return extend_isomorphism(a, b, adj_a, adj_b, order, 0, map_ab, used_b, deg_a, deg_b);
}

}  // namespace thickness
