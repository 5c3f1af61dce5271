#include "thickness/planarity.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace thickness {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  BoostGraph bg(vertex_count);
  int index = 0;
  for (const auto& [i, j] : edges) boost::add_edge(i, j, index++, bg);
  return bg;
}

}  // namespace

int euler_edge_cap(int vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("euler_edge_cap: vertex_count must be >= 1");
  if (vertex_count == 1) return 0;
  if (vertex_count == 2) return 1;
  return 3 * vertex_count - 6;
}

bool fast_reject(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  return g.edge_count() > euler_edge_cap(g.vertex_count());
}

bool is_planar_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count <= 4) return true;
  if (static_cast<int>(edges.size()) > euler_edge_cap(vertex_count)) return false;
  BoostGraph bg = to_boost(vertex_count, edges);
  return boost::boyer_myrvold_planarity_test(bg);
}

PlanarityVerdict is_planar(const Graph& g, WitnessMode mode) {
  PlanarityVerdict verdict;
  int nv = g.vertex_count();
  if (nv == 0) {
    verdict.planar = true;
    if (mode == WitnessMode::full) verdict.rotation = std::vector<std::vector<int>>{};
    return verdict;
  }
  BoostGraph bg = to_boost(nv, g.edges());

  if (mode == WitnessMode::none) {
    verdict.planar = boost::boyer_myrvold_planarity_test(bg);
    return verdict;
  }

  std::vector<std::vector<BoostEdge>> embedding(nv);
  verdict.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data());

  if (verdict.planar) {
    std::vector<std::vector<int>> rotation(nv);
    for (int v = 0; v < nv; ++v) {
      rotation[v].reserve(embedding[v].size());
      for (const auto& e : embedding[v]) {
        int s = static_cast<int>(boost::source(e, bg));
        int t = static_cast<int>(boost::target(e, bg));
        rotation[v].push_back(s == v ? t : s);
      }
    }
    verdict.rotation = std::move(rotation);
  } else {
    std::vector<BoostEdge> kur;
    boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
    std::vector<std::pair<int, int>> raw;
    raw.reserve(kur.size());
    for (const auto& e : kur) {
      int s = static_cast<int>(boost::source(e, bg));
      int t = static_cast<int>(boost::target(e, bg));
      raw.emplace_back(std::min(s, t), std::max(s, t));
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    // The certificate is only guaranteed to contract to K_5 / K_{3,3}; it can
    // carry dangling tails or split branch vertices. Dropping every edge whose
    // removal keeps it non-planar leaves an edge-minimal non-planar graph,
    // which is exactly a subdivision. The certificate is small, so the extra
    // planarity tests are cheap.
    for (size_t i = 0; i < raw.size();) {
      std::vector<std::pair<int, int>> rest;
      rest.reserve(raw.size() - 1);
      for (size_t j = 0; j < raw.size(); ++j)
        if (j != i) rest.push_back(raw[j]);
      if (!is_planar_edges(nv, rest))
        raw = std::move(rest);
      else
        ++i;
    }
    std::vector<VertexPair> witness;
    witness.reserve(raw.size());
    for (const auto& [s, t] : raw) witness.push_back(make_edge(g.vertex(s), g.vertex(t)));
    std::sort(witness.begin(), witness.end());
    verdict.kuratowski = std::move(witness);
  }
  return verdict;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EmbeddingCheck check_embedding(const Graph& g, const std::vector<std::vector<int>>& rotation) {
  EmbeddingCheck result;
  int nv = g.vertex_count();
  if (static_cast<int>(rotation.size()) != nv) return result;
  auto adj = g.adjacency();
  for (int v = 0; v < nv; ++v) {
    auto sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != adj[v]) return result;
  }
  result.shape_ok = true;

  Dsu dsu(nv);
  for (const auto& [i, j] : g.edges()) dsu.unite(i, j);
  std::vector<int> comp_verts(nv, 0), comp_edges(nv, 0), comp_faces(nv, 0);
  for (int v = 0; v < nv; ++v) ++comp_verts[dsu.find(v)];
  for (const auto& [i, j] : g.edges()) ++comp_edges[dsu.find(i)];

  // position of u within rotation[v]
  auto pos_in = [&](int v, int u) {
    for (size_t p = 0; p < rotation[v].size(); ++p)
      if (rotation[v][p] == u) return static_cast<int>(p);
    return -1;
  };

  // trace orbits of directed edges: (u -> v) continues as (v -> next neighbor
  // after u in rotation[v])
  std::vector<std::vector<bool>> seen(nv);
  for (int v = 0; v < nv; ++v) seen[v].assign(rotation[v].size(), false);
  int orbits = 0;
  for (int u = 0; u < nv; ++u) {
    for (size_t p = 0; p < rotation[u].size(); ++p) {
      if (seen[u][p]) continue;
      ++orbits;
      ++comp_faces[dsu.find(u)];
      int cu = u;
      int cp = static_cast<int>(p);
      while (!seen[cu][cp]) {
        seen[cu][cp] = true;
        int cv = rotation[cu][cp];
        int back = pos_in(cv, cu);
        cp = (back + 1) % static_cast<int>(rotation[cv].size());
        cu = cv;
      }
    }
  }

  result.euler_ok = true;
  int isolated = 0;
  for (int c = 0; c < nv; ++c) {
    if (dsu.find(c) != c) continue;
    ++result.components;
    if (comp_edges[c] == 0) {
      ++isolated;
      continue;
    }
    if (comp_verts[c] - comp_edges[c] + comp_faces[c] != 2) result.euler_ok = false;
  }
  result.faces = orbits + isolated;
  return result;
}

bool is_kuratowski_witness(const Graph& host, const std::vector<VertexPair>& edges) {
  if (edges.empty()) return false;
  std::set<VertexId> verts;
  for (const auto& [a, b] : edges) {
    if (!host.has_edge(a, b)) return false;
    verts.insert(a);
    verts.insert(b);
  }
  Graph sub(std::vector<VertexId>(verts.begin(), verts.end()), edges);

  int deg3 = 0, deg4 = 0;
  for (int v = 0; v < sub.vertex_count(); ++v) {
    int d = sub.degree(v);
    if (d == 3)
      ++deg3;
    else if (d == 4)
      ++deg4;
    else if (d != 2)
      return false;
  }
  bool k5_shape = (deg4 == 5 && deg3 == 0);
  bool k33_shape = (deg3 == 6 && deg4 == 0);
  if (!k5_shape && !k33_shape) return false;

  Graph core = smoothed(sub);
  if (core.vertex_count() > 6) return false;
  if (k5_shape) return isomorphic(core, complete_graph(5));

  std::vector<VertexId> parts;
  for (int i = 1; i <= 6; ++i) parts.push_back(VertexId::plain("k" + std::to_string(i)));
  std::vector<VertexPair> cross;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) cross.push_back(make_edge(parts[i], parts[j]));
  return isomorphic(core, Graph(parts, cross));
}

}  // namespace thickness
