#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace thickness {

/// Vertex label. Three kinds, ordered Layer < Hub < Plain, then by contents.
/// Layer labels come out of path products and chain graphs (layer = path
/// position, slot = position of the factor vertex in sorted order). Hub labels
/// mark amalgamation vertices between consecutive layers. Everything else is
/// Plain.
struct VertexId {
  struct Layer {
    int layer;
    int slot;
    auto operator<=>(const Layer&) const = default;
  };
  struct Hub {
    int position;
    auto operator<=>(const Hub&) const = default;
  };
  struct Plain {
    std::string name;
    auto operator<=>(const Plain&) const = default;
  };

  // default: the empty plain label
  std::variant<Layer, Hub, Plain> value{Plain{}};

  static VertexId layer(int layer, int slot) {
    VertexId v;
    v.value = Layer{layer, slot};
    return v;
  }
  static VertexId hub(int position) {
    VertexId v;
    v.value = Hub{position};
    return v;
  }
  static VertexId plain(std::string name) {
    VertexId v;
    v.value = Plain{std::move(name)};
    return v;
  }

  bool is_layer() const { return std::holds_alternative<Layer>(value); }
  bool is_hub() const { return std::holds_alternative<Hub>(value); }
  bool is_plain() const { return std::holds_alternative<Plain>(value); }

  const Layer& as_layer() const { return std::get<Layer>(value); }
  const Hub& as_hub() const { return std::get<Hub>(value); }
  const Plain& as_plain() const { return std::get<Plain>(value); }

  /// "v:layer:slot" for layers, "w:position" for hubs, the raw name otherwise.
  std::string str() const;

  auto operator<=>(const VertexId&) const = default;
  bool operator==(const VertexId&) const = default;
};

using VertexPair = std::pair<VertexId, VertexId>;

/// Canonical (sorted) vertex pair.
VertexPair make_edge(VertexId a, VertexId b);

/// Immutable simple undirected graph with labeled vertices.
///
/// Vertices are kept sorted by label; edges are kept as canonical index pairs
/// (i < j), sorted. Equality is label-sensitive structural equality.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<VertexId> vertices, const std::vector<VertexPair>& edges);

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& vertices() const { return verts_; }
  /// Edges as index pairs into vertices(), each with first < second, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const VertexId& vertex(int index) const { return verts_[index]; }
  VertexPair edge_label(int edge_index) const;
  std::vector<VertexPair> edge_labels() const;

  std::optional<int> vertex_index(const VertexId& v) const;
  bool has_vertex(const VertexId& v) const { return vertex_index(v).has_value(); }
  std::optional<int> edge_index(const VertexId& a, const VertexId& b) const;
  bool has_edge(const VertexId& a, const VertexId& b) const {
    return edge_index(a, b).has_value();
  }

  /// Adjacency lists by vertex index, neighbors sorted ascending.
  std::vector<std::vector<int>> adjacency() const;
  int degree(int vertex_index) const;

  /// Spanning subgraph keeping only the given edge indices.
  Graph edge_subgraph(const std::vector<int>& edge_indices) const;
  /// Induced subgraph on the given vertices (all must exist).
  Graph induced_subgraph(const std::vector<VertexId>& keep) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexId> verts_;
  std::vector<std::pair<int, int>> edges_;
};

/// K_n on plain vertices "v1".."vn" (zero-padded so label order is v1..vn).
Graph complete_graph(int n);

/// Path with m vertices "p1".."pm" (zero-padded), edges along label order.
Graph path_graph(int m);

/// Cartesian product. When `h` is structurally a path, the result uses Layer
/// labels: layer = position along `h` counted from its smaller-labeled
/// endpoint, slot = 1-based position of the `g` vertex in label order.
/// Otherwise vertices get plain composite labels "(a|b)".
Graph cartesian_product(const Graph& g, const Graph& h);

/// Replace edge ab by path a-label-b. `label` must be fresh.
Graph subdivide_edge(const Graph& g, const VertexId& a, const VertexId& b,
                     const VertexId& label);

/// Identify a set of pairwise nonadjacent vertices into one vertex `label`
/// (fresh, or a member of the group). Duplicate edges collapse.
Graph merge_vertices(const Graph& g, const std::vector<VertexId>& group,
                     const VertexId& label);

/// Glue g1 and g2 at one vertex: v1 and v2 are both renamed to `label`; apart
/// from that the vertex sets must be disjoint.
Graph vertex_amalgamation(const Graph& g1, const VertexId& v1, const Graph& g2,
                          const VertexId& v2, const VertexId& label);

Graph delete_edge(const Graph& g, const VertexId& a, const VertexId& b);
Graph delete_vertex(const Graph& g, const VertexId& v);

/// Rename vertices via a partial map (identity elsewhere). The map must stay
/// injective on the vertex set and must not create loops.
Graph relabeled(const Graph& g, const std::map<VertexId, VertexId>& mapping);

/// Repeatedly suppress degree-2 vertices whose neighbors are distinct and
/// nonadjacent (smallest label first). Used to recognize subdivisions.
Graph smoothed(const Graph& g);

/// Label-insensitive isomorphism test, supported for graphs with at most 12
/// vertices (throws above that).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace thickness
