#include "thickness/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace thickness {

Graph product_graph(int n, int m) {
  return cartesian_product(complete_graph(n), path_graph(m));
}

Graph build_chain_graph(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("build_chain_graph: n, m must be >= 1");
  std::vector<VertexId> verts;
  for (int j = 1; j <= m; ++j)
    for (int q = 1; q <= n; ++q) verts.push_back(VertexId::layer(j, q));
  for (int p = 1; p <= m - 1; ++p) verts.push_back(VertexId::hub(p));
  std::vector<VertexPair> edges;
  for (int j = 1; j <= m; ++j)
    for (int q = 1; q <= n; ++q)
      for (int r = q + 1; r <= n; ++r)
        edges.push_back(make_edge(VertexId::layer(j, q), VertexId::layer(j, r)));
  for (int p = 1; p <= m - 1; ++p)
    for (int q = 1; q <= n; ++q) {
      edges.push_back(make_edge(VertexId::layer(p, q), VertexId::hub(p)));
      edges.push_back(make_edge(VertexId::layer(p + 1, q), VertexId::hub(p)));
    }
  return Graph(std::move(verts), edges);
}

namespace {

std::optional<std::pair<int, int>> layered_shape(const Graph& g, bool with_hubs) {
  int max_layer = 0, max_slot = 0;
  for (const auto& v : g.vertices()) {
    if (v.is_layer()) {
      max_layer = std::max(max_layer, v.as_layer().layer);
      max_slot = std::max(max_slot, v.as_layer().slot);
    } else if (!v.is_hub() || !with_hubs) {
      return std::nullopt;
    }
  }
  if (max_layer < 1 || max_slot < 1) return std::nullopt;
  return std::pair<int, int>{max_slot, max_layer};
}

}  // namespace

std::optional<std::pair<int, int>> chain_shape(const Graph& g) {
  auto nm = layered_shape(g, true);
  if (!nm) return std::nullopt;
  auto [n, m] = *nm;
  if (g == build_chain_graph(n, m)) return nm;
  return std::nullopt;
}

std::optional<std::pair<int, int>> product_shape(const Graph& g) {
  auto nm = layered_shape(g, false);
  if (!nm) return std::nullopt;
  auto [n, m] = *nm;
  if (g == product_graph(n, m)) return nm;
  return std::nullopt;
}

namespace {

void require_valid(const Decomposition& d, const char* who) {
  auto report = verify(d, WitnessMode::none);
  if (!report.valid()) {
    std::ostringstream out;
    out << who << ": input decomposition is not valid";
    if (!report.detail.empty()) out << " (" << report.detail << ")";
    throw std::invalid_argument(out.str());
  }
}

Decomposition checked(Decomposition d, const char* who) {
  auto report = verify(d, WitnessMode::none);
  if (!report.valid())
    throw ConstructionError(std::string(who) + ": result failed re-verification: " +
                                report.detail,
                            std::move(report));
  return d;
}

bool is_complete(const Graph& g) {
  int k = g.vertex_count();
  return g.edge_count() == k * (k - 1) / 2;
}

/// page index of every host edge; input must be a partition
std::vector<int> page_of_edges(const Decomposition& d) {
  std::vector<int> page_of(d.host().edge_count(), -1);
  for (int p = 0; p < d.page_count(); ++p)
    for (int e : d.pages()[p]) page_of[e] = p;
  return page_of;
}

}  // namespace

Decomposition double_decomposition(const Decomposition& base, const VertexId& hub) {
  require_valid(base, "double_decomposition");
  const Graph& bh = base.host();
  if (bh.vertex_count() < 2 || !is_complete(bh))
    throw std::invalid_argument(
        "double_decomposition: base host must be a complete graph on >= 2 vertices");
  if (!bh.has_vertex(hub))
    throw std::invalid_argument("double_decomposition: hub is not a base vertex: " + hub.str());

  int n = bh.vertex_count() - 1;
  std::map<VertexId, int> slot;
  int next = 1;
  for (const auto& v : bh.vertices())
    if (v != hub) slot[v] = next++;

  auto copy_label = [&](const VertexId& v, int layer) {
    return v == hub ? VertexId::hub(1) : VertexId::layer(layer, slot.at(v));
  };

  std::vector<std::vector<VertexPair>> pages(base.page_count());
  for (int p = 0; p < base.page_count(); ++p) {
    for (const auto& [x, y] : base.page_edge_labels(p)) {
      pages[p].push_back(make_edge(copy_label(x, 1), copy_label(y, 1)));
      pages[p].push_back(make_edge(copy_label(x, 2), copy_label(y, 2)));
    }
  }
  return checked(Decomposition::from_edge_labels(build_chain_graph(n, 2), pages),
                 "double_decomposition");
}

Decomposition contract_chain(const Decomposition& d) {
  auto shape = chain_shape(d.host());
  if (!shape)
    throw std::invalid_argument("contract_chain: host is not a chain graph");
  auto [n, m] = *shape;
  auto report = verify(d, WitnessMode::none);
  if (!report.partition_ok || !report.coverage_ok)
    throw std::invalid_argument("contract_chain: pages do not partition the host edges: " +
                                report.detail);
  auto page_of = page_of_edges(d);
  const Graph& host = d.host();

  for (int pos = 1; pos <= m - 1; ++pos) {
    for (int q = 1; q <= n; ++q) {
      int left = *host.edge_index(VertexId::layer(pos, q), VertexId::hub(pos));
      int right = *host.edge_index(VertexId::layer(pos + 1, q), VertexId::hub(pos));
      if (page_of[left] != page_of[right]) {
        std::ostringstream out;
        out << "pairing violated at hub w:" << pos << " slot " << q << ": pages "
            << page_of[left] + 1 << " and " << page_of[right] + 1;
        throw PairingError(out.str(), VertexId::hub(pos), q);
      }
    }
  }

  std::vector<std::vector<VertexPair>> pages(d.page_count());
  for (int p = 0; p < d.page_count(); ++p) {
    for (int e : d.pages()[p]) {
      auto [x, y] = host.edge_label(e);
      if (x.is_layer() && y.is_layer()) {
        pages[p].push_back(make_edge(x, y));
      } else {
        const VertexId& layer_end = x.is_layer() ? x : y;
        const VertexId& hub_end = x.is_layer() ? y : x;
        // emit the rung once, from the left-side hub edge
        if (layer_end.as_layer().layer == hub_end.as_hub().position) {
          int pos = hub_end.as_hub().position;
          int q = layer_end.as_layer().slot;
          pages[p].push_back(
              make_edge(VertexId::layer(pos, q), VertexId::layer(pos + 1, q)));
        }
      }
    }
  }
  return checked(Decomposition::from_edge_labels(product_graph(n, m), pages),
                 "contract_chain");
}

Decomposition contract_hub_p2(const Decomposition& d, const VertexId& hub) {
  auto shape = chain_shape(d.host());
  if (!shape || shape->second != 2)
    throw std::invalid_argument("contract_hub_p2: host is not a two-layer chain graph");
  if (hub != VertexId::hub(1))
    throw std::invalid_argument("contract_hub_p2: hub must be the chain's hub vertex, got " +
                                hub.str());
  return contract_chain(d);
}

Decomposition expand_decomposition(const Decomposition& d) {
  auto shape = product_shape(d.host());
  if (!shape)
    throw std::invalid_argument("expand_decomposition: host is not a product graph");
  auto [n, m] = *shape;
  const Graph& host = d.host();

  std::vector<std::vector<VertexPair>> pages(d.page_count());
  for (int p = 0; p < d.page_count(); ++p) {
    for (int e : d.pages()[p]) {
      auto [x, y] = host.edge_label(e);
      const auto& lx = x.as_layer();
      const auto& ly = y.as_layer();
      if (lx.layer == ly.layer) {
        pages[p].push_back(make_edge(x, y));
      } else {
        int pos = std::min(lx.layer, ly.layer);
        pages[p].push_back(make_edge(x, VertexId::hub(pos)));
        pages[p].push_back(make_edge(y, VertexId::hub(pos)));
      }
    }
  }
  return Decomposition::from_edge_labels(build_chain_graph(n, m), pages);
}

Decomposition amalgamate_decompositions(const Decomposition& d1, const VertexId& v1,
                                        const Decomposition& d2, const VertexId& v2,
                                        const VertexId& label) {
  require_valid(d1, "amalgamate_decompositions");
  require_valid(d2, "amalgamate_decompositions");
  Graph host = vertex_amalgamation(d1.host(), v1, d2.host(), v2, label);
  int k = std::max(d1.page_count(), d2.page_count());

  auto renamed = [&](VertexPair e, const VertexId& from) {
    if (e.first == from) e.first = label;
    if (e.second == from) e.second = label;
    return make_edge(e.first, e.second);
  };

  std::vector<std::vector<VertexPair>> pages(k);
  for (int p = 0; p < d1.page_count(); ++p)
    for (const auto& e : d1.page_edge_labels(p)) pages[p].push_back(renamed(e, v1));
  for (int p = 0; p < d2.page_count(); ++p)
    for (const auto& e : d2.page_edge_labels(p)) pages[p].push_back(renamed(e, v2));
  return checked(Decomposition::from_edge_labels(std::move(host), pages),
                 "amalgamate_decompositions");
}

namespace {

/// Find a page permutation pi and slot bijection sigma with
/// pi(source[s]) == required[sigma(s)] for all base slots s. Both patterns
/// map slots to 0-based pages < k. Returns (pi, sigma), deterministic.
std::optional<std::pair<std::vector<int>, std::vector<int>>> align_patterns(
    const std::vector<int>& source, const std::vector<int>& required, int k) {
  int n = static_cast<int>(source.size());
  std::vector<int> hist_src(k, 0), hist_req(k, 0);
  for (int v : source) ++hist_src[v];
  for (int v : required) ++hist_req[v];

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      if (hist_src[i] != hist_req[perm[i]]) ok = false;
    if (!ok) continue;
    std::vector<std::vector<int>> req_slots(k);
    for (int q = 0; q < n; ++q) req_slots[required[q]].push_back(q);
    std::vector<int> taken(k, 0);
    std::vector<int> sigma(n, -1);
    for (int s = 0; s < n; ++s) {
      int page = perm[source[s]];
      sigma[s] = req_slots[page][taken[page]++];
    }
    return std::pair{perm, sigma};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

struct Placement {
  bool flipped = false;         // true: b faces the left hub
  std::vector<int> page_map;    // base page -> chain page
  std::vector<int> chain_slot;  // base slot -> chain slot (0-based)
};

std::vector<int> identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

/// Pattern a placed middle block presents at one of its hubs, by chain slot.
std::vector<int> placed_pattern(const Placement& pl, const std::vector<int>& pat_a,
                                const std::vector<int>& pat_b, bool left_side) {
  const std::vector<int>& src = (left_side == !pl.flipped) ? pat_a : pat_b;
  std::vector<int> out(src.size());
  for (size_t s = 0; s < src.size(); ++s) out[pl.chain_slot[s]] = pl.page_map[src[s]];
  return out;
}

}  // namespace

Decomposition chain_decomposition(const ChainSpec& spec) {
  int n = spec.n, m = spec.m;
  if (n < 1 || m < 2)
    throw std::invalid_argument("chain_decomposition: need n >= 1 and m >= 2");

  require_valid(spec.end_base, "chain_decomposition (end base)");
  const Graph& eh = spec.end_base.host();
  if (eh.vertex_count() != n + 1 || !is_complete(eh))
    throw std::invalid_argument(
        "chain_decomposition: end base host must be a complete graph on n+1 vertices");
  if (!eh.has_vertex(spec.end_hub))
    throw std::invalid_argument("chain_decomposition: end hub is not an end base vertex");

  if (m == 2) return double_decomposition(spec.end_base, spec.end_hub);

  if (!spec.mid_base || !spec.mid_hubs)
    throw std::invalid_argument(
        "chain_decomposition: middle base and hubs are required for m >= 3");
  const Graph& mh = spec.mid_base->host();
  const VertexId a = spec.mid_hubs->first;
  const VertexId b = spec.mid_hubs->second;
  require_valid(*spec.mid_base, "chain_decomposition (middle base)");
  if (a == b || !mh.has_vertex(a) || !mh.has_vertex(b))
    throw std::invalid_argument("chain_decomposition: middle hubs must be two distinct vertices");
  if (mh.vertex_count() != n + 2 ||
      mh.edge_count() != (n + 2) * (n + 1) / 2 - 1 || mh.has_edge(a, b))
    throw std::invalid_argument(
        "chain_decomposition: middle base host must be complete on n+2 vertices minus the "
        "hub-hub edge");

  int k = std::max(spec.end_base.page_count(), spec.mid_base->page_count());
  Decomposition end = spec.end_base.padded(k);
  Decomposition mid = spec.mid_base->padded(k);

  std::vector<VertexId> end_verts;
  for (const auto& v : eh.vertices())
    if (v != spec.end_hub) end_verts.push_back(v);
  std::vector<VertexId> mid_verts;
  for (const auto& v : mh.vertices())
    if (v != a && v != b) mid_verts.push_back(v);

  auto end_pages = page_of_edges(end);
  auto mid_pages = page_of_edges(mid);
  std::vector<int> end_pat(n), pat_a(n), pat_b(n);
  for (int s = 0; s < n; ++s) {
    end_pat[s] = end_pages[*eh.edge_index(end_verts[s], spec.end_hub)];
    pat_a[s] = mid_pages[*mh.edge_index(mid_verts[s], a)];
    pat_b[s] = mid_pages[*mh.edge_index(mid_verts[s], b)];
  }

  // choose placements: blocks 2..m-1 middle, blocks 1 and m ends
  std::vector<Placement> mid_place(m);  // indexed by block, entries 2..m-1 used
  Placement end_left, end_right;
  int failed_hub = 0;

  auto attempt = [&](bool flip2) -> bool {
    mid_place[2] = Placement{flip2, identity(k), identity(n)};
    auto left_req = placed_pattern(mid_place[2], pat_a, pat_b, true);
    auto al = align_patterns(end_pat, left_req, k);
    if (!al) {
      failed_hub = std::max(failed_hub, 1);
      return false;
    }
    end_left = Placement{false, al->first, al->second};

    for (int j = 3; j <= m - 1; ++j) {
      auto required = placed_pattern(mid_place[j - 1], pat_a, pat_b, false);
      bool placed = false;
      for (bool flip : {false, true}) {
        const std::vector<int>& src = flip ? pat_b : pat_a;
        auto fit = align_patterns(src, required, k);
        if (fit) {
          mid_place[j] = Placement{flip, fit->first, fit->second};
          placed = true;
          break;
        }
      }
      if (!placed) {
        failed_hub = std::max(failed_hub, j - 1);
        return false;
      }
    }

    auto required = placed_pattern(mid_place[m - 1], pat_a, pat_b, false);
    auto ar = align_patterns(end_pat, required, k);
    if (!ar) {
      failed_hub = std::max(failed_hub, m - 1);
      return false;
    }
    end_right = Placement{false, ar->first, ar->second};
    return true;
  };

  if (!attempt(false) && !attempt(true)) {
    std::ostringstream out;
    out << "chain_decomposition: no page alignment at hub w:" << failed_hub;
    throw AlignmentError(out.str(), VertexId::hub(failed_hub));
  }

  Graph host = build_chain_graph(n, m);
  std::vector<std::vector<VertexPair>> pages(k);

  auto emit_end = [&](const Decomposition& base, const Placement& pl, int layer, int hub_pos) {
    std::map<VertexId, VertexId> vmap;
    for (int s = 0; s < n; ++s)
      vmap[end_verts[s]] = VertexId::layer(layer, pl.chain_slot[s] + 1);
    vmap[spec.end_hub] = VertexId::hub(hub_pos);
    for (int p = 0; p < base.page_count(); ++p)
      for (const auto& [x, y] : base.page_edge_labels(p))
        pages[pl.page_map[p]].push_back(make_edge(vmap.at(x), vmap.at(y)));
  };
  auto emit_mid = [&](const Placement& pl, int j) {
    std::map<VertexId, VertexId> vmap;
    for (int s = 0; s < n; ++s)
      vmap[mid_verts[s]] = VertexId::layer(j, pl.chain_slot[s] + 1);
    vmap[pl.flipped ? b : a] = VertexId::hub(j - 1);
    vmap[pl.flipped ? a : b] = VertexId::hub(j);
    for (int p = 0; p < mid.page_count(); ++p)
      for (const auto& [x, y] : mid.page_edge_labels(p))
        pages[pl.page_map[p]].push_back(make_edge(vmap.at(x), vmap.at(y)));
  };

  emit_end(end, end_left, 1, 1);
  for (int j = 2; j <= m - 1; ++j) emit_mid(mid_place[j], j);
  emit_end(end, end_right, m, m - 1);

  return checked(Decomposition::from_edge_labels(std::move(host), pages),
                 "chain_decomposition");
}

}  // namespace thickness
