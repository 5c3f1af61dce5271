#include "thickness/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thickness {

Decomposition::Decomposition(Graph host, std::vector<std::vector<int>> pages)
    : host_(std::move(host)), pages_(std::move(pages)) {
  if (pages_.empty()) throw std::invalid_argument("decomposition: needs at least one page");
  for (auto& page : pages_) {
    std::sort(page.begin(), page.end());
    page.erase(std::unique(page.begin(), page.end()), page.end());
    for (int e : page)
      if (e < 0 || e >= host_.edge_count())
        throw std::invalid_argument("decomposition: edge index out of range");
  }
}

Decomposition Decomposition::single_page(Graph host) {
  std::vector<int> all(host.edge_count());
  for (int e = 0; e < host.edge_count(); ++e) all[e] = e;
  return Decomposition(std::move(host), {all});
}

Decomposition Decomposition::from_edge_labels(
    Graph host, const std::vector<std::vector<VertexPair>>& pages) {
  std::vector<std::vector<int>> index_pages;
  for (const auto& page : pages) {
    std::vector<int> ids;
    std::set<int> seen;
    for (const auto& [a, b] : page) {
      auto e = host.edge_index(a, b);
      if (!e)
        throw std::invalid_argument("decomposition: edge not in host: " + a.str() + "-" +
                                    b.str());
      if (!seen.insert(*e).second)
        throw std::invalid_argument("decomposition: edge repeated on one page: " + a.str() +
                                    "-" + b.str());
      ids.push_back(*e);
    }
    index_pages.push_back(std::move(ids));
  }
  return Decomposition(std::move(host), std::move(index_pages));
}

Graph Decomposition::page_graph(int page) const { return host_.edge_subgraph(pages_.at(page)); }

std::vector<VertexPair> Decomposition::page_edge_labels(int page) const {
  std::vector<VertexPair> out;
  for (int e : pages_.at(page)) out.push_back(host_.edge_label(e));
  return out;
}

Decomposition Decomposition::padded(int page_count) const {
  if (page_count < this->page_count())
    throw std::invalid_argument("padded: cannot drop pages");
  auto pages = pages_;
  pages.resize(page_count);
  return Decomposition(host_, std::move(pages));
}

bool VerificationReport::pages_planar() const {
  for (const auto& v : page_verdicts)
    if (!v.planar) return false;
  return true;
}

bool VerificationReport::valid() const { return partition_ok && coverage_ok && pages_planar(); }

namespace {

std::string edge_name(const Graph& g, int e) {
  auto [a, b] = g.edge_label(e);
  return a.str() + "-" + b.str();
}

/// Hub pairing: for hub at position j, the edges to layer j and layer j+1 at
/// equal slots must exist and share a page. Any other edge at a hub breaks
/// the expected chain shape.
std::optional<bool> check_pairing(const Decomposition& d, const std::vector<int>& page_of,
                                  std::string& detail) {
  const Graph& host = d.host();
  bool has_hub = false;
  for (const auto& v : host.vertices()) has_hub = has_hub || v.is_hub();
  if (!has_hub) return std::nullopt;

  for (int h = 0; h < host.vertex_count(); ++h) {
    if (!host.vertex(h).is_hub()) continue;
    int pos = host.vertex(h).as_hub().position;
    // slot -> (page of layer-pos edge, page of layer-pos+1 edge)
    std::map<int, std::pair<int, int>> sides;
    for (int e = 0; e < host.edge_count(); ++e) {
      const auto& [i, j] = host.edges()[e];
      if (i != h && j != h) continue;
      const VertexId& other = host.vertex(i == h ? j : i);
      if (!other.is_layer() || (other.as_layer().layer != pos &&
                                other.as_layer().layer != pos + 1)) {
        if (detail.empty())
          detail = "unexpected edge at hub " + host.vertex(h).str() + ": " +
                   edge_name(host, e);
        return false;
      }
      auto& slot_pages = sides.try_emplace(other.as_layer().slot, -1, -1).first->second;
      (other.as_layer().layer == pos ? slot_pages.first : slot_pages.second) = page_of[e];
    }
    for (const auto& [slot, pages] : sides) {
      if (pages.first < 0 || pages.second < 0) {
        if (detail.empty())
          detail = "hub " + host.vertex(h).str() + " is missing one side of slot " +
                   std::to_string(slot);
        return false;
      }
      if (pages.first != pages.second) {
        if (detail.empty()) {
          std::ostringstream out;
          out << "pairing violated at hub " << host.vertex(h).str() << " slot " << slot
              << ": pages " << pages.first + 1 << " and " << pages.second + 1;
          detail = out.str();
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace

VerificationReport verify(const Decomposition& d, WitnessMode mode) {
  VerificationReport report;
  const Graph& host = d.host();

  std::vector<int> count(host.edge_count(), 0);
  std::vector<int> page_of(host.edge_count(), -1);
  report.partition_ok = true;
  report.coverage_ok = true;
  for (int p = 0; p < d.page_count(); ++p) {
    for (int e : d.pages()[p]) {
      if (++count[e] > 1) {
        report.partition_ok = false;
        if (report.detail.empty())
          report.detail = "edge on more than one page: " + edge_name(host, e);
      }
      if (page_of[e] < 0) page_of[e] = p;
    }
  }
  for (int e = 0; e < host.edge_count(); ++e) {
    if (count[e] == 0) {
      report.coverage_ok = false;
      if (report.detail.empty()) report.detail = "edge on no page: " + edge_name(host, e);
    }
  }

  for (int p = 0; p < d.page_count(); ++p) {
    report.page_verdicts.push_back(is_planar(d.page_graph(p), mode));
    if (!report.page_verdicts.back().planar && report.detail.empty())
      report.detail = "page " + std::to_string(p + 1) + " is not planar";
  }

  report.pairing_ok = check_pairing(d, page_of, report.detail);
  return report;
}

Decomposition restrict_to(const Decomposition& d, const std::vector<VertexId>& keep) {
  Graph host = d.host().induced_subgraph(keep);
  std::set<VertexId> keep_set(keep.begin(), keep.end());
  std::vector<std::vector<int>> pages;
  for (int p = 0; p < d.page_count(); ++p) {
    std::vector<int> page;
    for (int e : d.pages()[p]) {
      auto [a, b] = d.host().edge_label(e);
      if (keep_set.count(a) && keep_set.count(b)) page.push_back(*host.edge_index(a, b));
    }
    pages.push_back(std::move(page));
  }
  return Decomposition(std::move(host), std::move(pages));
}

}  // namespace thickness
