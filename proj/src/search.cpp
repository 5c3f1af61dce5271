#include "thickness/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

#include "thickness/planarity.hpp"

namespace thickness {

std::string search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  throw std::logic_error("search_status_name: unknown value");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Edge assignment order: by (max endpoint, min endpoint). Assigning edges in
/// this order grows complete subgraphs vertex by vertex, which makes
/// incremental planarity pruning bite early.
std::vector<int> edge_order(const Graph& g) {
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int e, int f) {
    const auto& [ei, ej] = g.edges()[e];
    const auto& [fi, fj] = g.edges()[f];
    return std::pair(ej, ei) < std::pair(fj, fi);
  });
  return order;
}

struct PageState {
  std::vector<int> edge_ids;
  std::vector<int> degree;
  int support = 0;  // vertices with positive degree
  int dirty = 0;    // edges added since the last successful planarity check
};

class Searcher {
 public:
  Searcher(const Graph& g, int k, const SearchConstraint& constraint,
           const SearchBudget& budget, const AcceptFn& accept)
      : g_(g), k_(k), accept_(accept) {
    if (k < 1) throw std::invalid_argument("find_decomposition: k must be >= 1");
    max_nodes_ = budget.max_nodes;
    max_seconds_ = budget.max_seconds;
    interval_ = budget.planarity_check_interval > 0
                    ? budget.planarity_check_interval
                    : (g.edge_count() <= 25 ? 1 : 3);
    build_groups(constraint);
    symmetry_ = constraint.pinned.empty();
    pages_.resize(k);
    for (auto& p : pages_) p.degree.assign(g.vertex_count(), 0);
    mark_.assign(g.vertex_count(), -1);
    compact_id_.assign(g.vertex_count(), 0);
  }

  SearchResult run() {
    auto t0 = Clock::now();
    t0_ = t0;
    deadline_hit_ = false;
    bool ok = infeasible_ ? false : dfs(0, 0);
    SearchResult result;
    result.nodes = nodes_;
    result.seconds = seconds_since(t0);
    if (ok) {
      result.status = SearchStatus::found;
      result.certificate = std::move(found_);
    } else if (deadline_hit_) {
      result.status = SearchStatus::inconclusive;
    } else {
      result.status = SearchStatus::exhausted;
    }
    return result;
  }

 private:
  void build_groups(const SearchConstraint& constraint) {
    auto order = edge_order(g_);
    std::vector<int> rank(g_.edge_count());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

    std::vector<int> group_of(g_.edge_count(), -1);
    if (constraint.hub_symmetric) {
      const auto& [a, b] = *constraint.hub_symmetric;
      auto ia = g_.vertex_index(a), ib = g_.vertex_index(b);
      if (!ia || !ib)
        throw std::invalid_argument("find_decomposition: hub-symmetric vertex not in graph");
      for (int x = 0; x < g_.vertex_count(); ++x) {
        if (x == *ia || x == *ib) continue;
        auto ea = g_.edge_index(g_.vertex(x), a);
        auto eb = g_.edge_index(g_.vertex(x), b);
        if (ea && eb) {
          int id = static_cast<int>(groups_.size());
          groups_.push_back({*ea, *eb});
          group_of[*ea] = group_of[*eb] = id;
        }
      }
    }
    for (int e = 0; e < g_.edge_count(); ++e) {
      if (group_of[e] >= 0) continue;
      group_of[e] = static_cast<int>(groups_.size());
      groups_.push_back({e});
    }

    forced_.assign(groups_.size(), -1);
    for (const auto& [edge, page] : constraint.pinned) {
      auto e = g_.edge_index(edge.first, edge.second);
      if (!e)
        throw std::invalid_argument("find_decomposition: pinned edge not in graph: " +
                                    edge.first.str() + "-" + edge.second.str());
      if (page < 0 || page >= k_)
        throw std::invalid_argument("find_decomposition: pinned page out of range");
      int gid = group_of[*e];
      if (forced_[gid] >= 0 && forced_[gid] != page) infeasible_ = true;
      forced_[gid] = page;
    }

    // Paired groups are assigned before singletons: the pairing constraint is
    // the binding one, so deciding it near the root lets planarity prune the
    // remaining edges instead of discovering the conflict at the leaves.
    // Within each class, groups follow their earliest edge.
    std::vector<int> group_rank(groups_.size());
    for (size_t gi = 0; gi < groups_.size(); ++gi) {
      int best = rank[groups_[gi][0]];
      for (int e : groups_[gi]) best = std::min(best, rank[e]);
      group_rank[gi] = best;
      std::sort(groups_[gi].begin(), groups_[gi].end(),
                [&](int e, int f) { return rank[e] < rank[f]; });
    }
    std::vector<int> by_rank(groups_.size());
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(), [&](int x, int y) {
      return std::pair(groups_[x].size() == 1, group_rank[x]) <
             std::pair(groups_[y].size() == 1, group_rank[y]);
    });
    std::vector<std::vector<int>> sorted;
    std::vector<int> sorted_forced;
    for (int gi : by_rank) {
      sorted.push_back(std::move(groups_[gi]));
      sorted_forced.push_back(forced_[gi]);
    }
    groups_ = std::move(sorted);
    forced_ = std::move(sorted_forced);
  }

  bool over_budget() {
    if (nodes_ >= max_nodes_) return true;
    if ((nodes_ & 0xFFF) == 0 && seconds_since(t0_) > max_seconds_) return true;
    return false;
  }

  void push_edge(PageState& p, int e) {
    const auto& [i, j] = g_.edges()[e];
    p.edge_ids.push_back(e);
    if (p.degree[i]++ == 0) ++p.support;
    if (p.degree[j]++ == 0) ++p.support;
    ++p.dirty;
  }

  void pop_edge(PageState& p, int e) {
    const auto& [i, j] = g_.edges()[e];
    p.edge_ids.pop_back();
    if (--p.degree[i] == 0) --p.support;
    if (--p.degree[j] == 0) --p.support;
  }

  bool page_planar(const PageState& p) {
    ++stamp_;
    int count = 0;
    compact_edges_.clear();
    for (int e : p.edge_ids) {
      const auto& [i, j] = g_.edges()[e];
      if (mark_[i] != stamp_) {
        mark_[i] = stamp_;
        compact_id_[i] = count++;
      }
      if (mark_[j] != stamp_) {
        mark_[j] = stamp_;
        compact_id_[j] = count++;
      }
      compact_edges_.push_back({compact_id_[i], compact_id_[j]});
    }
    return is_planar_edges(count, compact_edges_);
  }

  Decomposition materialize() const {
    std::vector<std::vector<int>> pages(k_);
    for (int p = 0; p < k_; ++p) pages[p] = pages_[p].edge_ids;
    return Decomposition(g_, std::move(pages));
  }

  bool dfs(size_t gi, int used) {
    if (gi == groups_.size()) {
      for (auto& p : pages_) {
        if (p.dirty > 0 && !page_planar(p)) return false;
      }
      Decomposition candidate = materialize();
      if (accept_ && !accept_(candidate)) return false;
      found_ = std::move(candidate);
      return true;
    }
    const auto& group = groups_[gi];
    int begin = 0, end = k_;
    if (forced_[gi] >= 0) {
      begin = forced_[gi];
      end = begin + 1;
    } else if (symmetry_) {
      end = std::min(k_, used + 1);
    }
    for (int page = begin; page < end; ++page) {
      ++nodes_;
      if (over_budget()) {
        deadline_hit_ = true;
        return false;
      }
      PageState& p = pages_[page];
      int saved_dirty = p.dirty;
      bool was_empty = p.edge_ids.empty();
      for (int e : group) push_edge(p, e);

      bool viable =
          static_cast<int>(p.edge_ids.size()) <= euler_edge_cap(std::max(p.support, 1));
      if (viable && p.dirty >= interval_) {
        viable = page_planar(p);
        if (viable) p.dirty = 0;
      }
      if (viable) {
        int next_used = used + (was_empty && symmetry_ ? 1 : 0);
        if (dfs(gi + 1, next_used)) return true;
        if (deadline_hit_) {
          for (auto it = group.rbegin(); it != group.rend(); ++it) pop_edge(p, *it);
          p.dirty = saved_dirty;
          return false;
        }
      }
      for (auto it = group.rbegin(); it != group.rend(); ++it) pop_edge(p, *it);
      p.dirty = saved_dirty;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  const AcceptFn& accept_;
  std::uint64_t max_nodes_;
  double max_seconds_;
  int interval_;
  bool symmetry_ = true;
  bool infeasible_ = false;

  std::vector<std::vector<int>> groups_;
  std::vector<int> forced_;
  std::vector<PageState> pages_;

  std::vector<int> mark_, compact_id_;
  std::vector<std::pair<int, int>> compact_edges_;
  int stamp_ = 0;

  Clock::time_point t0_;
  std::uint64_t nodes_ = 0;
  bool deadline_hit_ = false;
  std::optional<Decomposition> found_;
};

}  // namespace

SearchResult find_decomposition(const Graph& g, int k, const SearchConstraint& constraint,
                                const SearchBudget& budget, const AcceptFn& accept) {
  Searcher searcher(g, k, constraint, budget, accept);
  return searcher.run();
}

Decomposition greedy_decomposition(const Graph& g) {
  auto order = edge_order(g);
  std::vector<std::vector<int>> pages;
  for (int e : order) {
    bool placed = false;
    for (auto& page : pages) {
      page.push_back(e);
      std::vector<std::pair<int, int>> edges;
      for (int f : page) edges.push_back(g.edges()[f]);
      if (is_planar_edges(g.vertex_count(), edges)) {
        placed = true;
        break;
      }
      page.pop_back();
    }
    if (!placed) pages.push_back({e});
  }
  if (pages.empty()) pages.push_back({});
  return Decomposition(g, std::move(pages));
}

ExactThicknessResult exact_thickness(const Graph& g, const SearchBudget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  ExactThicknessResult result;
  int k = euler_lower_bound(g);
  for (;;) {
    double elapsed = seconds_since(t0);
    SearchBudget sub = budget;
    sub.max_seconds = budget.max_seconds - elapsed;
    SearchResult res =
        sub.max_seconds <= 0 ? SearchResult{} : find_decomposition(g, k, {}, sub);
    result.nodes += res.nodes;

    if (res.status == SearchStatus::found) {
      result.bound = {k, k, Provenance::search_certificate};
      result.certificate = std::move(res.certificate);
      break;
    }
    if (res.status == SearchStatus::exhausted) {
      ++k;
      continue;
    }
    // out of budget: upper certificate from first-fit
    Decomposition greedy = greedy_decomposition(g);
    result.bound = {k, greedy.page_count(), Provenance::search_certificate};
    result.certificate = std::move(greedy);
    break;
  }
  result.seconds = seconds_since(t0);
  return result;
}

}  // namespace thickness
