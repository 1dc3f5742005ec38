#include "sclink/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace sclink {

int ClassedBipartite::cost(EdgeClass c) {
  switch (c) {
    case EdgeClass::U: return 0;
    case EdgeClass::X: return 1;
    case EdgeClass::N: return 2;
    case EdgeClass::I: return 3;
  }
  return 0;
}

void ClassedBipartite::index_edges() {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  left_offset_.assign(left_count() + 1, 0);
  for (const BipartiteEdge& e : edges_) {
    ++left_offset_[e.left + 1];
  }
  for (int l = 0; l < left_count(); ++l) {
    left_offset_[l + 1] += left_offset_[l];
  }
}

int ClassedBipartite::active_left_count() const {
  return static_cast<int>(std::count(left_active_.begin(), left_active_.end(), 1));
}

int ClassedBipartite::active_right_count() const {
  return static_cast<int>(std::count(right_active_.begin(), right_active_.end(), 1));
}

EdgeClass ClassedBipartite::classify(int l, int r) const {
  if (right_is_input(r)) return EdgeClass::U;
  if (right_is_scc(r)) return EdgeClass::N;
  return left_subsystem(l) == right_subsystem(r) ? EdgeClass::X : EdgeClass::I;
}

bool ClassedBipartite::has_edge(int l, int r) const {
  if (l < 0 || l >= left_count() || r < 0 || r >= right_count()) return false;
  if (!left_active_[l] || !right_active_[r]) return false;
  if (implicit_cross() && right_is_state(r) && right_subsystem(r) != left_subsystem(l)) {
    return true;
  }
  auto begin = edges_.begin() + left_offset_[l];
  auto end = edges_.begin() + left_offset_[l + 1];
  auto it = std::lower_bound(begin, end, r,
                             [](const BipartiteEdge& e, int right) { return e.right < right; });
  return it != end && it->right == r;
}

std::vector<BipartiteEdge>::const_iterator ClassedBipartite::left_begin(int l) const {
  return edges_.begin() + left_offset_[l];
}

std::vector<BipartiteEdge>::const_iterator ClassedBipartite::left_end(int l) const {
  return edges_.begin() + left_offset_[l + 1];
}

int Matching::right_of(int left) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair<int, int>{left, -1});
  if (it != pairs.end() && it->first == left) return it->second;
  return -1;
}

int Matching::left_of(int right) const {
  for (const auto& [l, r] : pairs) {
    if (r == right) return l;
  }
  return -1;
}

bool is_valid_matching(const ClassedBipartite& g, const Matching& m) {
  std::vector<char> left_used(g.left_count(), false), right_used(g.right_count(), false);
  for (const auto& [l, r] : m.pairs) {
    if (l < 0 || l >= g.left_count() || r < 0 || r >= g.right_count()) return false;
    if (left_used[l] || right_used[r]) return false;
    left_used[l] = right_used[r] = true;
    if (!g.has_edge(l, r)) return false;
  }
  return true;
}

long long matching_cost(const ClassedBipartite& g, const Matching& m) {
  long long total = 0;
  for (const auto& [l, r] : m.pairs) {
    total += ClassedBipartite::cost(g.classify(l, r));
  }
  return total;
}

ClassedBipartite build_system_bipartite(const CompositeSpec& spec,
                                        const InaccessibleSccSet* with_scc_nodes) {
  spec.validate();
  ClassedBipartite g;
  g.k_ = spec.k;
  g.n_s_ = spec.n_s();
  g.m_ = spec.m();
  g.q_ = with_scc_nodes ? with_scc_nodes->q() : 0;
  const int n_t = spec.n_total();
  const int n_s = g.n_s_;

  for (int i = 0; i < spec.k; ++i) {
    for (const Star& s : spec.tmpl.a_s.stars()) {
      // Star (p, q): digraph edge x_q -> x_p, bipartite edge (x'_p, x_q).
      g.edges_.push_back({i * n_s + s.first - 1, i * n_s + s.second - 1, EdgeClass::X});
    }
  }
  for (const Star& s : spec.b.stars()) {
    g.edges_.push_back({s.first - 1, n_t + s.second - 1, EdgeClass::U});
  }
  if (with_scc_nodes) {
    for (int h = 0; h < g.q_; ++h) {
      for (int member : with_scc_nodes->sccs[h]) {
        g.edges_.push_back({member - 1, n_t + g.m_ + h, EdgeClass::N});
      }
    }
  }
  g.left_active_.assign(g.left_count(), true);
  g.right_active_.assign(g.right_count(), true);
  g.index_edges();
  return g;
}

ClassedBipartite difference(const ClassedBipartite& g, const Matching& m) {
  ClassedBipartite out = g;
  for (const auto& [l, r] : m.pairs) {
    out.left_active_[l] = false;
    out.right_active_[r] = false;
  }
  return out;
}

namespace {

std::vector<std::vector<int>> allowed_adjacency(const ClassedBipartite& g, ClassMask allowed) {
  std::vector<std::vector<int>> adj(g.left_count());
  const bool cross = allowed.contains(EdgeClass::I) && g.implicit_cross();
  for (int l = 0; l < g.left_count(); ++l) {
    if (!g.left_active(l)) continue;
    for (auto it = g.left_begin(l); it != g.left_end(l); ++it) {
      if (allowed.contains(it->cls) && g.right_active(it->right)) {
        adj[l].push_back(it->right);
      }
    }
    if (cross) {
      for (int r = 0; r < g.left_count(); ++r) {
        if (g.right_subsystem(r) != g.left_subsystem(l) && g.right_active(r)) {
          adj[l].push_back(r);
        }
      }
    }
    std::sort(adj[l].begin(), adj[l].end());
  }
  return adj;
}

constexpr int kInf = std::numeric_limits<int>::max();

}  // namespace

Matching max_matching(const ClassedBipartite& g, ClassMask allowed) {
  const auto adj = allowed_adjacency(g, allowed);
  std::vector<int> match_l = detail::hopcroft_karp(adj, g.right_count());
  Matching result;
  for (int l = 0; l < g.left_count(); ++l) {
    if (match_l[l] != -1) result.pairs.emplace_back(l, match_l[l]);
  }
  return result;
}

std::optional<Matching> min_cost_left_perfect_matching(const ClassedBipartite& g) {
  const int n_left = g.left_count();
  const int n_right = g.right_count();
  const bool hubs = g.implicit_cross();
  const int n_hubs = hubs ? g.subsystem_count() : 0;
  const int right_base = n_left;
  const int hub_base = n_left + n_right;
  const int total = hub_base + n_hubs;

  // Active state rights per subsystem, for the hub fan-out.
  std::vector<std::vector<int>> hub_rights(n_hubs);
  if (hubs) {
    for (int r = 0; r < n_left; ++r) {
      if (g.right_active(r)) hub_rights[g.right_subsystem(r)].push_back(r);
    }
  }

  std::vector<long long> pot(total, 0);
  std::vector<int> match_l(n_left, -1), match_r(n_right, -1);
  constexpr long long kInfCost = std::numeric_limits<long long>::max() / 4;

  std::vector<long long> dist(total);
  std::vector<int> parent(total);

  for (int source = 0; source < n_left; ++source) {
    if (!g.left_active(source)) continue;

    std::fill(dist.begin(), dist.end(), kInfCost);
    std::fill(parent.begin(), parent.end(), -1);
    dist[source] = 0;
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.push({0, source});
    int best_free = -1;
    long long best_dist = 0;

    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d > dist[v]) continue;
      if (v >= right_base && v < hub_base) {
        int r = v - right_base;
        if (match_r[r] == -1) {
          best_free = v;
          best_dist = d;
          break;
        }
        // Backward along the matched edge.
        int l = match_r[r];
        long long nd = d - ClassedBipartite::cost(g.classify(l, r)) + pot[v] - pot[l];
        if (nd < dist[l]) {
          dist[l] = nd;
          parent[l] = v;
          heap.push({nd, l});
        }
      } else if (v < n_left) {
        int l = v;
        for (auto it = g.left_begin(l); it != g.left_end(l); ++it) {
          if (!g.right_active(it->right) || it->right == match_l[l]) continue;
          int node = right_base + it->right;
          long long nd = d + ClassedBipartite::cost(it->cls) + pot[v] - pot[node];
          if (nd < dist[node]) {
            dist[node] = nd;
            parent[node] = v;
            heap.push({nd, node});
          }
        }
        if (hubs) {
          for (int j = 0; j < n_hubs; ++j) {
            if (j == g.left_subsystem(l) || hub_rights[j].empty()) continue;
            int node = hub_base + j;
            long long nd = d + ClassedBipartite::cost(EdgeClass::I) + pot[v] - pot[node];
            if (nd < dist[node]) {
              dist[node] = nd;
              parent[node] = v;
              heap.push({nd, node});
            }
          }
        }
      } else {
        int j = v - hub_base;
        for (int r : hub_rights[j]) {
          int node = right_base + r;
          long long nd = d + pot[v] - pot[node];
          if (nd < dist[node]) {
            dist[node] = nd;
            parent[node] = v;
            heap.push({nd, node});
          }
        }
      }
    }

    if (best_free == -1) {
      return std::nullopt;  // the active left side cannot be saturated
    }

    for (int v = 0; v < total; ++v) {
      pot[v] += std::min(dist[v], best_dist);
    }

    // Flip matched/unmatched along the augmenting path.
    int cur = best_free;
    while (true) {
      int pl = parent[cur];
      if (pl >= hub_base) pl = parent[pl];
      int prev_right = parent[pl];
      match_l[pl] = cur - right_base;
      match_r[cur - right_base] = pl;
      if (pl == source) break;
      cur = prev_right;
    }
  }

  Matching result;
  for (int l = 0; l < n_left; ++l) {
    if (match_l[l] != -1) result.pairs.emplace_back(l, match_l[l]);
  }
  return result;
}

namespace detail {

std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj, int right_count) {
  const int n_left = static_cast<int>(adj.size());
  std::vector<int> match_l(n_left, -1), match_r(right_count, -1), dist(n_left, 0);

  auto bfs = [&]() {
    std::queue<int> queue;
    bool found = false;
    for (int l = 0; l < n_left; ++l) {
      if (match_l[l] == -1 && !adj[l].empty()) {
        dist[l] = 0;
        queue.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    while (!queue.empty()) {
      int l = queue.front();
      queue.pop();
      for (int r : adj[l]) {
        int next = match_r[r];
        if (next == -1) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the level graph.
  auto try_augment = [&](int root) {
    struct Frame {
      int left;
      std::size_t next_edge;
    };
    std::vector<Frame> stack{{root, 0}};
    std::vector<std::pair<int, int>> path;  // (left, right) tentative pairs
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_edge >= adj[f.left].size()) {
        dist[f.left] = kInf;
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      int r = adj[f.left][f.next_edge++];
      int next = match_r[r];
      if (next == -1) {
        path.emplace_back(f.left, r);
        for (const auto& [pl, pr] : path) {
          match_l[pl] = pr;
          match_r[pr] = pl;
        }
        return true;
      }
      if (dist[next] == dist[f.left] + 1) {
        path.emplace_back(f.left, r);
        stack.push_back({next, 0});
      }
    }
    return false;
  };

  while (bfs()) {
    for (int l = 0; l < n_left; ++l) {
      if (match_l[l] == -1 && !adj[l].empty()) {
        try_augment(l);
      }
    }
  }
  return match_l;
}

std::vector<int> kuhn_matching(const std::vector<std::vector<int>>& adj, int right_count) {
  const int n_left = static_cast<int>(adj.size());
  std::vector<int> match_l(n_left, -1), match_r(right_count, -1);
  std::vector<char> visited(right_count, false);

  auto augment = [&](auto&& self, int l) -> bool {
    for (int r : adj[l]) {
      if (visited[r]) continue;
      visited[r] = true;
      if (match_r[r] == -1 || self(self, match_r[r])) {
        match_l[l] = r;
        match_r[r] = l;
        return true;
      }
    }
    return false;
  };

  for (int l = 0; l < n_left; ++l) {
    std::fill(visited.begin(), visited.end(), false);
    augment(augment, l);
  }
  return match_l;
}

}  // namespace detail

}  // namespace sclink
