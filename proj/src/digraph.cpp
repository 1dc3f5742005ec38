#include "sclink/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sclink {

LayeredDigraph::LayeredDigraph(int k, int n_s, int m, std::vector<DigraphEdge> edges)
    : k_(k), n_s_(n_s), m_(m), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<std::vector<int>> LayeredDigraph::out_adjacency() const {
  std::vector<std::vector<int>> adj(state_count() + m_ + 1);
  for (const DigraphEdge& e : edges_) {
    adj[e.from].push_back(e.to);
  }
  return adj;
}

namespace {

void append_template_edges(const CompositeSpec& spec, std::vector<DigraphEdge>& edges) {
  const int n_s = spec.n_s();
  for (int i = 0; i < spec.k; ++i) {
    for (const Star& s : spec.tmpl.a_s.stars()) {
      // Star at (p, q) means state q drives state p.
      edges.push_back({i * n_s + s.second, i * n_s + s.first, EdgeClass::X});
    }
  }
  const int n_t = spec.n_total();
  for (const Star& s : spec.b.stars()) {
    edges.push_back({n_t + s.second, s.first, EdgeClass::U});
  }
}

}  // namespace

LayeredDigraph build_digraph(const CompositeSpec& spec, LinkMode links) {
  spec.validate();
  std::vector<DigraphEdge> edges;
  const int n_s = spec.n_s();
  std::size_t cross = links == LinkMode::All
                          ? static_cast<std::size_t>(n_s) * n_s * spec.k * (spec.k - 1)
                          : 0;
  edges.reserve(spec.k * spec.tmpl.a_s.star_count() + spec.b.star_count() + cross);
  append_template_edges(spec, edges);
  if (links == LinkMode::All) {
    const int n_t = spec.n_total();
    for (int from = 1; from <= n_t; ++from) {
      const int from_block = (from - 1) / n_s;
      for (int to = 1; to <= n_t; ++to) {
        if ((to - 1) / n_s != from_block) {
          edges.push_back({from, to, EdgeClass::I});
        }
      }
    }
  }
  return LayeredDigraph(spec.k, n_s, spec.m(), std::move(edges));
}

LayeredDigraph build_digraph(const CompositeSpec& spec,
                             const std::vector<Interconnection>& links) {
  spec.validate();
  std::vector<DigraphEdge> edges;
  edges.reserve(spec.k * spec.tmpl.a_s.star_count() + spec.b.star_count() + links.size());
  append_template_edges(spec, edges);
  for (const Interconnection& link : links) {
    if (link.target.subsystem == link.source.subsystem) {
      throw std::invalid_argument("interconnection endpoints must be in distinct subsystems");
    }
    edges.push_back({spec.global_index(link.source), spec.global_index(link.target),
                     EdgeClass::I});
  }
  return LayeredDigraph(spec.k, spec.n_s(), spec.m(), std::move(edges));
}

int SccPartition::component_of(int state) const {
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (std::binary_search(components[c].begin(), components[c].end(), state)) {
      return static_cast<int>(c);
    }
  }
  return -1;
}

namespace {

// Iterative Tarjan over states 1..n with a caller-supplied adjacency.
std::vector<int> tarjan_components(const std::vector<std::vector<int>>& adj, int n,
                                   int* component_count) {
  std::vector<int> index(n + 1, -1), lowlink(n + 1, 0), comp(n + 1, -1);
  std::vector<char> on_stack(n + 1, false);
  std::vector<int> stack;
  int next_index = 0;
  int components = 0;

  struct Frame {
    int node;
    std::size_t edge;
  };
  std::vector<Frame> call_stack;

  for (int root = 1; root <= n; ++root) {
    if (index[root] != -1) continue;
    call_stack.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call_stack.empty()) {
      Frame& f = call_stack.back();
      if (f.edge < adj[f.node].size()) {
        int next = adj[f.node][f.edge++];
        if (index[next] == -1) {
          index[next] = lowlink[next] = next_index++;
          stack.push_back(next);
          on_stack[next] = true;
          call_stack.push_back({next, 0});
        } else if (on_stack[next]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[next]);
        }
      } else {
        if (lowlink[f.node] == index[f.node]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = components;
            if (w == f.node) break;
          }
          ++components;
        }
        int done = f.node;
        call_stack.pop_back();
        if (!call_stack.empty()) {
          int parent = call_stack.back().node;
          lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
        }
      }
    }
  }
  *component_count = components;
  return comp;
}

SccPartition partition_from_edges(int n, const std::vector<std::pair<int, int>>& state_edges) {
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [from, to] : state_edges) {
    adj[from].push_back(to);
  }
  int count = 0;
  std::vector<int> raw = tarjan_components(adj, n, &count);

  // Renumber components by smallest member for a deterministic order.
  std::vector<int> smallest(count, n + 1);
  for (int v = 1; v <= n; ++v) {
    smallest[raw[v]] = std::min(smallest[raw[v]], v);
  }
  std::vector<int> order(count);
  for (int c = 0; c < count; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return smallest[a] < smallest[b]; });
  std::vector<int> rank(count);
  for (int pos = 0; pos < count; ++pos) rank[order[pos]] = pos;

  SccPartition part;
  part.components.resize(count);
  for (int v = 1; v <= n; ++v) {
    part.components[rank[raw[v]]].push_back(v);
  }
  std::vector<std::pair<int, int>> cond;
  for (const auto& [from, to] : state_edges) {
    int cf = rank[raw[from]];
    int ct = rank[raw[to]];
    if (cf != ct) cond.emplace_back(cf, ct);
  }
  std::sort(cond.begin(), cond.end());
  cond.erase(std::unique(cond.begin(), cond.end()), cond.end());
  part.condensation_edges = std::move(cond);
  part.non_top_linked.assign(count, true);
  for (const auto& [from, to] : part.condensation_edges) {
    part.non_top_linked[to] = false;
  }
  return part;
}

}  // namespace

SccPartition strongly_connected_components(const LayeredDigraph& g) {
  std::vector<std::pair<int, int>> state_edges;
  state_edges.reserve(g.edges().size());
  for (const DigraphEdge& e : g.edges()) {
    if (!g.is_input_node(e.from)) {
      state_edges.emplace_back(e.from, e.to);
    }
  }
  return partition_from_edges(g.state_count(), state_edges);
}

namespace {

std::vector<char> reachable_from_inputs(const LayeredDigraph& g) {
  const int n = g.state_count();
  auto adj = g.out_adjacency();
  std::vector<char> seen(n + 1, false);
  std::vector<int> queue;
  for (const DigraphEdge& e : g.edges()) {
    if (g.is_input_node(e.from) && !seen[e.to]) {
      seen[e.to] = true;
      queue.push_back(e.to);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int next : adj[queue[head]]) {
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<StateId> accessible_states(const LayeredDigraph& g) {
  std::vector<char> seen = reachable_from_inputs(g);
  std::vector<StateId> out;
  for (int v = 1; v <= g.state_count(); ++v) {
    if (seen[v]) {
      out.push_back(StateId{g.subsystem_of(v), (v - 1) % g.subsystem_size() + 1});
    }
  }
  return out;
}

InaccessibleSccSet inaccessible_nontop_sccs(const CompositeSpec& spec) {
  spec.validate();
  // SCC structure of the template digraph; identical for every subsystem.
  std::vector<std::pair<int, int>> tmpl_edges;
  tmpl_edges.reserve(spec.tmpl.a_s.star_count());
  for (const Star& s : spec.tmpl.a_s.stars()) {
    tmpl_edges.emplace_back(s.second, s.first);
  }
  SccPartition tmpl_part = partition_from_edges(spec.n_s(), tmpl_edges);

  std::vector<char> seen = reachable_from_inputs(build_digraph(spec, LinkMode::None));

  InaccessibleSccSet result;
  const int n_s = spec.n_s();
  for (int i = 0; i < spec.k; ++i) {
    for (std::size_t c = 0; c < tmpl_part.components.size(); ++c) {
      if (!tmpl_part.non_top_linked[c]) continue;
      // Within an SCC accessibility of one member implies all of them.
      if (seen[i * n_s + tmpl_part.components[c].front()]) continue;
      std::vector<int> members;
      members.reserve(tmpl_part.components[c].size());
      for (int local : tmpl_part.components[c]) {
        members.push_back(i * n_s + local);
      }
      result.sccs.push_back(std::move(members));
    }
  }
  return result;
}

}  // namespace sclink
