#include "sclink/synthesis.hpp"

#include <algorithm>
#include <stdexcept>

#include "sclink/verify.hpp"

namespace sclink {

namespace {

// Reachability over the link-free composite digraph plus a caller-supplied
// set of interconnection edges. Base adjacency and input seeds are built once.
class AccessContext {
public:
  explicit AccessContext(const CompositeSpec& spec) : n_(spec.n_total()) {
    adj_.resize(n_ + 1);
    const int n_s = spec.n_s();
    for (int i = 0; i < spec.k; ++i) {
      for (const Star& s : spec.tmpl.a_s.stars()) {
        adj_[i * n_s + s.second].push_back(i * n_s + s.first);
      }
    }
    for (const Star& s : spec.b.stars()) {
      seeds_.push_back(s.first);
    }
  }

  /// Mask over 1..n of states reachable from inputs; `extra` holds
  /// (from, to) interconnection edges in 1-based global indices.
  std::vector<char> reach(const std::vector<std::pair<int, int>>& extra) const {
    std::vector<std::vector<int>> extra_adj(n_ + 1);
    for (const auto& [from, to] : extra) {
      extra_adj[from].push_back(to);
    }
    std::vector<char> seen(n_ + 1, false);
    std::vector<int> queue;
    for (int s : seeds_) {
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (const auto& list : {std::cref(adj_[v]), std::cref(extra_adj[v])}) {
        for (int next : list.get()) {
          if (!seen[next]) {
            seen[next] = true;
            queue.push_back(next);
          }
        }
      }
    }
    return seen;
  }

private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> seeds_;
};

bool is_cross_pair(const ClassedBipartite& g, int l, int r) {
  return g.right_is_state(r) && g.right_subsystem(r) != g.left_subsystem(l);
}

}  // namespace

std::pair<int, int> extract_alpha_beta(const ClassedBipartite& host, const Matching& mstar) {
  int alpha = 0;
  int beta = 0;
  for (const auto& [l, r] : mstar.pairs) {
    if (host.right_is_scc(r)) {
      ++alpha;
    } else if (is_cross_pair(host, l, r)) {
      ++beta;
    }
  }
  return {alpha, beta};
}

Matching build_mtilde(const Matching& mstar, const ClassedBipartite& bp) {
  // M' keeps the X and U pairs; N and I pairs are dropped and re-matched.
  Matching mprime;
  for (const auto& [l, r] : mstar.pairs) {
    if (r >= bp.left_count() + bp.input_count()) continue;  // N-class pair
    if (is_cross_pair(bp, l, r)) continue;                  // I-class pair
    mprime.pairs.emplace_back(l, r);
  }

  ClassedBipartite rest = difference(bp, mprime);

  // I-only completion of the unmatched left nodes (Kuhn, lexicographic scan).
  std::vector<int> lefts;
  for (int l = 0; l < rest.left_count(); ++l) {
    if (rest.left_active(l)) lefts.push_back(l);
  }
  std::vector<std::vector<int>> adj(lefts.size());
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    if (!rest.implicit_cross()) break;
    for (int r = 0; r < rest.left_count(); ++r) {
      if (rest.right_active(r) && rest.right_subsystem(r) != rest.left_subsystem(lefts[i])) {
        adj[i].push_back(r);
      }
    }
  }
  std::vector<int> match = detail::kuhn_matching(adj, rest.right_count());

  Matching mtilde = mprime;
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    if (match[i] == -1) {
      throw std::logic_error("no interconnection-only completion of M' exists");
    }
    mtilde.pairs.emplace_back(lefts[i], match[i]);
  }
  std::sort(mtilde.pairs.begin(), mtilde.pairs.end());
  return mtilde;
}

std::pair<Matching, RewireTrace> rewire_for_accessibility(const Matching& mtilde,
                                                          const CompositeSpec& spec,
                                                          const InaccessibleSccSet& nset) {
  const int n_t = spec.n_total();
  const int n_s = spec.n_s();
  const int m_inputs = spec.m();
  AccessContext ctx(spec);

  std::vector<int> scc_of(n_t + 1, -1);
  for (int h = 0; h < nset.q(); ++h) {
    for (int member : nset.sccs[h]) {
      scc_of[member] = h;
    }
  }

  Matching m = mtilde;
  RewireTrace trace;
  auto subsystem_of_left = [&](int l) { return l / n_s; };
  auto subsystem_of_right = [&](int r) { return r / n_s; };
  const int max_iterations = nset.q() + n_t + 1;

  // match-by-right over state and input rights
  auto rebuild_match_r = [&](const Matching& cur) {
    std::vector<int> match_r(n_t + m_inputs, -1);
    for (const auto& [l, r] : cur.pairs) {
      if (r < n_t + m_inputs) match_r[r] = l;
    }
    return match_r;
  };

  int iterations = 0;
  while (true) {
    if (++iterations > max_iterations) {
      throw std::logic_error("rewiring did not converge");
    }
    std::vector<std::pair<int, int>> extra;
    for (const auto& [l, r] : m.pairs) {
      if (r < n_t && subsystem_of_right(r) != subsystem_of_left(l)) {
        extra.emplace_back(r + 1, l + 1);
      }
    }
    std::vector<char> acc = ctx.reach(extra);

    // V_N': left nodes matched through I edges whose N-SCC is inaccessible.
    std::vector<int> vn;
    for (const auto& [l, r] : m.pairs) {
      if (r < n_t && subsystem_of_right(r) != subsystem_of_left(l)) {
        int h = scc_of[l + 1];
        if (h != -1 && !acc[nset.sccs[h].front()]) vn.push_back(l);
      }
    }
    if (vn.empty()) break;

    std::vector<int> match_r = rebuild_match_r(m);
    std::vector<int> unmatched_acc;  // state right ordinals
    for (int r = 0; r < n_t; ++r) {
      if (match_r[r] == -1) {
        if (!acc[r + 1]) {
          throw std::logic_error("unmatched right state is inaccessible");
        }
        unmatched_acc.push_back(r);
      }
    }
    if (unmatched_acc.empty()) {
      throw std::logic_error("no unmatched accessible node exists");
    }

    int swap_left = -1;
    int swap_target = -1;
    for (int t : unmatched_acc) {
      for (int l : vn) {
        if (subsystem_of_left(l) != subsystem_of_right(t)) {
          swap_left = l;
          swap_target = t;
          break;
        }
      }
      if (swap_left != -1) break;
    }

    std::pair<int, int> broken, made;
    if (swap_left != -1) {
      // Case (a): connect the SCC's own left node to the unmatched node.
      broken = {swap_left, m.right_of(swap_left)};
      made = {swap_left, swap_target};
    } else {
      // Case (b): the unmatched node shares the subsystem of every pending
      // SCC. Break an I edge whose left side lies in the subsystem of the
      // pending node's partner and whose pair sits on a matching cycle, then
      // reconnect it to the unmatched node. Walking the matching's chains
      // from the inputs identifies the cycle pairs.
      const int l = vn.front();
      const int partner = m.right_of(l);
      const int j = subsystem_of_right(partner);
      const int t = unmatched_acc.front();

      std::vector<char> on_chain(n_t, false);
      for (int c = 0; c < m_inputs; ++c) {
        int l0 = match_r[n_t + c];
        if (l0 == -1) continue;
        int r = l0;  // state right ordinal equals the left ordinal
        int guard = 0;
        while (true) {
          if (++guard > n_t + 1) throw std::logic_error("matching chain does not terminate");
          on_chain[r] = true;
          int l2 = match_r[r];
          if (l2 == -1) break;
          r = l2;
        }
      }

      int cand_left = -1;
      for (const auto& [l2, r2] : m.pairs) {
        if (subsystem_of_left(l2) != j) continue;
        if (r2 >= n_t || subsystem_of_right(r2) == j) continue;  // not an I pair
        if (on_chain[r2]) continue;
        cand_left = l2;
        break;
      }
      if (cand_left == -1) {
        throw std::logic_error("no cycle interconnection edge available for rewiring");
      }
      broken = {cand_left, m.right_of(cand_left)};
      made = {cand_left, t};
    }

    for (auto& pair : m.pairs) {
      if (pair.first == broken.first) {
        pair.second = made.second;
        break;
      }
    }

    std::vector<std::pair<int, int>> extra_after;
    for (const auto& [l, r] : m.pairs) {
      if (r < n_t && subsystem_of_right(r) != subsystem_of_left(l)) {
        extra_after.emplace_back(r + 1, l + 1);
      }
    }
    std::vector<char> acc_after = ctx.reach(extra_after);
    RewireSwap swap{broken, made, {}};
    for (int h = 0; h < nset.q(); ++h) {
      int probe = nset.sccs[h].front();
      if (!acc[probe] && acc_after[probe]) swap.newly_accessible_sccs.push_back(h);
    }
    trace.swaps.push_back(std::move(swap));
  }

  return {m, trace};
}

std::vector<Interconnection> accessibility_completion(const Matching& mhat,
                                                      const CompositeSpec& spec,
                                                      const InaccessibleSccSet& nset) {
  const int n_t = spec.n_total();
  const int n_s = spec.n_s();
  AccessContext ctx(spec);

  std::vector<std::pair<int, int>> edges;
  std::vector<char> matched_state(n_t, false);
  for (const auto& [l, r] : mhat.pairs) {
    if (r < n_t) {
      matched_state[r] = true;
      if (r / n_s != l / n_s) edges.emplace_back(r + 1, l + 1);
    }
  }

  // The unmatched accessible node of mhat, preferred as completion source.
  std::vector<char> acc = ctx.reach(edges);
  int preferred = -1;
  for (int r = 0; r < n_t; ++r) {
    if (!matched_state[r] && acc[r + 1]) {
      preferred = r + 1;
      break;
    }
  }

  std::vector<Interconnection> links;
  while (true) {
    std::vector<char> cur = ctx.reach(edges);
    bool any_missing = false;
    bool progressed = false;
    for (int h = 0; h < nset.q(); ++h) {
      const int target = nset.sccs[h].front();
      if (cur[target]) continue;
      any_missing = true;
      const int target_sub = (target - 1) / n_s;
      int source = -1;
      if (preferred != -1 && (preferred - 1) / n_s != target_sub && cur[preferred]) {
        source = preferred;
      } else {
        for (int v = 1; v <= n_t; ++v) {
          if (cur[v] && (v - 1) / n_s != target_sub) {
            source = v;
            break;
          }
        }
      }
      if (source == -1) continue;  // defer until a cross-subsystem source exists
      links.push_back({spec.state_of(target), spec.state_of(source)});
      edges.emplace_back(source, target);
      progressed = true;
      break;
    }
    if (!any_missing) break;
    if (!progressed) {
      throw std::logic_error("no accessible source outside the target subsystem");
    }
  }
  return links;
}

namespace {

SynthesisReport infeasible_report(const CompositeSpec& spec, const InaccessibleSccSet& nset) {
  SynthesisReport report;
  report.feasible = false;
  report.q = nset.q();
  report.lower_bound = lower_bound(spec);
  return report;
}

}  // namespace

SynthesisReport synthesize(const CompositeSpec& spec) {
  spec.validate();
  InaccessibleSccSet nset = inaccessible_nontop_sccs(spec);

  // Feasibility precheck: with every interconnection present the composite
  // must be structurally controllable, else the instance has no solution.
  if (!is_structurally_controllable(compose_full(spec), spec.b).controllable) {
    return infeasible_report(spec, nset);
  }

  ClassedBipartite bpn = build_system_bipartite(spec, &nset);
  std::optional<Matching> mstar = min_cost_left_perfect_matching(bpn);
  if (!mstar) {
    return infeasible_report(spec, nset);
  }
  auto [alpha, beta] = extract_alpha_beta(bpn, *mstar);

  ClassedBipartite bp = build_system_bipartite(spec);
  Matching mtilde = build_mtilde(*mstar, bp);
  auto [mhat, trace] = rewire_for_accessibility(mtilde, spec, nset);
  std::vector<Interconnection> links = accessibility_completion(mhat, spec, nset);

  SynthesisReport report;
  report.feasible = true;
  report.q = nset.q();
  report.alpha = alpha;
  report.beta = beta;
  report.gamma_d = alpha + beta;
  report.lower_bound = lower_bound(spec);
  report.matching_witness = mhat.pairs;
  for (const auto& [l, r] : mhat.pairs) {
    if (r < bp.left_count() && bp.right_subsystem(r) != bp.left_subsystem(l)) {
      links.push_back({spec.state_of(l + 1), spec.state_of(r + 1)});
    }
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  report.interconnections = std::move(links);
  return report;
}

}  // namespace sclink
