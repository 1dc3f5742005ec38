#include "sclink/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "sclink/digraph.hpp"

namespace sclink {

Verdict is_structurally_controllable(const SparsityPattern& a, const SparsityPattern& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("state pattern must be square");
  if (b.rows() != a.rows()) throw std::invalid_argument("input pattern rows must match state size");
  const int n = a.rows();
  const int m = b.cols();

  // Accessibility: star a(p, q) is the digraph edge x_q -> x_p.
  std::vector<std::vector<int>> out(n + 1);
  for (const Star& s : a.stars()) {
    out[s.second].push_back(s.first);
  }
  std::vector<char> seen(n + 1, false);
  std::vector<int> queue;
  for (const Star& s : b.stars()) {
    if (!seen[s.first]) {
      seen[s.first] = true;
      queue.push_back(s.first);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int next : out[queue[head]]) {
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }

  Verdict verdict;
  for (int v = 1; v <= n; ++v) {
    if (!seen[v]) verdict.inaccessible_states.push_back(v);
  }

  // Dilation: left x'_p adjacent to right x_q per star (p, q), and to input
  // u_c per b star (p, c).
  std::vector<std::vector<int>> adj(n);
  for (const Star& s : a.stars()) {
    adj[s.first - 1].push_back(s.second - 1);
  }
  for (const Star& s : b.stars()) {
    adj[s.first - 1].push_back(n + s.second - 1);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
  }
  std::vector<int> match_l = detail::hopcroft_karp(adj, n + m);
  int matched = 0;
  for (int l = 0; l < n; ++l) {
    if (match_l[l] != -1) {
      ++matched;
      verdict.matching_witness.pairs.emplace_back(l, match_l[l]);
    }
  }
  verdict.dilation_deficiency = n - matched;
  verdict.controllable = verdict.inaccessible_states.empty() && verdict.dilation_deficiency == 0;
  return verdict;
}

int lower_bound(const CompositeSpec& spec) {
  spec.validate();
  const int q = inaccessible_nontop_sccs(spec).q();
  ClassedBipartite bp = build_system_bipartite(spec);
  Matching m = max_matching(bp, ClassMask{EdgeClass::X, EdgeClass::U});
  const int deficiency = spec.n_total() - static_cast<int>(m.size());
  return std::max(q, deficiency);
}

bool certify(const SynthesisReport& report, const CompositeSpec& spec) {
  if (!report.feasible) return false;
  Verdict v = is_structurally_controllable(apply_interconnections(spec, report.interconnections),
                                           spec.b);
  if (!v.controllable) return false;
  const int size = static_cast<int>(report.interconnections.size());
  if (size != report.q + report.beta) return false;
  return size >= lower_bound(spec);
}

}  // namespace sclink
