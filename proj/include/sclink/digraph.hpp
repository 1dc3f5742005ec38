#pragma once

#include <utility>
#include <vector>

#include "sclink/system.hpp"

namespace sclink {

/// Directed edge of the composite system digraph. `from` is a 1-based global
/// state index, or n_total + c for input node u_c (U edges only); `to` is
/// always a state.
struct DigraphEdge {
  int from = 0;
  int to = 0;
  EdgeClass cls = EdgeClass::X;

  friend auto operator<=>(const DigraphEdge&, const DigraphEdge&) = default;
};

/// Which interconnections to include when building the composite digraph.
enum class LinkMode { None, All };

/// Composite state/input digraph with class-tagged edges.
class LayeredDigraph {
public:
  LayeredDigraph() = default;
  LayeredDigraph(int k, int n_s, int m, std::vector<DigraphEdge> edges);

  int subsystem_count() const { return k_; }
  int subsystem_size() const { return n_s_; }
  int input_count() const { return m_; }
  int state_count() const { return k_ * n_s_; }

  bool is_input_node(int node) const { return node > state_count(); }
  int subsystem_of(int state) const { return (state - 1) / n_s_ + 1; }

  const std::vector<DigraphEdge>& edges() const { return edges_; }

  /// Out-adjacency over state targets, indexed by `from` node
  /// (states 1..n_T then inputs n_T+1..n_T+m); entry 0 is unused.
  std::vector<std::vector<int>> out_adjacency() const;

private:
  int k_ = 0;
  int n_s_ = 0;
  int m_ = 0;
  std::vector<DigraphEdge> edges_;
};

LayeredDigraph build_digraph(const CompositeSpec& spec, LinkMode links);
LayeredDigraph build_digraph(const CompositeSpec& spec,
                             const std::vector<Interconnection>& links);

/// SCC decomposition of the state part of a digraph. Components hold sorted
/// global state indices and are ordered by smallest member. A component is
/// non-top-linked when no state-to-state edge enters it from another
/// component; input edges do not count.
struct SccPartition {
  std::vector<std::vector<int>> components;
  std::vector<std::pair<int, int>> condensation_edges;  ///< (from, to) component indices
  std::vector<bool> non_top_linked;

  int component_of(int state) const;
};

SccPartition strongly_connected_components(const LayeredDigraph& g);

/// States reachable by directed paths starting at input nodes.
std::vector<StateId> accessible_states(const LayeredDigraph& g);

/// Non-top-linked SCCs of the per-subsystem state digraphs that are not
/// accessible when no interconnections are present: the set N = {N_1..N_q}.
/// Members are sorted global state indices; the list is ordered by
/// (subsystem, smallest state index).
struct InaccessibleSccSet {
  std::vector<std::vector<int>> sccs;

  int q() const { return static_cast<int>(sccs.size()); }
};

InaccessibleSccSet inaccessible_nontop_sccs(const CompositeSpec& spec);

}  // namespace sclink
