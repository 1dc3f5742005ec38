#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sclink/digraph.hpp"
#include "sclink/system.hpp"

namespace sclink {

/// Explicitly stored bipartite edge; `left` and `right` are 0-based ordinals.
struct BipartiteEdge {
  int left = 0;
  int right = 0;
  EdgeClass cls = EdgeClass::X;

  friend auto operator<=>(const BipartiteEdge&, const BipartiteEdge&) = default;
};

/// Bitmask over edge classes.
class ClassMask {
public:
  ClassMask() = default;
  ClassMask(std::initializer_list<EdgeClass> classes) {
    for (EdgeClass c : classes) bits_ |= bit(c);
  }
  static ClassMask all() { return {EdgeClass::U, EdgeClass::X, EdgeClass::N, EdgeClass::I}; }
  bool contains(EdgeClass c) const { return bits_ & bit(c); }

private:
  static std::uint8_t bit(EdgeClass c) { return static_cast<std::uint8_t>(1u << static_cast<int>(c)); }
  std::uint8_t bits_ = 0;
};

/// System bipartite graph of a composite instance: left state-copies
/// x'^i_p against right states, inputs and optional SCC nodes.
///
/// Left ordinals are 0..n_T-1 (global state index minus one). Right ordinals
/// are 0..n_T-1 for states, n_T..n_T+m-1 for inputs, and n_T+m.. for SCC
/// nodes. X, U and N edges are stored explicitly; the I class (complete
/// cross-subsystem biclique, present for k >= 2) is implicit and expanded on
/// demand. `difference` deactivates nodes instead of copying edge lists.
class ClassedBipartite {
public:
  static int cost(EdgeClass c);

  int subsystem_count() const { return k_; }
  int subsystem_size() const { return n_s_; }
  int input_count() const { return m_; }
  int scc_node_count() const { return q_; }
  int left_count() const { return k_ * n_s_; }
  int right_count() const { return left_count() + m_ + q_; }

  bool right_is_state(int r) const { return r < left_count(); }
  bool right_is_input(int r) const { return r >= left_count() && r < left_count() + m_; }
  bool right_is_scc(int r) const { return r >= left_count() + m_; }

  /// 0-based subsystem of a left node or state right node.
  int left_subsystem(int l) const { return l / n_s_; }
  int right_subsystem(int r) const { return right_is_state(r) ? r / n_s_ : -1; }

  bool implicit_cross() const { return k_ >= 2; }
  const std::vector<BipartiteEdge>& explicit_edges() const { return edges_; }

  bool left_active(int l) const { return left_active_[l]; }
  bool right_active(int r) const { return right_active_[r]; }
  int active_left_count() const;
  int active_right_count() const;

  /// Class of the (l, r) edge; valid only when has_edge(l, r).
  EdgeClass classify(int l, int r) const;
  bool has_edge(int l, int r) const;

  /// Explicit edges of one left node, sorted by right ordinal.
  std::vector<BipartiteEdge>::const_iterator left_begin(int l) const;
  std::vector<BipartiteEdge>::const_iterator left_end(int l) const;

  friend ClassedBipartite build_system_bipartite(const CompositeSpec&,
                                                 const InaccessibleSccSet*);
  friend ClassedBipartite difference(const ClassedBipartite&, const struct Matching&);

private:
  int k_ = 0;
  int n_s_ = 0;
  int m_ = 0;
  int q_ = 0;
  std::vector<BipartiteEdge> edges_;  ///< sorted by (left, right)
  std::vector<int> left_offset_;      ///< index of first edge per left node
  std::vector<char> left_active_;
  std::vector<char> right_active_;

  void index_edges();
};

/// Matching as a set of (left, right) ordinal pairs, sorted by left.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const { return pairs.size(); }
  /// Right partner of a left node, or -1.
  int right_of(int left) const;
  /// Left partner of a right node, or -1 (linear scan; fine for report use).
  int left_of(int right) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Endpoint-disjointness and edge existence over a host graph.
bool is_valid_matching(const ClassedBipartite& g, const Matching& m);

long long matching_cost(const ClassedBipartite& g, const Matching& m);

ClassedBipartite build_system_bipartite(const CompositeSpec& spec,
                                        const InaccessibleSccSet* with_scc_nodes = nullptr);

/// Maximum-cardinality matching over edges whose class is allowed
/// (Hopcroft-Karp; deterministic for a fixed graph).
Matching max_matching(const ClassedBipartite& g, ClassMask allowed);

/// Minimum-cost matching among maximum-cardinality ones, under the
/// {U:0, X:1, N:2, I:3} cost function. Returns nullopt when no matching
/// saturates the active left side.
std::optional<Matching> min_cost_left_perfect_matching(const ClassedBipartite& g);

/// Induced subgraph on the nodes unmatched by m, preserving classes/costs.
ClassedBipartite difference(const ClassedBipartite& g, const Matching& m);

namespace detail {
/// Kuhn augmenting-path matching over an explicit adjacency (rights sorted
/// ascending per left); lefts are processed in ascending order. Returns
/// match_of_left with -1 for unmatched.
std::vector<int> kuhn_matching(const std::vector<std::vector<int>>& adj, int right_count);

/// Hopcroft-Karp maximum matching over an explicit adjacency. Returns
/// match_of_left with -1 for unmatched.
std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj, int right_count);
}  // namespace detail

}  // namespace sclink
