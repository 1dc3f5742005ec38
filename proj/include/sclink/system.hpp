#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "sclink/pattern.hpp"

namespace sclink {

/// Edge classes shared by the digraph and bipartite constructions:
/// U input edges, X intra-subsystem edges, N SCC helper edges, I
/// interconnection edges.
enum class EdgeClass { U, X, N, I };

/// State p of subsystem i, both 1-based.
struct StateId {
  int subsystem = 0;
  int state = 0;

  friend auto operator<=>(const StateId&, const StateId&) = default;
};

/// The shared subsystem pattern: a square n_s x n_s state pattern.
struct SubsystemTemplate {
  int n_s = 0;
  SparsityPattern a_s;

  friend bool operator==(const SubsystemTemplate&, const SubsystemTemplate&) = default;
};

/// Full problem instance: k structurally identical subsystems plus the
/// composite input pattern b with k*n_s rows and m >= 1 columns.
struct CompositeSpec {
  int k = 0;
  SubsystemTemplate tmpl;
  SparsityPattern b;

  int n_s() const { return tmpl.n_s; }
  int n_total() const { return k * tmpl.n_s; }
  int m() const { return b.cols(); }

  /// 1-based global index of a state: n_s*(subsystem-1) + state.
  int global_index(StateId s) const { return tmpl.n_s * (s.subsystem - 1) + s.state; }
  StateId state_of(int global_index) const;

  /// Throws std::invalid_argument when sizes or patterns are inconsistent.
  void validate() const;

  friend bool operator==(const CompositeSpec&, const CompositeSpec&) = default;
};

/// Directed influence from a state of one subsystem into a state of another.
/// Corresponds to a star at (target.state, source.state) in block
/// E(target.subsystem, source.subsystem), i.e. the digraph edge
/// source -> target. Endpoint subsystems must differ.
struct Interconnection {
  StateId target;
  StateId source;

  friend auto operator<=>(const Interconnection&, const Interconnection&) = default;
};

/// Result of the interconnection synthesis.
struct SynthesisReport {
  bool feasible = false;
  int q = 0;      ///< inaccessible non-top-linked subsystem SCCs
  int alpha = 0;  ///< maximum commonality index
  int beta = 0;   ///< unique dilation index
  int gamma_d = 0;  ///< alpha + beta
  int lower_bound = 0;
  std::vector<Interconnection> interconnections;  ///< sorted
  /// Final left-perfect matching witness; pairs are 0-based
  /// (left ordinal, right ordinal) of the system bipartite graph.
  std::vector<std::pair<int, int>> matching_witness;

  friend bool operator==(const SynthesisReport&, const SynthesisReport&) = default;
};

/// Composite pattern with every off-diagonal block full of stars (all
/// interconnections present) and the k diagonal blocks equal to a_s.
SparsityPattern compose_full(const CompositeSpec& spec);

/// Composite pattern with diagonal blocks a_s and exactly one star per link.
/// Rejects links whose endpoints share a subsystem.
SparsityPattern apply_interconnections(const CompositeSpec& spec,
                                       const std::vector<Interconnection>& links);

/// (a^T, b^T); structural observability of (a, c) equals structural
/// controllability of (a^T, c^T). Throws on dimension mismatch.
std::pair<SparsityPattern, SparsityPattern> transpose_system(const SparsityPattern& a,
                                                             const SparsityPattern& b);

/// Expands a per-subsystem input pattern (n_s x m) into a composite input
/// pattern by placing it in subsystem 1's rows only.
SparsityPattern input_in_first_subsystem(int k, int n_s, const SparsityPattern& b_local);

/// Replicates a per-subsystem input pattern (n_s x m) into every subsystem's
/// rows; used for templates that are individually structurally controllable.
SparsityPattern input_in_every_subsystem(int k, int n_s, const SparsityPattern& b_local);

}  // namespace sclink
