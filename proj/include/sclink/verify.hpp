#pragma once

#include <vector>

#include "sclink/bipartite.hpp"
#include "sclink/system.hpp"

namespace sclink {

/// Structural-controllability verdict per Lin's criterion: controllable iff
/// every state is input-accessible and the system bipartite graph saturates
/// the left side (no dilation).
struct Verdict {
  bool controllable = false;
  /// Inaccessible states as sorted 1-based row indices of the checked pattern.
  std::vector<int> inaccessible_states;
  /// n minus the maximum matching size of the system bipartite graph.
  int dilation_deficiency = 0;
  /// Maximum matching witness; pairs are (row, col-or-input) 0-based, with
  /// inputs numbered n..n+m-1 on the right.
  Matching matching_witness;
};

/// Checks an arbitrary structured pair: a square n x n, b of size n x m.
/// Throws std::invalid_argument on dimension mismatch.
Verdict is_structurally_controllable(const SparsityPattern& a, const SparsityPattern& b);

/// max(q, left deficiency of the system bipartite graph over {X, U}): a valid
/// lower bound on the size of any feasible interconnection set.
int lower_bound(const CompositeSpec& spec);

/// True iff the report's interconnections make the composite controllable,
/// match the Theorem-1 cardinality q + beta, and meet the lower bound.
bool certify(const SynthesisReport& report, const CompositeSpec& spec);

}  // namespace sclink
