#pragma once

#include <utility>
#include <vector>

#include "sclink/bipartite.hpp"
#include "sclink/digraph.hpp"
#include "sclink/system.hpp"

namespace sclink {

/// One rewiring step: an I-class matching edge was broken and another made.
/// Pairs are (left, right) bipartite ordinals; `newly_accessible_sccs`
/// indexes into the InaccessibleSccSet.
struct RewireSwap {
  std::pair<int, int> broken;
  std::pair<int, int> made;
  std::vector<int> newly_accessible_sccs;
};

struct RewireTrace {
  std::vector<RewireSwap> swaps;
};

/// (|M* ∩ N-class|, |M* ∩ I-class|) of an optimum matching of the host graph.
std::pair<int, int> extract_alpha_beta(const ClassedBipartite& host, const Matching& mstar);

/// Keeps the X/U part of mstar and completes it to a left-perfect matching of
/// bp (the system bipartite graph without SCC nodes) using I-class edges
/// only. Throws std::logic_error when no I-only completion exists.
Matching build_mtilde(const Matching& mstar, const ClassedBipartite& bp);

/// Swaps I-class matching edges until every SCC of nset whose left node is
/// matched through an I edge is accessible using the matching's own
/// interconnections. The I-edge count is invariant across swaps.
std::pair<Matching, RewireTrace> rewire_for_accessibility(const Matching& mtilde,
                                                          const CompositeSpec& spec,
                                                          const InaccessibleSccSet& nset);

/// One extra interconnection per still-inaccessible SCC of nset, from an
/// accessible state of a different subsystem into the SCC's smallest state.
std::vector<Interconnection> accessibility_completion(const Matching& mhat,
                                                      const CompositeSpec& spec,
                                                      const InaccessibleSccSet& nset);

/// Full pipeline: feasibility precheck, min-cost matching on the SCC-extended
/// bipartite graph, rewiring, completion, and report assembly.
SynthesisReport synthesize(const CompositeSpec& spec);

}  // namespace sclink
