#pragma once

#include "sclink/oracle.hpp"
#include "sclink/system.hpp"

namespace fixtures {

// k=2 chains (x1 -> x2 per subsystem) with the input at x^1_1. Minimum
// solution is one interconnection into x^2_1.
inline sclink::CompositeSpec t1() {
  sclink::SparsityPattern a_s(2, 2, {{2, 1}});
  sclink::SparsityPattern b(4, 1, {{1, 1}});
  return {2, {2, a_s}, b};
}

// Four five-state subsystems: x1<->x2, x2<->x3, x4->x2, x2->x5, single input
// at x^1_1. Eleven interconnections are necessary and sufficient.
inline sclink::CompositeSpec four_subsystems() {
  sclink::SparsityPattern a_s(5, 5, {{2, 1}, {1, 2}, {3, 2}, {2, 3}, {2, 4}, {5, 2}});
  sclink::SparsityPattern b(20, 1, {{1, 1}});
  return {4, {5, a_s}, b};
}

// Companion-form template (state bipartite graph has a perfect matching,
// subsystem digraph irreducible); input drives the last composite state.
inline sclink::CompositeSpec controller_canonical(int k) {
  sclink::SparsityPattern a_s(3, 3, {{1, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}});
  sclink::SparsityPattern b(3 * k, 1, {{3 * k, 1}});
  return {k, {3, a_s}, b};
}

// Two-state cycles per subsystem (structurally cyclic) with one input into
// subsystem 1; q = k-1 and no dilation repair is needed.
inline sclink::CompositeSpec cyclic(int k) {
  sclink::SparsityPattern a_s(2, 2, {{1, 2}, {2, 1}});
  sclink::SparsityPattern b(2 * k, 1, {{1, 1}});
  return {k, {2, a_s}, b};
}

// Chain template with the same single-input column replicated into every
// subsystem: individually structurally controllable, per-subsystem matching
// deficiency one.
inline sclink::CompositeSpec replicated_input_chain(int k) {
  sclink::SparsityPattern a_s(2, 2, {{2, 1}});
  sclink::SparsityPattern b_local(2, 1, {{1, 1}});
  return {k, {2, a_s}, sclink::input_in_every_subsystem(k, 2, b_local)};
}

}  // namespace fixtures
