#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sclink/system.hpp"

namespace sclink {

/// Parameters for the deterministic random instance generator.
struct GenParams {
  int k = 2;
  int n_s = 2;
  int m = 1;
  double edge_density = 0.3;
  double input_density = 0.3;
  std::uint64_t seed = 0;
};

/// Deterministic given the seed; identical parameters yield identical specs.
CompositeSpec random_spec(const GenParams& params);

struct OracleResult {
  int size = 0;
  std::vector<Interconnection> witness;
};

/// Smallest c <= cap such that some interconnection set of size c makes the
/// composite structurally controllable, with the lexicographically first
/// witness. Subsets are enumerated by increasing cardinality. Returns nullopt
/// when no set within the cap works. Intended for desk-size instances.
std::optional<OracleResult> brute_force_minimum(const CompositeSpec& spec, int cap);

}  // namespace sclink
