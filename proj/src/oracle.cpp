#include "sclink/oracle.hpp"

#include <random>
#include <stdexcept>

#include "sclink/verify.hpp"

namespace sclink {

namespace {

// Canonical 53-bit double in [0, 1); keeps generation platform-independent.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

CompositeSpec random_spec(const GenParams& params) {
  if (params.k < 1 || params.n_s < 1 || params.m < 1) {
    throw std::invalid_argument("generator sizes must be positive");
  }
  if (params.edge_density < 0.0 || params.edge_density > 1.0 ||
      params.input_density < 0.0 || params.input_density > 1.0) {
    throw std::invalid_argument("densities must lie in [0, 1]");
  }
  std::mt19937_64 rng(params.seed);
  SparsityPattern a_s(params.n_s, params.n_s);
  for (int row = 1; row <= params.n_s; ++row) {
    for (int col = 1; col <= params.n_s; ++col) {
      if (unit_double(rng) < params.edge_density) a_s.add(row, col);
    }
  }
  SparsityPattern b(params.k * params.n_s, params.m);
  for (int row = 1; row <= params.k * params.n_s; ++row) {
    for (int col = 1; col <= params.m; ++col) {
      if (unit_double(rng) < params.input_density) b.add(row, col);
    }
  }
  return CompositeSpec{params.k, SubsystemTemplate{params.n_s, std::move(a_s)}, std::move(b)};
}

std::optional<OracleResult> brute_force_minimum(const CompositeSpec& spec, int cap) {
  spec.validate();
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");

  // Candidate universe ordered by (global target, global source).
  std::vector<Interconnection> universe;
  for (int ti = 1; ti <= spec.k; ++ti) {
    for (int tp = 1; tp <= spec.n_s(); ++tp) {
      for (int si = 1; si <= spec.k; ++si) {
        if (si == ti) continue;
        for (int sp = 1; sp <= spec.n_s(); ++sp) {
          universe.push_back({StateId{ti, tp}, StateId{si, sp}});
        }
      }
    }
  }
  const int u = static_cast<int>(universe.size());

  std::vector<Interconnection> subset;
  auto controllable_with = [&](const std::vector<Interconnection>& links) {
    return is_structurally_controllable(apply_interconnections(spec, links), spec.b)
        .controllable;
  };

  for (int size = 0; size <= std::min(cap, u); ++size) {
    if (size == 0) {
      if (controllable_with({})) return OracleResult{0, {}};
      continue;
    }
    std::vector<int> index(size);
    for (int i = 0; i < size; ++i) index[i] = i;
    while (true) {
      subset.clear();
      for (int i : index) subset.push_back(universe[i]);
      if (controllable_with(subset)) {
        return OracleResult{size, subset};
      }
      // Next combination in lexicographic index order.
      int pos = size - 1;
      while (pos >= 0 && index[pos] == u - size + pos) --pos;
      if (pos < 0) break;
      ++index[pos];
      for (int i = pos + 1; i < size; ++i) index[i] = index[i - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace sclink
