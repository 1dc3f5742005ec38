#include "sclink/system.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sclink {

StateId CompositeSpec::state_of(int global_index) const {
  if (global_index < 1 || global_index > n_total()) {
    throw std::out_of_range("global state index out of range");
  }
  return StateId{(global_index - 1) / tmpl.n_s + 1, (global_index - 1) % tmpl.n_s + 1};
}

void CompositeSpec::validate() const {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (tmpl.n_s < 1) throw std::invalid_argument("n_s must be positive");
  if (tmpl.a_s.rows() != tmpl.n_s || tmpl.a_s.cols() != tmpl.n_s) {
    throw std::invalid_argument("subsystem pattern must be square of size n_s");
  }
  if (b.rows() != n_total()) {
    throw std::invalid_argument("input pattern must have k*n_s rows");
  }
  if (b.cols() < 1) throw std::invalid_argument("input pattern needs at least one column");
}

SparsityPattern compose_full(const CompositeSpec& spec) {
  spec.validate();
  const int n_s = spec.n_s();
  const int n_t = spec.n_total();
  std::vector<Star> stars;
  stars.reserve(spec.k * spec.tmpl.a_s.star_count() +
                static_cast<std::size_t>(n_s) * n_s * spec.k * (spec.k - 1));
  // Row-major generation keeps the star list sorted without a final sort.
  for (int row = 1; row <= n_t; ++row) {
    const int row_block = (row - 1) / n_s;
    const int local_row = (row - 1) % n_s + 1;
    auto local = spec.tmpl.a_s.stars().begin();
    auto local_end = spec.tmpl.a_s.stars().end();
    local = std::lower_bound(local, local_end, Star{local_row, 0});
    for (int col_block = 0; col_block < spec.k; ++col_block) {
      if (col_block == row_block) {
        for (auto it = local; it != local_end && it->first == local_row; ++it) {
          stars.emplace_back(row, col_block * n_s + it->second);
        }
      } else {
        for (int c = 1; c <= n_s; ++c) {
          stars.emplace_back(row, col_block * n_s + c);
        }
      }
    }
  }
  return SparsityPattern(n_t, n_t, std::move(stars));
}

SparsityPattern apply_interconnections(const CompositeSpec& spec,
                                       const std::vector<Interconnection>& links) {
  spec.validate();
  const int n_s = spec.n_s();
  std::vector<Star> stars;
  stars.reserve(spec.k * spec.tmpl.a_s.star_count() + links.size());
  for (int i = 0; i < spec.k; ++i) {
    for (const Star& s : spec.tmpl.a_s.stars()) {
      stars.emplace_back(i * n_s + s.first, i * n_s + s.second);
    }
  }
  for (const Interconnection& link : links) {
    if (link.target.subsystem == link.source.subsystem) {
      throw std::invalid_argument("interconnection endpoints must be in distinct subsystems");
    }
    if (link.target.subsystem < 1 || link.target.subsystem > spec.k ||
        link.source.subsystem < 1 || link.source.subsystem > spec.k ||
        link.target.state < 1 || link.target.state > n_s ||
        link.source.state < 1 || link.source.state > n_s) {
      throw std::out_of_range("interconnection endpoint out of range");
    }
    stars.emplace_back(spec.global_index(link.target), spec.global_index(link.source));
  }
  return SparsityPattern(spec.n_total(), spec.n_total(), std::move(stars));
}

std::pair<SparsityPattern, SparsityPattern> transpose_system(const SparsityPattern& a,
                                                             const SparsityPattern& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("state pattern must be square");
  if (b.rows() != a.rows()) throw std::invalid_argument("input pattern rows must match state size");
  return {a.transposed(), b.transposed()};
}

SparsityPattern input_in_first_subsystem(int k, int n_s, const SparsityPattern& b_local) {
  if (k < 1 || n_s < 1) throw std::invalid_argument("k and n_s must be positive");
  if (b_local.rows() != n_s) throw std::invalid_argument("per-subsystem input must have n_s rows");
  return SparsityPattern(k * n_s, b_local.cols(), b_local.stars());
}

SparsityPattern input_in_every_subsystem(int k, int n_s, const SparsityPattern& b_local) {
  if (k < 1 || n_s < 1) throw std::invalid_argument("k and n_s must be positive");
  if (b_local.rows() != n_s) throw std::invalid_argument("per-subsystem input must have n_s rows");
  std::vector<Star> stars;
  stars.reserve(b_local.star_count() * k);
  for (int i = 0; i < k; ++i) {
    for (const Star& s : b_local.stars()) {
      stars.emplace_back(i * n_s + s.first, s.second);
    }
  }
  return SparsityPattern(k * n_s, b_local.cols(), std::move(stars));
}

}  // namespace sclink
