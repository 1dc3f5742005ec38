#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "sclink/oracle.hpp"
#include "sclink/synthesis.hpp"
#include "sclink/verify.hpp"

using namespace sclink;

namespace {

int cross_pair_count(const ClassedBipartite& g, const Matching& m) {
  int count = 0;
  for (const auto& [l, r] : m.pairs) {
    if (g.right_is_state(r) && g.right_subsystem(r) != g.left_subsystem(l)) ++count;
  }
  return count;
}

// Accessibility of the composite with the matching's interconnections.
std::set<int> accessible_with(const CompositeSpec& spec, const ClassedBipartite& g,
                              const Matching& m) {
  std::vector<Interconnection> links;
  for (const auto& [l, r] : m.pairs) {
    if (g.right_is_state(r) && g.right_subsystem(r) != g.left_subsystem(l)) {
      links.push_back({spec.state_of(l + 1), spec.state_of(r + 1)});
    }
  }
  std::set<int> acc;
  for (const StateId& s : accessible_states(build_digraph(spec, links))) {
    acc.insert(spec.global_index(s));
  }
  return acc;
}

}  // namespace

TEST_CASE("alpha/beta extraction across the special templates") {
  CompositeSpec t1 = fixtures::t1();
  InaccessibleSccSet nset = inaccessible_nontop_sccs(t1);
  ClassedBipartite g = build_system_bipartite(t1, &nset);
  auto mstar = min_cost_left_perfect_matching(g);
  REQUIRE(mstar.has_value());
  CHECK(extract_alpha_beta(g, *mstar) == std::pair<int, int>{1, 0});

  CompositeSpec cyc = fixtures::cyclic(3);
  InaccessibleSccSet cyc_n = inaccessible_nontop_sccs(cyc);
  ClassedBipartite cyc_g = build_system_bipartite(cyc, &cyc_n);
  CHECK(extract_alpha_beta(cyc_g, *min_cost_left_perfect_matching(cyc_g)) ==
        std::pair<int, int>{0, 0});

  for (int k : {2, 4}) {
    CompositeSpec rep = fixtures::replicated_input_chain(k);
    InaccessibleSccSet rep_n = inaccessible_nontop_sccs(rep);
    REQUIRE(rep_n.q() == 0);
    ClassedBipartite rep_g = build_system_bipartite(rep, &rep_n);
    CHECK(extract_alpha_beta(rep_g, *min_cost_left_perfect_matching(rep_g)) ==
          std::pair<int, int>{0, k - 1});
  }
}

TEST_CASE("mtilde of the chain pair completes M-prime with one I edge") {
  CompositeSpec spec = fixtures::t1();
  InaccessibleSccSet nset = inaccessible_nontop_sccs(spec);
  ClassedBipartite with_n = build_system_bipartite(spec, &nset);
  ClassedBipartite plain = build_system_bipartite(spec);
  Matching mtilde = build_mtilde(*min_cost_left_perfect_matching(with_n), plain);
  Matching expected;
  expected.pairs = {{0, 4}, {1, 0}, {2, 1}, {3, 2}};
  CHECK(mtilde == expected);
  CHECK(cross_pair_count(plain, mtilde) == 1);
  CHECK(is_valid_matching(plain, mtilde));
}

TEST_CASE("mtilde equals M-star when no N or I edges are selected") {
  CompositeSpec spec = fixtures::controller_canonical(3);
  InaccessibleSccSet nset = inaccessible_nontop_sccs(spec);
  ClassedBipartite with_n = build_system_bipartite(spec, &nset);
  ClassedBipartite plain = build_system_bipartite(spec);
  auto mstar = min_cost_left_perfect_matching(with_n);
  REQUIRE(mstar.has_value());
  CHECK(extract_alpha_beta(with_n, *mstar) == std::pair<int, int>{0, 0});
  CHECK(build_mtilde(*mstar, plain) == *mstar);
}

TEST_CASE("mtilde of the four-subsystem instance has eleven interconnections") {
  CompositeSpec spec = fixtures::four_subsystems();
  InaccessibleSccSet nset = inaccessible_nontop_sccs(spec);
  ClassedBipartite with_n = build_system_bipartite(spec, &nset);
  ClassedBipartite plain = build_system_bipartite(spec);
  Matching mtilde = build_mtilde(*min_cost_left_perfect_matching(with_n), plain);
  CHECK(static_cast<int>(mtilde.size()) == 20);
  CHECK(cross_pair_count(plain, mtilde) == 11);
}

TEST_CASE("rewiring is the identity when every targeted SCC is accessible") {
  CompositeSpec spec = fixtures::t1();
  InaccessibleSccSet nset = inaccessible_nontop_sccs(spec);
  ClassedBipartite with_n = build_system_bipartite(spec, &nset);
  ClassedBipartite plain = build_system_bipartite(spec);
  Matching mtilde = build_mtilde(*min_cost_left_perfect_matching(with_n), plain);
  auto [mhat, trace] = rewire_for_accessibility(mtilde, spec, nset);
  CHECK(trace.swaps.empty());
  CHECK(mhat == mtilde);
}

TEST_CASE("rewiring falls back to breaking a cycle edge of the partner subsystem") {
  // Three subsystems over the template x1<->x2 -> x3 -> x4 -> x5 with the
  // input at x^1_1. The matching below strands the SCC {x^2_1, x^2_2} on
  // matching cycles through subsystem 3 while the only unmatched node x^2_3
  // sits in subsystem 2 as well, so the direct reconnection is impossible.
  SparsityPattern a_s(5, 5, {{2, 1}, {1, 2}, {3, 2}, {4, 3}, {5, 4}});
  CompositeSpec spec{3, {5, a_s}, SparsityPattern(15, 1, {{1, 1}})};
  InaccessibleSccSet nset = inaccessible_nontop_sccs(spec);
  REQUIRE(nset.q() == 2);
  REQUIRE(nset.sccs[0] == std::vector<int>{6, 7});
  REQUIRE(nset.sccs[1] == std::vector<int>{11, 12});

  Matching mtilde;
  mtilde.pairs = {{0, 15}, {1, 0}, {2, 1}, {3, 2}, {4, 3},
                  {5, 12}, {6, 13}, {7, 4}, {8, 14}, {9, 8},
                  {10, 11}, {11, 10}, {12, 5}, {13, 6}, {14, 9}};
  ClassedBipartite plain = build_system_bipartite(spec);
  REQUIRE(is_valid_matching(plain, mtilde));

  auto [mhat, trace] = rewire_for_accessibility(mtilde, spec, nset);
  REQUIRE(trace.swaps.size() == 1);
  CHECK(trace.swaps[0].broken == std::pair<int, int>{12, 5});
  CHECK(trace.swaps[0].made == std::pair<int, int>{12, 7});
  CHECK(trace.swaps[0].newly_accessible_sccs == std::vector<int>{0});
  CHECK(is_valid_matching(plain, mhat));
  CHECK(cross_pair_count(plain, mhat) == cross_pair_count(plain, mtilde));
  // The stranded SCC is now fed through its own interconnections.
  std::set<int> acc = accessible_with(spec, plain, mhat);
  CHECK(acc.count(6) == 1);
  CHECK(acc.count(7) == 1);
}

TEST_CASE("rewiring the four-subsystem instance keeps the I count and frees N") {
  CompositeSpec spec = fixtures::four_subsystems();
  InaccessibleSccSet nset = inaccessible_nontop_sccs(spec);
  ClassedBipartite with_n = build_system_bipartite(spec, &nset);
  ClassedBipartite plain = build_system_bipartite(spec);
  Matching mtilde = build_mtilde(*min_cost_left_perfect_matching(with_n), plain);
  auto [mhat, trace] = rewire_for_accessibility(mtilde, spec, nset);
  CHECK(cross_pair_count(plain, mhat) == 11);
  std::set<int> acc = accessible_with(spec, plain, mhat);
  for (const auto& [l, r] : mhat.pairs) {
    if (!plain.right_is_state(r) || plain.right_subsystem(r) == plain.left_subsystem(l)) {
      continue;
    }
    for (const auto& scc : nset.sccs) {
      if (std::binary_search(scc.begin(), scc.end(), l + 1)) {
        CHECK(acc.count(scc.front()) == 1);
      }
    }
  }
  // alpha = q here, so no completion edges are needed afterwards.
  CHECK(accessibility_completion(mhat, spec, nset).empty());
}

TEST_CASE("completion adds one edge per remaining SCC of the cyclic template") {
  CompositeSpec spec = fixtures::cyclic(3);
  InaccessibleSccSet nset = inaccessible_nontop_sccs(spec);
  ClassedBipartite with_n = build_system_bipartite(spec, &nset);
  ClassedBipartite plain = build_system_bipartite(spec);
  Matching mtilde = build_mtilde(*min_cost_left_perfect_matching(with_n), plain);
  auto [mhat, trace] = rewire_for_accessibility(mtilde, spec, nset);
  CHECK(trace.swaps.empty());
  std::vector<Interconnection> links = accessibility_completion(mhat, spec, nset);
  std::vector<Interconnection> expected = {{{2, 1}, {1, 2}}, {{3, 1}, {1, 2}}};
  CHECK(links == expected);
}

TEST_CASE("completion is empty when q is zero") {
  CompositeSpec spec = fixtures::replicated_input_chain(3);
  InaccessibleSccSet nset = inaccessible_nontop_sccs(spec);
  REQUIRE(nset.q() == 0);
  ClassedBipartite with_n = build_system_bipartite(spec, &nset);
  ClassedBipartite plain = build_system_bipartite(spec);
  Matching mtilde = build_mtilde(*min_cost_left_perfect_matching(with_n), plain);
  auto [mhat, trace] = rewire_for_accessibility(mtilde, spec, nset);
  CHECK(accessibility_completion(mhat, spec, nset).empty());
}

TEST_CASE("synthesize solves the chain pair with a single link") {
  SynthesisReport report = synthesize(fixtures::t1());
  REQUIRE(report.feasible);
  CHECK(report.q == 1);
  CHECK(report.alpha == 1);
  CHECK(report.beta == 0);
  CHECK(report.gamma_d == 1);
  CHECK(report.lower_bound == 1);
  std::vector<Interconnection> expected = {{{2, 1}, {1, 2}}};
  CHECK(report.interconnections == expected);
  CHECK(certify(report, fixtures::t1()));
}

TEST_CASE("synthesize reproduces the four-subsystem example") {
  CompositeSpec spec = fixtures::four_subsystems();
  SynthesisReport report = synthesize(spec);
  REQUIRE(report.feasible);
  CHECK(report.interconnections.size() == 11);
  CHECK(report.q + report.beta == 11);
  CHECK(report.lower_bound == 11);
  CHECK(is_structurally_controllable(apply_interconnections(spec, report.interconnections),
                                     spec.b)
            .controllable);
  CHECK(certify(report, spec));
}

TEST_CASE("synthesize on companion-form templates needs k-1 links") {
  for (int k = 2; k <= 6; ++k) {
    CompositeSpec spec = fixtures::controller_canonical(k);
    SynthesisReport report = synthesize(spec);
    REQUIRE(report.feasible);
    CHECK(static_cast<int>(report.interconnections.size()) == k - 1);
    CHECK(report.q == k - 1);
    CHECK(report.gamma_d == 0);
    CHECK(certify(report, spec));
  }
}

TEST_CASE("synthesize on structurally cyclic templates needs exactly q links") {
  for (int k = 2; k <= 5; ++k) {
    CompositeSpec spec = fixtures::cyclic(k);
    SynthesisReport report = synthesize(spec);
    REQUIRE(report.feasible);
    CHECK(report.gamma_d == 0);
    CHECK(static_cast<int>(report.interconnections.size()) == report.q);
    CHECK(certify(report, spec));
  }
}

TEST_CASE("individually controllable subsystems need k-1 links or none") {
  for (int k = 2; k <= 5; ++k) {
    // Chain template: no perfect matching in the state bipartite graph.
    SynthesisReport chain = synthesize(fixtures::replicated_input_chain(k));
    REQUIRE(chain.feasible);
    CHECK(chain.q == 0);
    CHECK(chain.beta == k - 1);
    CHECK(static_cast<int>(chain.interconnections.size()) == k - 1);

    // Cycle template: perfect matching exists, no links needed.
    SparsityPattern a_s(2, 2, {{1, 2}, {2, 1}});
    SparsityPattern b_local(2, 1, {{1, 1}});
    CompositeSpec cyc{k, {2, a_s}, input_in_every_subsystem(k, 2, b_local)};
    SynthesisReport none = synthesize(cyc);
    REQUIRE(none.feasible);
    CHECK(none.interconnections.empty());
  }
}

TEST_CASE("synthesize on a lone subsystem") {
  CompositeSpec good{1, {2, SparsityPattern(2, 2, {{2, 1}})}, SparsityPattern(2, 1, {{1, 1}})};
  SynthesisReport report = synthesize(good);
  REQUIRE(report.feasible);
  CHECK(report.interconnections.empty());
  CHECK(certify(report, good));

  CompositeSpec bad{1, {2, SparsityPattern(2, 2)}, SparsityPattern(2, 1, {{1, 1}})};
  CHECK_FALSE(synthesize(bad).feasible);
}

TEST_CASE("synthesize rejects an all-zero input pattern") {
  CompositeSpec spec = fixtures::t1();
  spec.b = SparsityPattern(4, 1);
  SynthesisReport report = synthesize(spec);
  CHECK_FALSE(report.feasible);
  CHECK(report.interconnections.empty());
}

TEST_CASE("theorem-1 identity and certificates hold on random instances") {
  std::mt19937_64 rng(20260810);
  double densities[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    GenParams p;
    p.k = 2 + static_cast<int>(rng() % 4);
    p.n_s = 1 + static_cast<int>(rng() % 6);
    p.m = 1 + static_cast<int>(rng() % 2);
    p.edge_density = densities[rng() % 5];
    p.input_density = densities[rng() % 5];
    p.seed = rng();
    CompositeSpec spec = random_spec(p);
    SynthesisReport report = synthesize(spec);
    if (!report.feasible) continue;
    ++feasible;
    REQUIRE(static_cast<int>(report.interconnections.size()) == report.q + report.beta);
    REQUIRE(certify(report, spec));

    // Rewiring conservation: the witness carries gamma_d interconnections.
    ClassedBipartite plain = build_system_bipartite(spec);
    Matching witness;
    witness.pairs = report.matching_witness;
    CHECK(cross_pair_count(plain, witness) == report.gamma_d);
    CHECK(is_valid_matching(plain, witness));
  }
  CHECK(feasible >= 150);
}
