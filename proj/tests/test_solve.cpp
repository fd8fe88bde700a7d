#include <doctest.h>

#include "drd/certify.hpp"
#include "drd/error.hpp"
#include "drd/generators.hpp"
#include "drd/solve.hpp"
#include "oracles.hpp"

using namespace drd;

namespace {

const CapacityRule kRules[] = {CapacityRule::ceil(), CapacityRule::floor(), CapacityRule::translate(),
                               CapacityRule::classic()};

Instance family(const char* spec, const FMode& mode) {
  const auto g = generate(parse_family_spec(spec)).graph;
  return Instance(g, generate_f(g, mode));
}

}  // namespace

TEST_CASE("seven-vertex sample minimum sizes") {
  const auto inst = oracle::sample7();
  CHECK(solve_brute(inst, CapacityRule::ceil()).gamma == 3);
  CHECK(solve_brute(inst, CapacityRule::floor()).gamma == 3);
  CHECK(solve_brute(inst, CapacityRule::translate()).gamma == 2);
  CHECK(solve_brute(inst, CapacityRule::classic()).gamma == 2);

  const auto variant = oracle::sample7({2, 2, 1, 2, 2, 1, 1});
  const auto r = solve_brute(variant, CapacityRule::ceil());
  CHECK(r.gamma == 2);
  CHECK(r.witness.set == VertexSet{3, 4});
  CHECK(r.method == Method::BruteForce);
  CHECK(certificate_valid(variant, r.witness));
}

TEST_CASE("star with all-degree f needs four dominators") {
  const auto star = family("star:4", AllDegrees{});
  CHECK(solve_brute(star, CapacityRule::ceil()).gamma == 4);
  CHECK(solve_bnb(star, CapacityRule::ceil()).gamma == 4);
}

TEST_CASE("brute witness is the lexicographically least minimum set") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = oracle::random_instance(rng, 1, 9, 0.35);
    for (const auto& rule : kRules) {
      const auto [gamma, least] = oracle::gamma(inst, rule);
      const auto r = solve_brute(inst, rule);
      CHECK(r.gamma == gamma);
      CHECK(r.witness.set == least);
      CHECK(certificate_valid(inst, r.witness));
    }
  }
}

TEST_CASE("brute force limit") {
  const auto big = family("path:21", AllOnes{});
  try {
    solve_brute(big, CapacityRule::ceil());
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  SolveOptions wide;
  wide.brute_force_limit = 21;
  CHECK(solve_brute(big, CapacityRule::ceil(), wide).gamma == 7);
}

TEST_CASE("branch and bound examples") {
  CHECK(solve_bnb(oracle::sample7(), CapacityRule::ceil()).gamma == 3);
  const auto p9 = family("path:9", AllOnes{});
  const auto r = solve_bnb(p9, CapacityRule::ceil());
  CHECK(r.gamma == 3);
  CHECK(r.method == Method::BranchAndBound);
  CHECK(certificate_valid(p9, r.witness));

  const auto gnp = family("gnp:12,0.3,7", UniformRandom{11});
  for (const auto& rule : kRules) CHECK(solve_bnb(gnp, rule).gamma == solve_brute(gnp, rule).gamma);

  // Larger than the brute-force limit.
  const auto p40 = family("path:40", AllOnes{});
  CHECK(solve_bnb(p40, CapacityRule::ceil()).gamma == 14);
}

TEST_CASE("property: branch and bound equals brute force") {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 120; ++trial) {
    const auto inst = oracle::random_instance(rng, 1, 12, rng.bernoulli(0.5) ? 0.25 : 0.5);
    for (const auto& rule : kRules) {
      const auto b = solve_bnb(inst, rule);
      CHECK(b.gamma == solve_brute(inst, rule).gamma);
      CHECK(static_cast<int>(b.witness.set.size()) == b.gamma);
      CHECK(certificate_valid(inst, b.witness));
    }
    const int delta = inst.graph().min_degree();
    if (delta >= 1) {
      const auto rule = CapacityRule::kpart(static_cast<int>(rng.uniform_int(1, delta)));
      CHECK(solve_bnb(inst, rule).gamma == solve_brute(inst, rule).gamma);
    }
  }
}

TEST_CASE("greedy upper bound") {
  const auto star = family("star:4", AllOnes{});
  CHECK(greedy_upper_bound(star, CapacityRule::ceil()) == VertexSet{1});

  const auto sample = oracle::sample7();
  const auto g = greedy_upper_bound(sample, CapacityRule::ceil());
  CHECK(coverage_feasible(sample, CapacityRule::ceil(), g).feasible);
  CHECK(g.size() >= 3);
  CHECK(g.size() <= 7);

  SplitMix64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = oracle::random_instance(rng, 1, 12, 0.3);
    for (const auto& rule : kRules) {
      const auto set = greedy_upper_bound(inst, rule);
      CHECK(coverage_feasible(inst, rule, set).feasible);
    }
  }
}

TEST_CASE("lower bound examples and soundness") {
  const auto c9 = generate(CycleSpec{9}).graph;
  const Instance cyc(c9, {2, 2, 1, 2, 2, 1, 2, 2, 1});
  CHECK(lower_bound(cyc, CapacityRule::ceil()) == 3);
  CHECK(solve_brute(cyc, CapacityRule::ceil()).gamma == 3);

  const auto k6 = generate(CompleteSpec{6}).graph;
  for (int k : {3, 4}) {
    const Instance inst(k6, std::vector<int>(6, k));
    CHECK(lower_bound(inst, CapacityRule::ceil()) == 2);
    CHECK(solve_brute(inst, CapacityRule::ceil()).gamma == 2);
  }
  CHECK(lower_bound(Instance(Graph(1, {}), {1}), CapacityRule::ceil()) == 1);

  SplitMix64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = oracle::random_instance(rng, 1, 10, 0.4);
    for (const auto& rule : kRules) CHECK(lower_bound(inst, rule) <= solve_brute(inst, rule).gamma);
  }
}

TEST_CASE("find_feasible_set honours the filter") {
  const auto sample = oracle::sample7();
  const auto any = find_feasible_set(sample, CapacityRule::ceil(), 3, [](const VertexSet&) { return true; });
  REQUIRE(any.has_value());
  CHECK(*any == solve_brute(sample, CapacityRule::ceil()).witness.set);
  const auto none = find_feasible_set(sample, CapacityRule::ceil(), 2, [](const VertexSet&) { return true; });
  CHECK_FALSE(none.has_value());
  const auto no_four = find_feasible_set(sample, CapacityRule::ceil(), 3, [](const VertexSet& s) {
    return std::find(s.begin(), s.end(), 4) == s.end();
  });
  if (no_four) {
    CHECK(std::find(no_four->begin(), no_four->end(), 4) == no_four->end());
    CHECK(coverage_feasible(sample, CapacityRule::ceil(), *no_four).feasible);
  }
}

TEST_CASE("matching, edge cover, independence") {
  const auto p4 = generate(PathSpec{4}).graph;
  const auto k3 = generate(CompleteSpec{3}).graph;
  const auto c5 = generate(CycleSpec{5}).graph;
  const auto star = generate(StarSpec{4}).graph;
  const auto k4 = generate(CompleteSpec{4}).graph;

  CHECK(max_matching(p4).size == 2);
  CHECK(max_matching(k3).size == 1);
  CHECK(edge_cover_number(star) == 4);
  CHECK(edge_cover_number(p4) == 2);
  CHECK(edge_cover_number(c5) == 3);
  CHECK(oracle::edge_cover(c5) == 3);
  CHECK(independence_number(c5) == 2);
  CHECK(independence_number(star) == 4);
  CHECK(independence_number(k4) == 1);
  CHECK_THROWS_AS(edge_cover_number(Graph(2, {})), Error);

  const auto inv = graph_invariants(Graph(3, std::vector<Edge>{{1, 2}}));
  CHECK(inv.mu == 1);
  CHECK_FALSE(inv.beta_prime.has_value());
  CHECK(inv.alpha == 2);
}

TEST_CASE("property: matching and independence against oracles") {
  SplitMix64 rng(55);
  int checked = 0;
  while (checked < 150) {
    const auto inst = oracle::random_instance(rng, 2, 12, 0.3);
    const auto& g = inst.graph();
    if (g.size() > 16) continue;
    const auto m = max_matching(g);
    CHECK(m.size == oracle::matching_number(g));
    CHECK(static_cast<int>(m.edges.size()) == m.size);
    std::vector<char> used(g.order() + 1, 0);
    for (auto [u, v] : m.edges) {
      CHECK(g.adjacent(u, v));
      CHECK_FALSE(used[u]);
      CHECK_FALSE(used[v]);
      used[u] = used[v] = 1;
    }
    if (isolates(g).empty()) CHECK(edge_cover_number(g) == oracle::edge_cover(g));
    const auto mis = maximum_independent_set(g);
    CHECK(static_cast<int>(mis.size()) == oracle::independence(g));
    for (Vertex u : mis)
      for (Vertex v : mis) CHECK_FALSE(g.adjacent(u, v));
    ++checked;
  }
}

TEST_CASE("method names") {
  CHECK(to_string(Method::BruteForce) == "brute_force");
  CHECK(to_string(Method::BranchAndBound) == "branch_and_bound");
}
