#include "drd/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <variant>

#include "drd/error.hpp"
#include "drd/instance_io.hpp"
#include "drd/rng.hpp"
#include "parse_util.hpp"

namespace drd {

namespace {

using Values = std::vector<std::pair<std::string, std::int64_t>>;

long ceil_div(long a, long b) { return (a + b - 1) / b; }

std::string kv(const std::string& name, long value) { return name + "=" + std::to_string(value); }

TheoremReport not_applicable(TheoremId id, std::string unmet) {
  TheoremReport r;
  r.id = id;
  r.verdict = Verdict::NotApplicable;
  r.unmet = std::move(unmet);
  return r;
}

TheoremReport evaluated(TheoremId id, bool holds, std::string claim, Values values) {
  TheoremReport r;
  r.id = id;
  r.verdict = holds ? Verdict::Pass : Verdict::Fail;
  r.claim = std::move(claim);
  r.values = std::move(values);
  return r;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_path(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

bool is_cycle(const Graph& g) {
  return g.order() >= 3 && g.min_degree() == 2 && g.max_degree() == 2 && is_connected(g);
}

bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

std::optional<Vertex> star_center(const Graph& g) {
  if (g.order() < 3 || !is_tree(g) || g.max_degree() != g.order() - 1) return std::nullopt;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) == g.order() - 1) return v;
  return std::nullopt;
}

// Spine of a caterpillar in which every spine vertex carries a leaf: the
// non-leaf vertices, which must induce a path of length >= 2. Ordered from
// the endpoint with the smaller index.
struct Spine {
  std::vector<Vertex> order;
  std::vector<int> leaves;
};

std::variant<Spine, std::string> caterpillar_spine(const Graph& g) {
  if (!is_tree(g)) return std::string("caterpillar (tree)");
  std::vector<char> on_spine(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> spine;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) >= 2) {
      on_spine[v - 1] = 1;
      spine.push_back(v);
    }
  if (spine.size() < 2) return std::string("spine of length >= 2");
  auto spine_degree = [&](Vertex v) {
    return std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) { return on_spine[w - 1] != 0; });
  };
  Vertex start = 0;
  for (Vertex v : spine) {
    const auto d = spine_degree(v);
    if (d > 2) return std::string("caterpillar (spine is a path)");
    if (d == 1 && start == 0) start = v;
  }
  Spine out;
  Vertex prev = 0, cur = start;
  while (cur != 0) {
    out.order.push_back(cur);
    int leaves = 0;
    Vertex next = 0;
    for (Vertex w : g.neighbors(cur)) {
      if (!on_spine[w - 1]) ++leaves;
      else if (w != prev) next = w;
    }
    if (leaves == 0) return std::string("l_i > 0 on every spine vertex");
    out.leaves.push_back(leaves);
    prev = cur;
    cur = next;
  }
  return out;
}

// Values of sum over spine positions i = 2 (mod 3) of d_i - ceil(d_i/k_i) + 1,
// one per way of reading g as a member of the C2 class (a spine path with all
// other vertices leaves hanging off positions 2, 5, 8, ...). Empty when g is
// not in the class.
std::set<long> c2_formula_values(const Instance& inst) {
  const Graph& g = inst.graph();
  std::set<long> values;
  if (!is_tree(g)) return values;
  if (g.order() == 1) {
    values.insert(0);
    return values;
  }
  std::vector<Vertex> leaves;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) == 1) leaves.push_back(v);

  for (Vertex a : leaves) {
    // BFS tree from a gives the unique a-b path for every b.
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> queue{a};
    parent[a - 1] = a;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex w : g.neighbors(queue[i]))
        if (parent[w - 1] == 0) {
          parent[w - 1] = queue[i];
          queue.push_back(w);
        }
    for (Vertex b : leaves) {
      if (b == a) continue;
      std::vector<Vertex> path;
      for (Vertex v = b; v != a; v = parent[v - 1]) path.push_back(v);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
      std::vector<int> position(static_cast<std::size_t>(g.order()), 0);
      for (std::size_t i = 0; i < path.size(); ++i) position[path[i] - 1] = static_cast<int>(i) + 1;

      bool member = true;
      for (Vertex v = 1; v <= g.order() && member; ++v) {
        if (position[v - 1] != 0) continue;
        const Vertex host = g.neighbors(v).front();
        member = g.degree(v) == 1 && position[host - 1] % 3 == 2;
      }
      if (!member) continue;
      long value = 0;
      for (std::size_t i = 1; i < path.size(); i += 3) {
        const long d = g.degree(path[i]);
        value += d - ceil_div(d, inst.k(path[i])) + 1;
      }
      values.insert(value);
    }
  }
  return values;
}

// Largest S within `pool` whose members are pairwise at distance >= 3.
VertexSet spread_subset(const Graph& g, const VertexSet& pool) {
  if (pool.size() <= 1) return pool;
  std::vector<Edge> conflicts;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto dist = bfs_distances(g, pool[i]);
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const int d = dist[pool[j] - 1];
      if (d >= 0 && d <= 2) conflicts.emplace_back(static_cast<Vertex>(i) + 1, static_cast<Vertex>(j) + 1);
    }
  }
  const Graph conflict(static_cast<int>(pool.size()), conflicts);
  SolveOptions options;
  options.brute_force_limit = 64;
  VertexSet out;
  for (Vertex idx : maximum_independent_set(conflict, options)) out.push_back(pool[idx - 1]);
  return out;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  static constexpr std::array<std::string_view, 17> names{"T1", "C1", "C2", "C3", "T2",  "T3",  "C4",  "T4", "T5",
                                                          "T6", "T7", "T8", "T9", "T10", "T11", "T12", "D1"};
  return names[static_cast<std::size_t>(id)];
}

TheoremId parse_theorem_id(std::string_view text) {
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == text) return id;
  throw Error(ErrorKind::InvalidSpec, "unknown theorem id '" + std::string(text) + "'");
}

std::vector<TheoremId> parse_theorem_list(std::string_view text) {
  if (text == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
  std::vector<TheoremId> out;
  for (auto token : detail::split(text, ',')) out.push_back(parse_theorem_id(token));
  return out;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

TheoremChecker::TheoremChecker(const Instance& inst, SolveOptions options)
    : inst_(inst), options_(options), digest_(instance_digest(inst)) {
  const int limit = std::min(options_.brute_force_limit, 64);
  if (inst.order() > limit) {
    throw Error(ErrorKind::TooLarge,
                "order " + std::to_string(inst.order()) + " exceeds brute-force limit " + std::to_string(limit));
  }
}

int TheoremChecker::gamma(const CapacityRule& rule) {
  auto it = gamma_.find(rule.kind);
  if (it == gamma_.end()) it = gamma_.emplace(rule.kind, solve_brute(inst_, rule, options_).gamma).first;
  return it->second;
}

TheoremReport TheoremChecker::check(TheoremId id) {
  const Graph& g = inst_.graph();
  const long n = g.order();
  const auto& f = inst_.f();
  auto divides_everywhere = [&](std::span<const Vertex> vs) {
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return g.degree(v) % inst_.k(v) == 0; });
  };
  auto count_vertices = [&](auto pred) {
    long c = 0;
    for (Vertex v = 1; v <= g.order(); ++v)
      if (pred(v)) ++c;
    return c;
  };

  TheoremReport r = [&]() -> TheoremReport {
    switch (id) {
      case TheoremId::T1: {
        const long a = gamma(CapacityRule::classic()), b = gamma(CapacityRule::ceil()),
                   c = gamma(CapacityRule::floor());
        return evaluated(id, a <= b && b <= c,
                         kv("gamma", a) + " <= " + kv("gamma_ceil", b) + " <= " + kv("gamma_floor", c),
                         {{"gamma", a}, {"gamma_ceil", b}, {"gamma_floor", c}});
      }
      case TheoremId::C1: {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        if (!divides_everywhere(all)) return not_applicable(id, "k_i divides d_i for every vertex");
        const long b = gamma(CapacityRule::ceil()), c = gamma(CapacityRule::floor());
        return evaluated(id, b == c, kv("gamma_ceil", b) + " == " + kv("gamma_floor", c),
                         {{"gamma_ceil", b}, {"gamma_floor", c}});
      }
      case TheoremId::C2: {
        const long b = gamma(CapacityRule::ceil()), c = gamma(CapacityRule::floor());
        auto divisible = [&](const VertexSet& s) { return divides_everywhere(s); };
        const bool via_ceil = find_feasible_set(inst_, CapacityRule::ceil(), static_cast<int>(b), divisible, options_).has_value();
        const bool via_floor =
            !via_ceil && find_feasible_set(inst_, CapacityRule::floor(), static_cast<int>(c), divisible, options_).has_value();
        if (!via_ceil && !via_floor) return not_applicable(id, "some gamma_ceil- or gamma_floor-set with k_i | d_i on all members");
        return evaluated(id, b == c, kv("gamma_ceil", b) + " == " + kv("gamma_floor", c),
                         {{"gamma_ceil", b}, {"gamma_floor", c}, {"divisible_set_from_ceil", via_ceil ? 1 : 0}});
      }
      case TheoremId::C3: {
        if (std::any_of(f.begin(), f.end(), [](int k) { return k != 1; })) return not_applicable(id, "k_i = 1 for every vertex");
        const long a = gamma(CapacityRule::classic()), b = gamma(CapacityRule::ceil()),
                   c = gamma(CapacityRule::floor());
        return evaluated(id, a == b && b == c,
                         kv("gamma", a) + " == " + kv("gamma_ceil", b) + " == " + kv("gamma_floor", c),
                         {{"gamma", a}, {"gamma_ceil", b}, {"gamma_floor", c}});
      }
      case TheoremId::T2: {
        const long k_min = *std::min_element(f.begin(), f.end());
        const long lower = ceil_div(n, 1 + ceil_div(g.max_degree(), k_min));
        long max_cap = 0;
        for (Vertex v = 1; v <= n; ++v) max_cap = std::max<long>(max_cap, capacity_for(CapacityRule::ceil(), g.degree(v), inst_.k(v)));
        const long upper = n - max_cap;
        const long b = gamma(CapacityRule::ceil());
        return evaluated(id, lower <= b && b <= upper,
                         kv("lower", lower) + " <= " + kv("gamma_ceil", b) + " <= " + kv("upper", upper),
                         {{"n", n}, {"max_degree", g.max_degree()}, {"k_min", k_min}, {"lower", lower},
                          {"gamma_ceil", b}, {"upper", upper}});
      }
      case TheoremId::T3: {
        if (g.min_degree() == 0) return not_applicable(id, "isolate-free");
        const long beta = edge_cover_number(g);
        const long b = gamma(CapacityRule::ceil());
        return evaluated(id, b <= beta, kv("gamma_ceil", b) + " <= " + kv("edge_cover_number", beta),
                         {{"gamma_ceil", b}, {"edge_cover_number", beta}});
      }
      case TheoremId::C4: {
        if (g.min_degree() == 0) return not_applicable(id, "isolate-free");
        if (!is_bipartite(g)) return not_applicable(id, "bipartite");
        const long alpha = independence_number(g, options_);
        const long b = gamma(CapacityRule::ceil());
        return evaluated(id, b <= alpha, kv("gamma_ceil", b) + " <= " + kv("independence_number", alpha),
                         {{"gamma_ceil", b}, {"independence_number", alpha}});
      }
      case TheoremId::T4:
      case TheoremId::T5:
      case TheoremId::T6: {
        if (!is_complete(g)) return not_applicable(id, "complete graph");
        const long threshold = ceil_div(n - 1, 2);
        const long restricted =
            id == TheoremId::T5 ? count_vertices([&](Vertex v) { return inst_.k(v) > threshold; })
                                : count_vertices([&](Vertex v) { return inst_.k(v) == g.degree(v); });
        const long allowed = 2 * n / 3;
        if (restricted > allowed) {
          return not_applicable(id, id == TheoremId::T5 ? "at most floor(2n/3) vertices with k_i > ceil((n-1)/2)"
                                                        : "at most floor(2n/3) vertices with k_i = d_i");
        }
        const CapacityRule rule = id == TheoremId::T4   ? CapacityRule::ceil()
                                  : id == TheoremId::T5 ? CapacityRule::floor()
                                                        : CapacityRule::translate();
        const std::string name = "gamma_" + to_string(rule);
        const long gam = gamma(rule);
        const long bound = ceil_div(n, 3);
        return evaluated(id, gam <= bound, kv(name, gam) + " <= " + kv("ceil(n/3)", bound),
                         {{"n", n}, {"restricted_vertices", restricted}, {name, gam}, {"bound", bound}});
      }
      case TheoremId::T7: {
        auto spine = caterpillar_spine(g);
        if (auto* unmet = std::get_if<std::string>(&spine)) return not_applicable(id, *unmet);
        const auto& s = std::get<Spine>(spine);
        const std::size_t len = s.order.size();
        long formula = static_cast<long>(len);
        for (std::size_t i = 0; i < len; ++i) {
          const long k = inst_.k(s.order[i]);
          const long l = s.leaves[i];
          if (k <= 1) return not_applicable(id, "k_i > 1 on every spine vertex");
          if (l == 1 && k != 3) return not_applicable(id, "k_i = 3 where l_i = 1");
          const bool end = i == 0 || i + 1 == len;
          formula += l - ceil_div(l + (end ? 1 : 2), k);
        }
        const long b = gamma(CapacityRule::ceil());
        return evaluated(id, b == formula, kv("gamma_ceil", b) + " == " + kv("formula", formula),
                         {{"spine_length", static_cast<long>(len)}, {"gamma_ceil", b}, {"formula", formula}});
      }
      case TheoremId::T8: {
        const auto center = star_center(g);
        if (!center) return not_applicable(id, "star K_1,n with n >= 2");
        if (inst_.k(*center) <= 1) return not_applicable(id, "central vertex has k > 1");
        const long leaves = n - 1;
        const long bound = leaves / 2 + 1;
        const long b = gamma(CapacityRule::ceil());
        return evaluated(id, b >= bound, kv("gamma_ceil", b) + " >= " + kv("floor(n/2)+1", bound),
                         {{"leaves", leaves}, {"center_k", inst_.k(*center)}, {"gamma_ceil", b}, {"bound", bound}});
      }
      case TheoremId::T9: {
        const auto values = c2_formula_values(inst_);
        if (values.empty()) return not_applicable(id, "member of the C2 caterpillar class");
        const long b = gamma(CapacityRule::ceil());
        const long lo = *values.begin(), hi = *values.rbegin();
        const bool holds = lo == b && hi == b;
        std::string claim = kv("gamma_ceil", b) + " == " + kv("formula", lo);
        if (lo != hi) claim += " (other spine readings give up to " + std::to_string(hi) + ")";
        return evaluated(id, holds, claim,
                         {{"gamma_ceil", b}, {"formula_min", lo}, {"formula_max", hi},
                          {"spine_readings", static_cast<long>(values.size())}});
      }
      case TheoremId::T10:
      case TheoremId::T11: {
        const bool shape = id == TheoremId::T10 ? is_path(g) : is_cycle(g);
        if (!shape) return not_applicable(id, id == TheoremId::T10 ? "path" : "cycle");
        const long lower = ceil_div(n, 3), upper = ceil_div(n, 2);
        const long b = gamma(CapacityRule::ceil());
        return evaluated(id, lower <= b && b <= upper,
                         kv("ceil(n/3)", lower) + " <= " + kv("gamma_ceil", b) + " <= " + kv("ceil(n/2)", upper),
                         {{"n", n}, {"lower", lower}, {"gamma_ceil", b}, {"upper", upper}});
      }
      case TheoremId::T12: {
        if (!is_cycle(g)) return not_applicable(id, "cycle");
        VertexSet s1;
        for (Vertex v = 1; v <= n; ++v)
          if (inst_.k(v) == 1) s1.push_back(v);
        const auto radius = restricted_radius(g, s1);
        const VertexSet spread = radius && *radius < 3 ? spread_subset(g, s1) : s1;
        const long bound = n - 2 * static_cast<long>(spread.size());
        const long b = gamma(CapacityRule::ceil());
        Values values{{"n", n}, {"s1_size", static_cast<long>(s1.size())}};
        if (radius) values.emplace_back("s1_radius", *radius);
        values.insert(values.end(), {{"s_size", static_cast<long>(spread.size())}, {"gamma_ceil", b}, {"bound", bound}});
        return evaluated(id, b <= bound,
                         kv("gamma_ceil", b) + " <= n-2|S| = " + std::to_string(bound) + " (rad_S1=" +
                             (radius ? std::to_string(*radius) : std::string("inf")) + ")",
                         std::move(values));
      }
      case TheoremId::D1: {
        const long t = gamma(CapacityRule::translate()), b = gamma(CapacityRule::ceil());
        return evaluated(id, t <= b, kv("gamma_translate", t) + " <= " + kv("gamma_ceil", b),
                         {{"gamma_translate", t}, {"gamma_ceil", b}});
      }
    }
    throw Error(ErrorKind::InvalidSpec, "unhandled theorem id");
  }();
  r.digest = digest_;
  return r;
}

TheoremReport check_theorem(TheoremId id, const Instance& inst, const SolveOptions& options) {
  return TheoremChecker(inst, options).check(id);
}

const Tally& CorpusSummary::tally(TheoremId id) const {
  for (const auto& [tid, t] : tallies)
    if (tid == id) return t;
  throw Error(ErrorKind::InvalidSpec, "theorem " + std::string(to_string(id)) + " not in summary");
}

int CorpusSummary::failures() const {
  int total = 0;
  for (const auto& [id, t] : tallies) total += t.fail;
  return total;
}

std::vector<Instance> build_corpus(const CorpusSpec& spec) {
  std::vector<Instance> out;
  std::optional<Graph> fixed;
  if (!std::holds_alternative<GnpSpec>(spec.family)) fixed = generate(spec.family).graph;
  for (int t = 0; t < spec.trials; ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    Graph g = fixed ? *fixed : [&] {
      const auto& gnp = std::get<GnpSpec>(spec.family);
      return generate_gnp(gnp.n, gnp.p, derive_seed(derive_seed(gnp.seed, spec.seed), 2 * trial));
    }();
    for (const FMode& mode : spec.f_modes) {
      FMode effective = mode;
      if (const auto* r = std::get_if<UniformRandom>(&mode)) {
        effective = UniformRandom{derive_seed(derive_seed(r->seed, spec.seed), 2 * trial + 1)};
      }
      out.emplace_back(g, generate_f(g, effective));
    }
  }
  return out;
}

CorpusSummary run_instances(std::span<const TheoremId> ids, std::span<const Instance> corpus,
                            const SolveOptions& options) {
  CorpusSummary summary;
  for (TheoremId id : ids) summary.tallies.emplace_back(id, Tally{});
  const int limit = std::min(options.brute_force_limit, 64);
  for (const Instance& inst : corpus) {
    if (inst.order() > limit) {
      ++summary.skipped;
      continue;
    }
    ++summary.instances;
    TheoremChecker checker(inst, options);
    for (auto& [id, tally] : summary.tallies) {
      TheoremReport report = checker.check(id);
      switch (report.verdict) {
        case Verdict::Pass: ++tally.pass; break;
        case Verdict::NotApplicable: ++tally.not_applicable; break;
        case Verdict::Fail:
          ++tally.fail;
          summary.counterexamples.push_back({std::move(report), serialize_instance(inst)});
          break;
      }
    }
  }
  std::stable_sort(summary.counterexamples.begin(), summary.counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) {
                     return std::tie(a.report.digest, a.report.id) < std::tie(b.report.digest, b.report.id);
                   });
  return summary;
}

CorpusSummary run_corpus(std::span<const TheoremId> ids, const CorpusSpec& spec, const SolveOptions& options) {
  const auto corpus = build_corpus(spec);
  return run_instances(ids, corpus, options);
}

std::string counterexample_file(const Counterexample& cx) {
  return "# violated " + std::string(to_string(cx.report.id)) + ": " + cx.report.claim + "\n" + cx.instance_text;
}

}  // namespace drd
