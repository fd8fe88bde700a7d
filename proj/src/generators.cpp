#include "drd/generators.hpp"

#include <array>
#include <charconv>

#include "drd/error.hpp"
#include "drd/restriction.hpp"
#include "drd/rng.hpp"
#include "parse_util.hpp"

namespace drd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); }

Generated with_roles(int n, const std::vector<Edge>& edges, std::vector<Role> roles) {
  return Generated{Graph(n, edges), std::move(roles)};
}

Generated caterpillar(const std::vector<int>& leaves) {
  if (leaves.empty()) invalid("caterpillar needs a spine of length >= 1");
  const int spine = static_cast<int>(leaves.size());
  int n = spine;
  for (int l : leaves) {
    if (l < 0) invalid("caterpillar leaf counts must be >= 0");
    n += l;
  }
  std::vector<Edge> edges;
  std::vector<Role> roles(static_cast<std::size_t>(spine), Role::Spine);
  for (Vertex v = 1; v < spine; ++v) edges.emplace_back(v, v + 1);
  Vertex next = spine + 1;
  for (Vertex v = 1; v <= spine; ++v) {
    for (int j = 0; j < leaves[v - 1]; ++j) {
      edges.emplace_back(v, next++);
      roles.push_back(Role::Leaf);
    }
  }
  return with_roles(n, edges, std::move(roles));
}

}  // namespace

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Spine: return "spine";
    case Role::Leaf: return "leaf";
    case Role::Center: return "center";
    case Role::Plain: return "plain";
  }
  return "?";
}

Graph generate_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidProbability, "p must lie in [0, 1]");
  if (n < 1) invalid("gnp needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Generated generate(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const PathSpec& s) {
            if (s.n < 1) invalid("path needs n >= 1");
            std::vector<Edge> edges;
            for (Vertex v = 1; v < s.n; ++v) edges.emplace_back(v, v + 1);
            return with_roles(s.n, edges, std::vector<Role>(static_cast<std::size_t>(s.n), Role::Spine));
          },
          [](const CycleSpec& s) {
            if (s.n < 3) invalid("cycle needs n >= 3");
            std::vector<Edge> edges;
            for (Vertex v = 1; v < s.n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(1, s.n);
            return with_roles(s.n, edges, std::vector<Role>(static_cast<std::size_t>(s.n), Role::Plain));
          },
          [](const CompleteSpec& s) {
            if (s.n < 1) invalid("complete graph needs n >= 1");
            std::vector<Edge> edges;
            for (Vertex u = 1; u <= s.n; ++u)
              for (Vertex v = u + 1; v <= s.n; ++v) edges.emplace_back(u, v);
            return with_roles(s.n, edges, std::vector<Role>(static_cast<std::size_t>(s.n), Role::Plain));
          },
          [](const StarSpec& s) {
            if (s.leaves < 1) invalid("star needs at least one leaf");
            std::vector<Edge> edges;
            std::vector<Role> roles{Role::Center};
            for (Vertex v = 2; v <= s.leaves + 1; ++v) {
              edges.emplace_back(1, v);
              roles.push_back(Role::Leaf);
            }
            return with_roles(s.leaves + 1, edges, std::move(roles));
          },
          [](const CaterpillarSpec& s) { return caterpillar(s.leaves); },
          [](const C2Spec& s) {
            if (s.spine < 1) invalid("c2 caterpillar needs a spine of length >= 1");
            if (s.leaves < 0) invalid("c2 caterpillar leaf count must be >= 0");
            std::vector<int> leaves(static_cast<std::size_t>(s.spine), 0);
            for (int i = 2; i <= s.spine; i += 3) leaves[static_cast<std::size_t>(i - 1)] = s.leaves;
            return caterpillar(leaves);
          },
          [](const GnpSpec& s) {
            Graph g = generate_gnp(s.n, s.p, s.seed);
            std::vector<Role> roles(static_cast<std::size_t>(s.n), Role::Plain);
            return Generated{std::move(g), std::move(roles)};
          },
      },
      spec);
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) invalid("family spec '" + std::string(text) + "' lacks ':'");
  const auto name = text.substr(0, colon);
  const auto args = text.substr(colon + 1);
  const auto bad = [&]() -> FamilySpec { invalid("malformed family spec '" + std::string(text) + "'"); };

  if (name == "gnp") {
    auto parts = detail::split(args, ',');
    if (parts.size() != 3) return bad();
    auto n = detail::parse_number<int>(parts[0]);
    auto p = detail::parse_number<double>(parts[1]);
    auto seed = detail::parse_number<std::uint64_t>(parts[2]);
    if (!n || !p || !seed) return bad();
    if (!(*p >= 0.0 && *p <= 1.0)) throw Error(ErrorKind::InvalidProbability, "p must lie in [0, 1]");
    return GnpSpec{*n, *p, *seed};
  }
  auto values = detail::parse_int_list(args);
  if (!values) return bad();
  if (name == "caterpillar") return CaterpillarSpec{*values};
  if (name == "c2") {
    if (values->size() != 2) return bad();
    return C2Spec{(*values)[0], (*values)[1]};
  }
  if (values->size() != 1) return bad();
  const int n = values->front();
  if (name == "path") return PathSpec{n};
  if (name == "cycle") return CycleSpec{n};
  if (name == "complete") return CompleteSpec{n};
  if (name == "star") return StarSpec{n};
  return bad();
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const PathSpec& s) { return "path:" + std::to_string(s.n); },
                        [](const CycleSpec& s) { return "cycle:" + std::to_string(s.n); },
                        [](const CompleteSpec& s) { return "complete:" + std::to_string(s.n); },
                        [](const StarSpec& s) { return "star:" + std::to_string(s.leaves); },
                        [](const CaterpillarSpec& s) { return "caterpillar:" + detail::join(s.leaves, ','); },
                        [](const C2Spec& s) { return "c2:" + std::to_string(s.spine) + "," + std::to_string(s.leaves); },
                        [](const GnpSpec& s) {
                          std::array<char, 64> buf{};
                          auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), s.p);
                          return "gnp:" + std::to_string(s.n) + "," + std::string(buf.data(), end) + "," +
                                 std::to_string(s.seed);
                        },
                    },
                    spec);
}

FMode parse_f_mode(std::string_view text) {
  if (text == "ones") return AllOnes{};
  if (text == "degrees") return AllDegrees{};
  if (text.starts_with("random:")) {
    if (auto seed = detail::parse_number<std::uint64_t>(text.substr(7))) return UniformRandom{*seed};
  } else if (text.starts_with("explicit:")) {
    if (auto values = detail::parse_int_list(text.substr(9))) return Explicit{*values};
  }
  invalid("unknown f mode '" + std::string(text) + "'");
}

std::string to_string(const FMode& mode) {
  return std::visit(overloaded{
                        [](const AllOnes&) -> std::string { return "ones"; },
                        [](const AllDegrees&) -> std::string { return "degrees"; },
                        [](const UniformRandom& m) { return "random:" + std::to_string(m.seed); },
                        [](const Explicit& m) { return "explicit:" + detail::join(m.values, ','); },
                    },
                    mode);
}

std::vector<int> generate_f(const Graph& g, const FMode& mode) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> f(n, 1);
  std::visit(overloaded{
                 [&](const AllOnes&) {},
                 [&](const AllDegrees&) {
                   for (Vertex v = 1; v <= g.order(); ++v) f[v - 1] = std::max(1, g.degree(v));
                 },
                 [&](const UniformRandom& m) {
                   SplitMix64 rng(m.seed);
                   for (Vertex v = 1; v <= g.order(); ++v)
                     if (g.degree(v) > 0) f[v - 1] = static_cast<int>(rng.uniform_int(1, g.degree(v)));
                 },
                 [&](const Explicit& m) { f = m.values; },
             },
             mode);
  validate_f(g, f);
  return f;
}

}  // namespace drd
