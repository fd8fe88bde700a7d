#include "drd/restriction.hpp"

#include <charconv>

#include "drd/error.hpp"

namespace drd {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

void validate_f(const Graph& g, std::span<const int> f) {
  if (f.size() != static_cast<std::size_t>(g.order())) {
    throw Error(ErrorKind::InadmissibleF, "restriction function has " + std::to_string(f.size()) +
                                              " values for " + std::to_string(g.order()) + " vertices");
  }
  for (Vertex v = 1; v <= g.order(); ++v) {
    const int k = f[static_cast<std::size_t>(v - 1)];
    const int d = g.degree(v);
    if (d == 0 ? k != 1 : (k < 1 || k > d)) {
      throw Error(ErrorKind::InadmissibleF, "k" + std::to_string(v) + "=" + std::to_string(k) +
                                                (d == 0 ? " on an isolated vertex (must be 1)"
                                                        : " outside [1, " + std::to_string(d) + "]"));
    }
  }
}

Instance::Instance(Graph graph, std::vector<int> f) : graph_(std::move(graph)), f_(std::move(f)) {
  validate_f(graph_, f_);
}

std::string to_string(const CapacityRule& rule) {
  switch (rule.kind) {
    case RuleKind::Ceil: return "ceil";
    case RuleKind::Floor: return "floor";
    case RuleKind::Translate: return "translate";
    case RuleKind::Classic: return "classic";
    case RuleKind::KPart: return "kpart:" + std::to_string(rule.k);
  }
  return "?";
}

CapacityRule parse_rule(std::string_view text) {
  if (text == "ceil") return CapacityRule::ceil();
  if (text == "floor") return CapacityRule::floor();
  if (text == "translate") return CapacityRule::translate();
  if (text == "classic") return CapacityRule::classic();
  if (text.starts_with("kpart:")) {
    auto digits = text.substr(6);
    int k = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && end == digits.data() + digits.size() && k >= 1) return CapacityRule::kpart(k);
  }
  throw Error(ErrorKind::InvalidSpec, "unknown rule '" + std::string(text) + "'");
}

int capacity_for(const CapacityRule& rule, int degree, int k) {
  if (degree == 0) return 0;
  switch (rule.kind) {
    case RuleKind::Ceil: return ceil_div(degree, k);
    case RuleKind::Floor: return degree / k;
    case RuleKind::Translate: return degree - k + 1;
    case RuleKind::Classic: return degree;
    case RuleKind::KPart: return ceil_div(degree, rule.k);
  }
  return 0;
}

void check_rule_applicable(const Graph& g, const CapacityRule& rule) {
  if (rule.kind == RuleKind::KPart && (rule.k < 1 || rule.k > g.min_degree())) {
    throw Error(ErrorKind::KPartTooLarge, "kpart:" + std::to_string(rule.k) + " needs 1 <= k <= min degree " +
                                              std::to_string(g.min_degree()));
  }
}

int capacity(const Instance& inst, const CapacityRule& rule, Vertex v) {
  check_rule_applicable(inst.graph(), rule);
  return capacity_for(rule, inst.graph().degree(v), inst.k(v));
}

std::vector<int> capacity_vector(const Instance& inst, const CapacityRule& rule) {
  check_rule_applicable(inst.graph(), rule);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(inst.order()));
  for (Vertex v = 1; v <= inst.order(); ++v) out.push_back(capacity_for(rule, inst.graph().degree(v), inst.k(v)));
  return out;
}

}  // namespace drd
