#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drd/graph.hpp"

namespace drd {

/// A graph together with its restriction function: k(v) for every vertex,
/// with 1 <= k(v) <= deg(v) on non-isolated vertices and k(v) = 1 on isolates.
class Instance {
 public:
  /// Throws Error{InadmissibleF} when f has the wrong length or leaves the
  /// admissible window.
  Instance(Graph graph, std::vector<int> f);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<int>& f() const noexcept { return f_; }
  int k(Vertex v) const { return f_[static_cast<std::size_t>(v - 1)]; }
  int order() const noexcept { return graph_.order(); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Graph graph_;
  std::vector<int> f_;
};

/// Throws Error{InadmissibleF} unless `f` is admissible for `g`.
void validate_f(const Graph& g, std::span<const int> f);

enum class RuleKind { Ceil, Floor, Translate, Classic, KPart };

/// How a dominator's degree and restriction value turn into the number of
/// outside vertices it may be assigned.
struct CapacityRule {
  RuleKind kind = RuleKind::Ceil;
  int k = 0;  // only meaningful for KPart

  static constexpr CapacityRule ceil() { return {RuleKind::Ceil, 0}; }
  static constexpr CapacityRule floor() { return {RuleKind::Floor, 0}; }
  static constexpr CapacityRule translate() { return {RuleKind::Translate, 0}; }
  static constexpr CapacityRule classic() { return {RuleKind::Classic, 0}; }
  static constexpr CapacityRule kpart(int k) { return {RuleKind::KPart, k}; }

  friend bool operator==(const CapacityRule&, const CapacityRule&) = default;
};

/// `ceil | floor | translate | classic | kpart:<k>`
std::string to_string(const CapacityRule& rule);
CapacityRule parse_rule(std::string_view text);

/// Capacity of a vertex of the given degree and restriction value, without
/// reference to a graph. Degree 0 always yields 0.
int capacity_for(const CapacityRule& rule, int degree, int k);

/// Throws Error{KPartTooLarge} for KPart(k) with k > min degree.
int capacity(const Instance& inst, const CapacityRule& rule, Vertex v);
std::vector<int> capacity_vector(const Instance& inst, const CapacityRule& rule);

/// Throws Error{KPartTooLarge} if `rule` cannot be applied to `g`.
void check_rule_applicable(const Graph& g, const CapacityRule& rule);

}  // namespace drd
