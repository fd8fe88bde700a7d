#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drd/generators.hpp"
#include "drd/restriction.hpp"
#include "drd/solve.hpp"

namespace drd {

/// Checkable statements about DRD numbers. T1..T12 and C1..C4 are the
/// published bounds and formulas; D1 (gamma_translate <= gamma_ceil) follows
/// from ceil(d/k) <= d - k + 1.
enum class TheoremId { T1, C1, C2, C3, T2, T3, C4, T4, T5, T6, T7, T8, T9, T10, T11, T12, D1 };

inline constexpr std::array<TheoremId, 17> kAllTheorems{
    TheoremId::T1, TheoremId::C1, TheoremId::C2, TheoremId::C3, TheoremId::T2, TheoremId::T3,
    TheoremId::C4, TheoremId::T4, TheoremId::T5, TheoremId::T6, TheoremId::T7, TheoremId::T8,
    TheoremId::T9, TheoremId::T10, TheoremId::T11, TheoremId::T12, TheoremId::D1};

std::string_view to_string(TheoremId id);
TheoremId parse_theorem_id(std::string_view text);
/// Comma separated ids, or `all`.
std::vector<TheoremId> parse_theorem_list(std::string_view text);

enum class Verdict { Pass, Fail, NotApplicable };
std::string_view to_string(Verdict verdict);

struct TheoremReport {
  TheoremId id = TheoremId::T1;
  std::string digest;
  Verdict verdict = Verdict::NotApplicable;
  /// The statement instantiated with the computed quantities.
  std::string claim;
  /// Every quantity on both sides of the claim, ground truths by brute force.
  std::vector<std::pair<std::string, std::int64_t>> values;
  /// Name of the failed hypothesis when NotApplicable.
  std::string unmet;
};

/// Evaluates theorems on one instance, caching brute-force DRD numbers so
/// several theorems share them.
class TheoremChecker {
 public:
  /// Throws Error{TooLarge} above the brute-force limit.
  explicit TheoremChecker(const Instance& inst, SolveOptions options = {});

  TheoremReport check(TheoremId id);
  const std::string& digest() const noexcept { return digest_; }

 private:
  int gamma(const CapacityRule& rule);

  Instance inst_;
  SolveOptions options_;
  std::string digest_;
  std::map<RuleKind, int> gamma_;
};

TheoremReport check_theorem(TheoremId id, const Instance& inst, const SolveOptions& options = {});

struct Tally {
  int pass = 0;
  int fail = 0;
  int not_applicable = 0;

  friend bool operator==(const Tally&, const Tally&) = default;
};

struct Counterexample {
  TheoremReport report;
  std::string instance_text;
};

struct CorpusSummary {
  std::vector<std::pair<TheoremId, Tally>> tallies;  // in requested order
  int instances = 0;
  int skipped = 0;  // above the brute-force limit
  /// Ordered by (instance digest, theorem id).
  std::vector<Counterexample> counterexamples;

  const Tally& tally(TheoremId id) const;
  int failures() const;
};

/// A family plus the restriction modes applied to it. For trial t the graph
/// of a gnp family is drawn with derive_seed(derive_seed(gnp seed, seed), 2t),
/// and a random:<s> mode draws f with derive_seed(derive_seed(s, seed), 2t+1).
struct CorpusSpec {
  FamilySpec family;
  std::vector<FMode> f_modes;
  int trials = 1;
  std::uint64_t seed = 0;
};

std::vector<Instance> build_corpus(const CorpusSpec& spec);

CorpusSummary run_instances(std::span<const TheoremId> ids, std::span<const Instance> corpus,
                            const SolveOptions& options = {});
CorpusSummary run_corpus(std::span<const TheoremId> ids, const CorpusSpec& spec, const SolveOptions& options = {});

/// Instance file preceded by a one-line `# violated ...` record; parses back
/// to the instance.
std::string counterexample_file(const Counterexample& cx);

}  // namespace drd
