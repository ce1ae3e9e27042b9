#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nmir/kernels.hpp"
#include "nmir/term_set.hpp"

namespace nmir {

/// Classical consequence in the conjunctive fragment: U ⊢ V iff V ⊆ U.
bool entails(const TermSet& lhs, const TermSet& rhs);

/// Finite consequence relation over the non-empty subsets of a small
/// universe, stored as a dense matrix indexed by subset bitmask.
class FiniteRelation {
 public:
  using Mask = Universe::Mask;
  static constexpr std::size_t max_terms = 12;

  FiniteRelation() = default;
  explicit FiniteRelation(Universe universe);
  FiniteRelation(Universe universe, const std::vector<std::pair<TermSet, TermSet>>& pairs);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t subset_count() const noexcept { return matrix_.size(); }

  bool holds(Mask lhs, Mask rhs) const { return matrix_(lhs - 1, rhs - 1); }
  bool holds(const TermSet& lhs, const TermSet& rhs) const;
  void add(Mask lhs, Mask rhs) { matrix_.set(lhs - 1, rhs - 1); }
  void add(const TermSet& lhs, const TermSet& rhs);

  /// Pairs in ascending (lhs, rhs) mask order.
  std::vector<std::pair<Mask, Mask>> pairs() const;
  std::size_t size() const;

  friend bool operator==(const FiniteRelation&, const FiniteRelation&) = default;

 private:
  Universe universe_;
  BoolMatrix matrix_;
};

using InferenceFn = std::function<bool(const TermSet&, const TermSet&)>;

inline constexpr std::size_t default_generation_bound = 5;

/// All (q, d) over non-empty subsets with infer(q, d). Throws DomainError
/// when the universe exceeds `bound` terms. `infer` must be safe to call
/// concurrently for the parallel path.
FiniteRelation generated_relation(const InferenceFn& infer, const Universe& universe,
                                  std::size_t bound = default_generation_bound,
                                  Execution exec = Execution::parallel);

enum class Rule {
  supraclassicality,
  left_logical_equivalence,
  right_weakening,
  and_rule,
  cut,
  cautious_monotonicity,
  loop,
};

const std::vector<Rule>& all_rules();
std::string_view to_string(Rule rule);
/// Accepts the full names and LLE / RW / CM. Case-insensitive.
Rule parse_rule(std::string_view text);

struct RuleInstance {
  using Mask = Universe::Mask;
  /// Formulas instantiating the schema, in schema order (α, β, γ or α0…αn).
  std::vector<Mask> formulas;
  std::vector<std::pair<Mask, Mask>> premises;
  std::pair<Mask, Mask> conclusion{};

  friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

struct RuleReport {
  Universe universe;
  std::vector<Rule> rules;
  /// Violating instances per rule in lexicographic order of `formulas`,
  /// truncated at the audit limit. Loop reports one instance per (α0, αn),
  /// ordered by that pair: the shortest chain, lexicographically smallest
  /// among those.
  std::map<Rule, std::vector<RuleInstance>> violations;
  std::map<Rule, std::size_t> totals;

  bool satisfied() const;
  std::size_t total() const;
};

struct AuditOptions {
  std::size_t loop_bound = 4;
  std::size_t limit = 256;
  Execution exec = Execution::parallel;
};

RuleReport audit_rules(const FiniteRelation& rel, const std::vector<Rule>& rules,
                       const AuditOptions& options = {});

/// `q1&q2 |~ d1&d2` per line; '#' starts a comment. The universe is
/// `extra_terms`, then any `# universe: a,b,c` directive, then new terms in
/// order of appearance.
/// Throws ParseError.
FiniteRelation parse_relation(std::string_view text, const std::vector<Term>& extra_terms = {});
std::string format_relation(const FiniteRelation& rel);

void to_json(nlohmann::ordered_json& j, const RuleReport& report);

}  // namespace nmir
