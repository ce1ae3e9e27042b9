#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nmir/kernels.hpp"
#include "nmir/ordering.hpp"
#include "nmir/term_set.hpp"

namespace nmir {

/// Nested axiom systems: priority relation < preferential ordering <
/// rational ordering.
enum class AxiomSystem { priority, preferential, rational };

std::string_view to_string(AxiomSystem system);
AxiomSystem parse_axiom_system(std::string_view text);

/// A counterexample is the tuple of formulas instantiating the axiom
/// schema, in schema order (t1, t2, t3 or U, V, W).
using AxiomWitness = std::vector<TermSet>;

struct AxiomReport {
  /// Axioms checked, in schema order.
  std::vector<std::string> axioms;
  /// Per-axiom counterexamples, canonically ordered, truncated at the audit limit.
  std::map<std::string, std::vector<AxiomWitness>> counterexamples;
  /// Per-axiom number of violating instances before truncation.
  std::map<std::string, std::size_t> totals;

  bool satisfied() const;
  bool satisfied(const std::string& axiom) const;
};

/// Explicit term-level relation; nothing is implied (no reflexive pairs, no closure).
struct TermRelationSample {
  Universe universe;
  std::vector<TermPair> pairs;
};

/// Explicit relation between non-empty term-sets over a small universe.
/// Stored densely, indexed by subset bitmask.
class SetRelationSample {
 public:
  static constexpr std::size_t max_terms = 12;

  SetRelationSample() = default;
  explicit SetRelationSample(Universe universe);
  SetRelationSample(Universe universe, const std::vector<std::pair<TermSet, TermSet>>& pairs);

  /// All pairs (U, V) of non-empty subsets with set_precedes(order, U, V).
  static SetRelationSample lift(const TermPreorder& order, Execution exec = Execution::parallel);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t subset_count() const noexcept { return matrix_.size(); }
  bool holds(Universe::Mask lhs, Universe::Mask rhs) const { return matrix_(lhs - 1, rhs - 1); }
  void add(Universe::Mask lhs, Universe::Mask rhs) { matrix_.set(lhs - 1, rhs - 1); }
  std::size_t pair_count() const;

 private:
  Universe universe_;
  BoolMatrix matrix_;
};

inline constexpr std::size_t default_audit_limit = 256;

/// Term-form audit of an ordering through its closure. Monotonicity and
/// Logical Equivalence read entailment between terms as term-set superset;
/// Right Conjunction uses set_precedes.
AxiomReport audit_ordering(const TermPreorder& order, AxiomSystem system,
                           std::size_t limit = default_audit_limit);

/// Term-form audit of a raw relation, taking its pairs literally.
AxiomReport audit_ordering(const TermRelationSample& sample, AxiomSystem system,
                           std::size_t limit = default_audit_limit);

/// Set-form audit (Reflexivity, Monotonicity, Right Union, Transitivity,
/// Connectivity) over every non-empty subset of the sample's universe.
AxiomReport audit_ordering(const SetRelationSample& sample, AxiomSystem system,
                           Execution exec = Execution::parallel,
                           std::size_t limit = default_audit_limit);

}  // namespace nmir
