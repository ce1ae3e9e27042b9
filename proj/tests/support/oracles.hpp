#pragma once

// Independent reference computations for the test suites. Nothing here
// calls the engine routine it is used to check.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nmir/logic_audit.hpp"
#include "nmir/ordering.hpp"

namespace nmir::oracle {

using Mask = Universe::Mask;

/// rel[U-1][V-1] over all non-empty subsets of an n-term universe.
using SetMatrix = std::vector<std::vector<bool>>;

/// Least set relation containing ({a},{b}) for every base pair and closed
/// under Reflexivity, Monotonicity, Right Union and Transitivity, by naive
/// fixpoint iteration.
SetMatrix four_rule_closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& base);

/// Base pairs of an ordering as universe indices.
std::vector<std::pair<std::size_t, std::size_t>> base_indices(const TermPreorder& order);

/// Violations of one rule found by enumerating every formula tuple of the
/// schema. Same instance shape and ordering contract as audit_rules.
std::vector<RuleInstance> brute_force_rule(const FiniteRelation& rel, Rule rule,
                                           std::size_t loop_bound);

/// Replays an instance against the rule definition: true iff premises hold,
/// side conditions hold, and the conclusion is missing.
bool confirms_violation(const FiniteRelation& rel, Rule rule, const RuleInstance& inst);

/// The 6x6 table of q |~ d over t1, t2, t3, t1&t2, t1&t3, t2&t3, as
/// hand-checked for weights (-.802, -.885, .845). Rows are queries.
const std::vector<std::string>& reference_derivation_rows();

}  // namespace nmir::oracle
