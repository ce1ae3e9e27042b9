#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nmir/ordering.hpp"
#include "nmir/term_set.hpp"

namespace nmir {

// Reference answers attached to a fixture (hand-worked examples). The engine
// never changes its answer to match them; it reports where they disagree.

struct QueryExpectation {
  TermSet terms;
  std::vector<std::string> relevant;
  std::vector<std::string> not_relevant;
  std::string source;
};

/// Pairs a reference lists for an ordering ("positive", "negative" or
/// "combined"); its transitive closure is taken as the full claim.
struct OrderingExpectation {
  std::string kind;
  std::vector<TermPair> pairs;
  std::string source;
};

struct Expectations {
  std::vector<QueryExpectation> queries;
  std::vector<OrderingExpectation> orderings;

  bool empty() const { return queries.empty() && orderings.empty(); }
  const QueryExpectation* find_query(const TermSet& terms) const;
  const OrderingExpectation* find_ordering(std::string_view kind) const;
};

struct Divergence {
  std::string subject;  // document id or "a < b"
  std::string detail;

  friend bool operator==(const Divergence&, const Divergence&) = default;
};

std::vector<Divergence> check_query(const QueryExpectation& expected,
                                    const std::vector<std::string>& answer);

/// Strict engine pairs outside the closure of the expected pairs, then
/// expected pairs the engine does not derive.
std::vector<Divergence> check_ordering(const OrderingExpectation& expected,
                                       const TermPreorder& order);

void to_json(nlohmann::ordered_json& j, const Expectations& e);
/// Throws SchemaError with a JSON pointer.
Expectations expectations_from_json(const nlohmann::ordered_json& j,
                                    const std::string& pointer = "");

void to_json(nlohmann::ordered_json& j, const Divergence& d);

}  // namespace nmir
