#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nmir/logic_audit.hpp"
#include "nmir/ordering.hpp"
#include "nmir/session.hpp"

// Session-level operations shared by the CLI and the HTTP API, so both
// answer from the same code path. Every result carries the session version.

namespace nmir {

enum class OrderingChoice { positive, negative, combined };

std::string_view to_string(OrderingChoice choice);
OrderingChoice parse_ordering_choice(std::string_view text);

TermPreorder build_ordering(const Corpus& corpus, OrderingChoice choice);

/// Session weights if present, else default_weights over the corpus.
WeightTable effective_weights(const Session& session);

/// Non-finite values are written as "+inf" / "-inf".
nlohmann::ordered_json score_value_json(double value);

nlohmann::ordered_json session_json(const Session& session);
nlohmann::ordered_json ordering_json(const Session& session, OrderingChoice choice);
nlohmann::ordered_json query_json(const Session& session, const TermSet& terms);
nlohmann::ordered_json score_json(const Session& session, const TermSet& terms,
                                  std::optional<double> smoothing = std::nullopt,
                                  std::optional<LogBase> log_base = std::nullopt);

/// Sets default to every subset of at most two weighted terms.
std::vector<TermSet> default_table_sets(const WeightTable& weights, std::size_t max_size = 2);
nlohmann::ordered_json eum_table_json(const WeightTable& weights, const std::vector<TermSet>& sets);
nlohmann::ordered_json eum_infer_json(const WeightTable& weights, const TermSet& query,
                                      const TermSet& doc);

struct AuditRequest {
  std::vector<Rule> rules = all_rules();
  AuditOptions options;
};

/// Audits the relation generated by eum_infers over `terms`.
RuleReport audit_eum(const WeightTable& weights, const std::vector<Term>& terms,
                     const AuditRequest& request = {});
nlohmann::ordered_json audit_json(const RuleReport& report);

}  // namespace nmir
