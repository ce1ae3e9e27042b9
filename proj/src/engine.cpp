#include "nmir/engine.hpp"

#include <cmath>

#include "nmir/error.hpp"
#include "nmir/retrieval.hpp"

namespace nmir {

using json = nlohmann::ordered_json;

std::string_view to_string(OrderingChoice choice) {
  switch (choice) {
    case OrderingChoice::positive: return "positive";
    case OrderingChoice::negative: return "negative";
    case OrderingChoice::combined: return "combined";
  }
  return "combined";
}

OrderingChoice parse_ordering_choice(std::string_view text) {
  if (text == "positive") return OrderingChoice::positive;
  if (text == "negative") return OrderingChoice::negative;
  if (text == "combined") return OrderingChoice::combined;
  throw DomainError("ordering kind must be positive, negative or combined");
}

TermPreorder build_ordering(const Corpus& corpus, OrderingChoice choice) {
  switch (choice) {
    case OrderingChoice::positive: return positive_order(corpus);
    case OrderingChoice::negative: return negative_order(corpus);
    case OrderingChoice::combined: break;
  }
  return combined_order(positive_order(corpus), negative_order(corpus));
}

WeightTable effective_weights(const Session& session) {
  if (session.weights) return *session.weights;
  return default_weights(session.corpus, session.settings.smoothing);
}

json score_value_json(double value) {
  if (std::isinf(value)) return value > 0 ? "+inf" : "-inf";
  return value;
}

namespace {

std::vector<std::string> ordered_terms(const Universe& u, const TermSet& set) {
  std::vector<std::string> out;
  for (const auto& t : u.terms())
    if (set.count(t)) out.push_back(t);
  return out;
}

}  // namespace

json session_json(const Session& session) { return save_session(session); }

json ordering_json(const Session& session, OrderingChoice choice) {
  const auto order = build_ordering(session.corpus, choice);
  json pairs = json::array();
  for (const auto& [a, b] : order.pairs()) pairs.push_back({a, b});
  json out{{"version", session.version},
           {"kind", std::string(to_string(choice))},
           {"order_kind", std::string(to_string(order.kind()))},
           {"terms", order.universe().terms()},
           {"pairs", std::move(pairs)},
           {"dot", export_dot(order, std::string(to_string(choice)))}};
  if (const auto* expected = session.expectations.find_ordering(to_string(choice)))
    out["divergences"] = check_ordering(*expected, order);
  return out;
}

json query_json(const Session& session, const TermSet& terms) {
  const auto order = build_ordering(session.corpus, OrderingChoice::combined);
  const auto answer = relevant_documents(session.corpus, order, terms);
  json out{{"version", session.version},
           {"terms", ordered_terms(session.corpus.vocabulary(), terms)},
           {"relevant", answer}};
  if (const auto* expected = session.expectations.find_query(terms))
    out["divergences"] = check_query(*expected, answer);
  return out;
}

json score_json(const Session& session, const TermSet& terms, std::optional<double> smoothing,
                std::optional<LogBase> log_base) {
  const double s = smoothing.value_or(session.settings.smoothing);
  const LogBase base = log_base.value_or(session.settings.log_base);
  const auto order = build_ordering(session.corpus, OrderingChoice::combined);
  const auto p = comparability_partition(session.corpus, order, terms);
  const auto score = decision_score(p, s, base);
  json partition{{"d_plus_p", p.d_plus_p.size()},
                 {"d_minus_n", p.d_minus_n.size()},
                 {"d_plus_n", p.d_plus_n.size()},
                 {"d_minus_p", p.d_minus_p.size()},
                 {"undecided", p.undecided},
                 {"total", p.total},
                 {"documents",
                  {{"d_plus_p", p.d_plus_p},
                   {"d_minus_n", p.d_minus_n},
                   {"d_plus_n", p.d_plus_n},
                   {"d_minus_p", p.d_minus_p}}}};
  return json{{"version", session.version},
              {"terms", ordered_terms(session.corpus.vocabulary(), terms)},
              {"value", score_value_json(score.value)},
              {"relevant", score.relevant},
              {"partition", std::move(partition)},
              {"smoothing", s},
              {"log_base", std::string(to_string(base))}};
}

std::vector<TermSet> default_table_sets(const WeightTable& weights, std::size_t max_size) {
  return subsets_by_size(weights.terms(), max_size);
}

json eum_table_json(const WeightTable& weights, const std::vector<TermSet>& sets) {
  const auto table = derivation_table(weights, sets);
  const Universe u(weights.terms());
  json labels = json::array();
  for (const auto& s : table.docs) labels.push_back(u.label(s));
  json rows = json::array();
  for (std::size_t i = 0; i < table.queries.size(); ++i) {
    json cells = json::array();
    for (bool c : table.cells[i]) cells.push_back(c);
    rows.push_back(json{{"query", u.label(table.queries[i])}, {"cells", cells}});
  }
  json ranks = json::object();
  for (const auto& s : table.queries)
    ranks[u.label(s)] = json{{"w", set_weight(weights, s)}, {"r", rank(weights, s)}};
  return json{{"sets", std::move(labels)},
              {"rows", std::move(rows)},
              {"weights", ranks},
              {"csv", derivation_table_csv(table, weights.terms())}};
}

json eum_infer_json(const WeightTable& weights, const TermSet& query, const TermSet& doc) {
  const Universe u(weights.terms());
  const bool infers = eum_infers(weights, query, doc);
  return json{{"query", u.label(query)},
              {"doc", u.label(doc)},
              {"infers", infers},
              {"subset", is_subset(doc, query)},
              {"rank_difference", rank(weights, set_difference(doc, query))},
              {"rank_negated_query", rank(weights, SignedSet{query, true})}};
}

RuleReport audit_eum(const WeightTable& weights, const std::vector<Term>& terms,
                     const AuditRequest& request) {
  for (const auto& t : terms) (void)weights.weight(t);
  const Universe u(terms);
  auto infer = [&](const TermSet& q, const TermSet& d) { return eum_infers(weights, q, d); };
  const auto rel = generated_relation(infer, u, default_generation_bound, request.options.exec);
  return audit_rules(rel, request.rules, request.options);
}

json audit_json(const RuleReport& report) {
  json j = report;
  return j;
}

}  // namespace nmir
