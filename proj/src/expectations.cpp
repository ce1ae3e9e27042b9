#include "nmir/expectations.hpp"

#include <algorithm>

#include "nmir/error.hpp"

namespace nmir {

using json = nlohmann::ordered_json;

const QueryExpectation* Expectations::find_query(const TermSet& terms) const {
  for (const auto& q : queries)
    if (q.terms == terms) return &q;
  return nullptr;
}

const OrderingExpectation* Expectations::find_ordering(std::string_view kind) const {
  for (const auto& o : orderings)
    if (o.kind == kind) return &o;
  return nullptr;
}

std::vector<Divergence> check_query(const QueryExpectation& expected,
                                    const std::vector<std::string>& answer) {
  auto returned = [&](const std::string& id) {
    return std::find(answer.begin(), answer.end(), id) != answer.end();
  };
  std::vector<Divergence> out;
  for (const auto& id : expected.relevant)
    if (!returned(id)) out.push_back({id, "expected relevant, not returned"});
  for (const auto& id : expected.not_relevant)
    if (returned(id)) out.push_back({id, "expected not relevant, returned by the coverage semantics"});
  return out;
}

std::vector<Divergence> check_ordering(const OrderingExpectation& expected,
                                       const TermPreorder& order) {
  const auto& u = order.universe();
  TermPreorder claimed(u, expected.pairs, OrderKind::preferential);
  std::vector<Divergence> out;
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = 0; b < u.size(); ++b)
      if (a != b && order.precedes(a, b) && !claimed.precedes(a, b))
        out.push_back({u[a] + " < " + u[b], "derived by the engine, absent from the expected pairs"});
  for (const auto& [a, b] : expected.pairs)
    if (!order.precedes(a, b))
      out.push_back({a + " < " + b, "expected, not derived by the engine"});
  return out;
}

namespace {

template <typename T>
T get_field(const json& j, const char* key, const std::string& pointer) {
  if (!j.contains(key)) throw SchemaError(pointer + "/" + key, "missing field");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(pointer + "/" + key, e.what());
  }
}

}  // namespace

void to_json(json& j, const Expectations& e) {
  j = json::object();
  json queries = json::array();
  for (const auto& q : e.queries) {
    json item;
    item["terms"] = std::vector<std::string>(q.terms.begin(), q.terms.end());
    item["relevant"] = q.relevant;
    item["not_relevant"] = q.not_relevant;
    if (!q.source.empty()) item["source"] = q.source;
    queries.push_back(std::move(item));
  }
  json orderings = json::array();
  for (const auto& o : e.orderings) {
    json item;
    item["kind"] = o.kind;
    json pairs = json::array();
    for (const auto& [a, b] : o.pairs) pairs.push_back({a, b});
    item["pairs"] = std::move(pairs);
    if (!o.source.empty()) item["source"] = o.source;
    orderings.push_back(std::move(item));
  }
  j["queries"] = std::move(queries);
  j["orderings"] = std::move(orderings);
}

Expectations expectations_from_json(const json& j, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer, "expected an object");
  Expectations e;
  if (j.contains("queries")) {
    const auto& qs = j.at("queries");
    if (!qs.is_array()) throw SchemaError(pointer + "/queries", "expected an array");
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const std::string p = pointer + "/queries/" + std::to_string(i);
      QueryExpectation q;
      auto terms = get_field<std::vector<std::string>>(qs[i], "terms", p);
      q.terms = TermSet(terms.begin(), terms.end());
      if (q.terms.empty()) throw SchemaError(p + "/terms", "empty query");
      if (qs[i].contains("relevant"))
        q.relevant = get_field<std::vector<std::string>>(qs[i], "relevant", p);
      if (qs[i].contains("not_relevant"))
        q.not_relevant = get_field<std::vector<std::string>>(qs[i], "not_relevant", p);
      if (qs[i].contains("source")) q.source = get_field<std::string>(qs[i], "source", p);
      e.queries.push_back(std::move(q));
    }
  }
  if (j.contains("orderings")) {
    const auto& os = j.at("orderings");
    if (!os.is_array()) throw SchemaError(pointer + "/orderings", "expected an array");
    for (std::size_t i = 0; i < os.size(); ++i) {
      const std::string p = pointer + "/orderings/" + std::to_string(i);
      OrderingExpectation o;
      o.kind = get_field<std::string>(os[i], "kind", p);
      if (o.kind != "positive" && o.kind != "negative" && o.kind != "combined")
        throw SchemaError(p + "/kind", "must be positive, negative or combined");
      auto pairs = get_field<std::vector<std::vector<std::string>>>(os[i], "pairs", p);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pairs[k].size() != 2)
          throw SchemaError(p + "/pairs/" + std::to_string(k), "expected [lower, upper]");
        o.pairs.emplace_back(pairs[k][0], pairs[k][1]);
      }
      if (os[i].contains("source")) o.source = get_field<std::string>(os[i], "source", p);
      e.orderings.push_back(std::move(o));
    }
  }
  return e;
}

void to_json(json& j, const Divergence& d) {
  j = json{{"subject", d.subject}, {"detail", d.detail}};
}

}  // namespace nmir
