#include "nmir/eum.hpp"

#include <algorithm>
#include <cmath>

#include "nmir/error.hpp"

namespace nmir {

using json = nlohmann::ordered_json;

ContingencyMatrix contingency(const Corpus& corpus, const Term& term) {
  if (!corpus.vocabulary().contains(term)) throw DomainError("unknown term '" + term + "'");
  ContingencyMatrix m;
  for (const auto& d : corpus.documents()) {
    if (d.label == Label::unlabeled) continue;
    const bool rel = d.label == Label::positive;
    const bool has = d.terms.count(term) != 0;
    if (rel && has) ++m.rel_with_t;
    else if (!rel && has) ++m.notrel_with_t;
    else if (rel) ++m.rel_without_t;
    else ++m.notrel_without_t;
  }
  return m;
}

double default_weight(const ContingencyMatrix& m, double smoothing) {
  if (!(smoothing >= 0.0) || !std::isfinite(smoothing))
    throw DomainError("smoothing must be a finite non-negative number");
  const double with = static_cast<double>(m.rel_with_t + m.notrel_with_t) + 2 * smoothing;
  const double without = static_cast<double>(m.rel_without_t + m.notrel_without_t) + 2 * smoothing;
  if (with == 0.0 || without == 0.0)
    throw DomainError("weight undefined: empty conditional without smoothing");
  return (static_cast<double>(m.rel_with_t) + smoothing) / with -
         (static_cast<double>(m.rel_without_t) + smoothing) / without;
}

WeightTable::WeightTable(std::vector<std::pair<Term, double>> weights)
    : entries_(std::move(weights)) {
  for (const auto& [t, w] : entries_) {
    if (!is_valid_term(t)) throw DomainError("invalid term token '" + t + "'");
    if (!(w >= -1.0 && w <= 1.0))
      throw DomainError("weight of '" + t + "' outside [-1, 1]");
    if (!index_.emplace(t, w).second) throw DomainError("duplicate weight for '" + t + "'");
  }
}

std::vector<Term> WeightTable::terms() const {
  std::vector<Term> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

double WeightTable::weight(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw DomainError("no weight for term '" + t + "'");
  return it->second;
}

WeightTable default_weights(const Corpus& corpus, double smoothing) {
  std::vector<std::pair<Term, double>> out;
  for (const auto& t : corpus.vocabulary().terms())
    out.emplace_back(t, default_weight(contingency(corpus, t), smoothing));
  return WeightTable(std::move(out));
}

double set_weight(const WeightTable& wt, const TermSet& set) {
  double w = 1.0;
  for (const auto& t : set) w = std::min(w, wt.weight(t));
  return w;
}

double neg_weight(const WeightTable& wt, const TermSet& set) { return -set_weight(wt, set); }

double rank(const WeightTable& wt, const TermSet& set) {
  return std::max(set_weight(wt, set), 0.0);
}

double rank(const WeightTable& wt, const SignedSet& set) {
  return std::max(set.negated ? neg_weight(wt, set.terms) : set_weight(wt, set.terms), 0.0);
}

bool rational_precedes(const WeightTable& wt, const SignedSet& x, const SignedSet& y) {
  return rank(wt, x) <= rank(wt, y);
}

bool eum_infers(const WeightTable& wt, const TermSet& query, const TermSet& doc) {
  if (query.empty() || doc.empty()) throw DomainError("inference needs non-empty term-sets");
  for (const auto& t : query) (void)wt.weight(t);
  for (const auto& t : doc) (void)wt.weight(t);
  if (is_subset(doc, query)) return true;
  // "not ≤" on the total preorder of ranks.
  return rank(wt, set_difference(doc, query)) > rank(wt, SignedSet{query, true});
}

DerivationTable derivation_table(const WeightTable& wt, const std::vector<TermSet>& sets) {
  if (sets.empty()) throw DomainError("derivation table needs at least one set");
  DerivationTable t;
  t.queries = sets;
  t.docs = sets;
  t.cells.assign(sets.size(), std::vector<bool>(sets.size(), false));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) t.cells[i][j] = eum_infers(wt, sets[i], sets[j]);
  return t;
}

std::vector<TermSet> subsets_by_size(const std::vector<Term>& terms, std::size_t max_size) {
  std::vector<TermSet> out;
  const std::size_t n = terms.size();
  std::vector<std::size_t> pick;
  // Lexicographic combinations per size.
  for (std::size_t k = 1; k <= std::min(max_size, n); ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      TermSet s;
      for (auto i : pick) s.insert(terms[i]);
      out.push_back(std::move(s));
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::string derivation_table_csv(const DerivationTable& table, const std::vector<Term>& order) {
  Universe u(order);
  std::string out = "q |~ d";
  for (const auto& d : table.docs) out += ',' + u.label(d);
  out += '\n';
  for (std::size_t i = 0; i < table.queries.size(); ++i) {
    out += u.label(table.queries[i]);
    for (std::size_t j = 0; j < table.docs.size(); ++j) out += table.cells[i][j] ? ",Y" : ",N";
    out += '\n';
  }
  return out;
}

void to_json(json& j, const WeightTable& wt) {
  json weights = json::object();
  for (const auto& [t, w] : wt.entries()) weights[t] = w;
  j = json{{"weights", std::move(weights)}};
}

WeightTable weights_from_json(const json& j, const std::string& pointer) {
  const json* obj = &j;
  std::string base = pointer;
  if (j.is_object() && j.contains("weights")) {
    obj = &j.at("weights");
    base += "/weights";
  }
  if (!obj->is_object()) throw SchemaError(base, "expected an object of term weights");
  std::vector<std::pair<Term, double>> entries;
  for (const auto& [key, value] : obj->items()) {
    const std::string p = base + "/" + key;
    if (!value.is_number()) throw SchemaError(p, "weight must be a number");
    const double w = value.get<double>();
    if (!(w >= -1.0 && w <= 1.0)) throw SchemaError(p, "weight outside [-1, 1]");
    if (!is_valid_term(key)) throw SchemaError(p, "invalid term token");
    entries.emplace_back(key, w);
  }
  return WeightTable(std::move(entries));
}

void to_json(json& j, const ContingencyMatrix& m) {
  j = json{{"rel_with_t", m.rel_with_t},
           {"notrel_with_t", m.notrel_with_t},
           {"rel_without_t", m.rel_without_t},
           {"notrel_without_t", m.notrel_without_t}};
}

std::vector<std::pair<Term, ContingencyMatrix>> contingency_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrices") || !j.at("matrices").is_object())
    throw SchemaError("/matrices", "expected an object of contingency matrices");
  std::vector<std::pair<Term, ContingencyMatrix>> out;
  for (const auto& [term, value] : j.at("matrices").items()) {
    const std::string p = "/matrices/" + term;
    ContingencyMatrix m;
    auto field = [&](const char* key) -> std::uint64_t {
      if (!value.contains(key) || !value.at(key).is_number_unsigned())
        throw SchemaError(p + "/" + key, "expected a non-negative integer");
      return value.at(key).get<std::uint64_t>();
    };
    m.rel_with_t = field("rel_with_t");
    m.notrel_with_t = field("notrel_with_t");
    m.rel_without_t = field("rel_without_t");
    m.notrel_without_t = field("notrel_without_t");
    out.emplace_back(term, m);
  }
  return out;
}

}  // namespace nmir
