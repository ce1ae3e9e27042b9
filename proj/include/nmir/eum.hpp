#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "nmir/corpus.hpp"
#include "nmir/term_set.hpp"

namespace nmir {

/// 2x2 presence/relevance counts for one term over the labeled documents.
struct ContingencyMatrix {
  std::uint64_t rel_with_t = 0;
  std::uint64_t notrel_with_t = 0;
  std::uint64_t rel_without_t = 0;
  std::uint64_t notrel_without_t = 0;

  std::uint64_t total() const {
    return rel_with_t + notrel_with_t + rel_without_t + notrel_without_t;
  }
  friend bool operator==(const ContingencyMatrix&, const ContingencyMatrix&) = default;
};

ContingencyMatrix contingency(const Corpus& corpus, const Term& term);

/// Stand-in weighting: P(Rel|t) - P(Rel|not t), each conditional with
/// additive smoothing s. Lies in (-1, 1) for s > 0.
double default_weight(const ContingencyMatrix& m, double smoothing = 0.5);

/// Term weights in [-1, 1] in insertion order. w(t1&t2) = min, w(not U) = -w(U).
class WeightTable {
 public:
  WeightTable() = default;
  /// Throws DomainError on a value outside [-1, 1], NaN, duplicate or
  /// invalid term.
  explicit WeightTable(std::vector<std::pair<Term, double>> weights);

  const std::vector<std::pair<Term, double>>& entries() const noexcept { return entries_; }
  std::vector<Term> terms() const;
  bool contains(const Term& t) const { return index_.count(t) != 0; }
  double weight(const Term& t) const;

  friend bool operator==(const WeightTable&, const WeightTable&) = default;

 private:
  std::vector<std::pair<Term, double>> entries_;
  std::map<Term, double> index_;
};

/// Weights from default_weight over every vocabulary term.
WeightTable default_weights(const Corpus& corpus, double smoothing = 0.5);

/// Minimum member weight; +1 for the empty set.
double set_weight(const WeightTable& wt, const TermSet& set);
/// -set_weight(set).
double neg_weight(const WeightTable& wt, const TermSet& set);

/// A positive conjunction or the negation of one.
struct SignedSet {
  TermSet terms;
  bool negated = false;
};

/// max(w, 0) of the set, or of its negation.
double rank(const WeightTable& wt, const TermSet& set);
double rank(const WeightTable& wt, const SignedSet& set);

/// rank(x) <= rank(y).
bool rational_precedes(const WeightTable& wt, const SignedSet& x, const SignedSet& y);

/// q |~ d  iff  d ⊆ q, or rank(d - q) > rank(not q).
/// Throws DomainError on empty sets or unknown terms.
bool eum_infers(const WeightTable& wt, const TermSet& query, const TermSet& doc);

struct DerivationTable {
  std::vector<TermSet> queries;
  std::vector<TermSet> docs;
  std::vector<std::vector<bool>> cells;  // cells[i][j] = queries[i] |~ docs[j]
};

DerivationTable derivation_table(const WeightTable& wt, const std::vector<TermSet>& sets);

/// Non-empty subsets of the table's terms with at most `max_size` members,
/// ordered by size then by term order.
std::vector<TermSet> subsets_by_size(const std::vector<Term>& terms, std::size_t max_size);

/// Header `q |~ d,<labels>` then one row per query; labels join terms with
/// '&' in `order`; cells are Y/N. LF line endings.
std::string derivation_table_csv(const DerivationTable& table, const std::vector<Term>& order);

void to_json(nlohmann::ordered_json& j, const WeightTable& wt);
/// Accepts {"weights": {...}} or a bare object of term → number.
WeightTable weights_from_json(const nlohmann::ordered_json& j, const std::string& pointer = "");

void to_json(nlohmann::ordered_json& j, const ContingencyMatrix& m);
/// {"matrices": {"t": {"rel_with_t":…, …}}}, keys in file order.
std::vector<std::pair<Term, ContingencyMatrix>> contingency_from_json(
    const nlohmann::ordered_json& j);

}  // namespace nmir
