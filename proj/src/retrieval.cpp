#include "nmir/retrieval.hpp"

#include <cmath>
#include <limits>

#include "nmir/error.hpp"

namespace nmir {

std::string_view to_string(LogBase base) { return base == LogBase::natural ? "e" : "10"; }

LogBase parse_log_base(std::string_view text) {
  if (text == "e" || text == "ln" || text == "natural") return LogBase::natural;
  if (text == "10" || text == "base10") return LogBase::base10;
  throw DomainError("log base must be 'e' or '10', got '" + std::string(text) + "'");
}

std::vector<std::string> relevant_documents(const Corpus& corpus, const TermPreorder& order,
                                            const TermSet& query) {
  if (query.empty()) throw DomainError("empty query");
  corpus.vocabulary().require(query);
  std::vector<std::string> out;
  for (const auto& d : corpus.documents())
    if (set_precedes(order, query, d.terms)) out.push_back(d.id);
  return out;
}

Partition comparability_partition(const Corpus& corpus, const TermPreorder& order,
                                  const TermSet& new_doc) {
  if (new_doc.empty()) throw DomainError("new document has no terms");
  corpus.vocabulary().require(new_doc);
  Partition p;
  for (const auto& d : corpus.documents()) {
    if (d.label == Label::unlabeled) continue;
    ++p.total;
    const bool below = set_precedes(order, d.terms, new_doc);
    const bool above = set_precedes(order, new_doc, d.terms);
    if (!below && !above) {
      ++p.undecided;
      continue;
    }
    if (d.label == Label::positive) {
      if (below) p.d_plus_p.push_back(d.id);
      if (above) p.d_plus_n.push_back(d.id);
    } else {
      if (above) p.d_minus_n.push_back(d.id);
      if (below) p.d_minus_p.push_back(d.id);
    }
  }
  return p;
}

DecisionScore decision_score(std::size_t plus_p, std::size_t minus_n, std::size_t minus_p,
                             std::size_t plus_n, std::size_t undecided, std::size_t total,
                             double smoothing, LogBase base) {
  if (total == 0) throw DomainError("decision score undefined: no labeled documents");
  if (!(smoothing >= 0.0) || !std::isfinite(smoothing))
    throw DomainError("smoothing must be a finite non-negative number");
  if (undecided > total) throw DomainError("undecided count exceeds labeled total");

  const double s = smoothing;
  const double num = (static_cast<double>(plus_p) + s) * (static_cast<double>(minus_n) + s);
  const double den = (static_cast<double>(minus_p) + s) * (static_cast<double>(plus_n) + s);
  const double weight =
      static_cast<double>(total - undecided) / static_cast<double>(total);

  DecisionScore out;
  if (weight == 0.0) {
    out.value = 0.0;
  } else if (num == 0.0 && den == 0.0) {
    throw DomainError("decision score undefined: 0/0 without smoothing");
  } else if (den == 0.0) {
    out.value = std::numeric_limits<double>::infinity();
  } else if (num == 0.0) {
    out.value = -std::numeric_limits<double>::infinity();
  } else {
    const double ratio = num / den;
    out.value = weight * (base == LogBase::natural ? std::log(ratio) : std::log10(ratio));
  }
  out.relevant = out.value > 0.0;
  return out;
}

DecisionScore decision_score(const Partition& p, double smoothing, LogBase base) {
  return decision_score(p.d_plus_p.size(), p.d_minus_n.size(), p.d_minus_p.size(),
                        p.d_plus_n.size(), p.undecided, p.total, smoothing, base);
}

}  // namespace nmir
