#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nmir/corpus.hpp"
#include "nmir/ordering.hpp"

namespace nmir {

/// Documents d (any label) with query ≺ terms(d), in corpus order.
/// Throws DomainError on an empty query or unknown term.
std::vector<std::string> relevant_documents(const Corpus& corpus, const TermPreorder& order,
                                            const TermSet& query);

/// Labeled documents split by comparability with a new document x.
/// A document comparable both ways sits in both matching sets and does
/// not count as undecided.
struct Partition {
  std::vector<std::string> d_plus_p;   // positive, d ≺ x
  std::vector<std::string> d_minus_n;  // negative, x ≺ d
  std::vector<std::string> d_plus_n;   // positive, x ≺ d
  std::vector<std::string> d_minus_p;  // negative, d ≺ x
  std::size_t undecided = 0;
  std::size_t total = 0;

  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition comparability_partition(const Corpus& corpus, const TermPreorder& order,
                                  const TermSet& new_doc);

enum class LogBase { natural, base10 };

std::string_view to_string(LogBase base);  // "e" or "10"
LogBase parse_log_base(std::string_view text);

struct DecisionScore {
  double value = 0.0;
  bool relevant = false;  // value > 0
};

inline constexpr double default_smoothing = 0.5;

/// ((N-U)/N) * log(((|D+p|+s)(|D-n|+s)) / ((|D-p|+s)(|D+n|+s))).
/// With s = 0 a one-sided zero gives ±infinity. Throws DomainError when
/// N = 0, s < 0, or the ratio is 0/0.
DecisionScore decision_score(const Partition& p, double smoothing = default_smoothing,
                             LogBase base = LogBase::natural);

/// Same formula on raw counts.
DecisionScore decision_score(std::size_t plus_p, std::size_t minus_n, std::size_t minus_p,
                             std::size_t plus_n, std::size_t undecided, std::size_t total,
                             double smoothing = default_smoothing,
                             LogBase base = LogBase::natural);

}  // namespace nmir
