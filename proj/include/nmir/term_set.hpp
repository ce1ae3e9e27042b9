#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nmir {

using Term = std::string;

/// A conjunction of positive terms, identified with its set of terms.
using TermSet = std::set<Term>;

/// True iff `sub` is contained in `super`.
bool is_subset(const TermSet& sub, const TermSet& super);

TermSet set_union(const TermSet& a, const TermSet& b);
TermSet set_difference(const TermSet& a, const TermSet& b);

/// Splits on ',' and '&', trimming blanks. Empty pieces are dropped.
TermSet parse_term_set(std::string_view text);

/// Same as parse_term_set but keeps input order and rejects duplicates.
std::vector<Term> parse_term_list(std::string_view text);

/// Valid term token: non-empty, no comma, no '&', no whitespace.
bool is_valid_term(std::string_view token);

/// Ordered term list with O(log n) index lookup. Set bitmasks used by the
/// exhaustive kernels are expressed against a Universe.
class Universe {
 public:
  using Mask = std::uint32_t;
  static constexpr std::size_t max_mask_terms = 20;

  Universe() = default;
  explicit Universe(std::vector<Term> terms);

  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  std::optional<std::size_t> index_of(std::string_view term) const;
  bool contains(std::string_view term) const { return index_of(term).has_value(); }

  /// Throws DomainError naming the first term missing from the universe.
  void require(const TermSet& set) const;

  Mask to_mask(const TermSet& set) const;
  TermSet to_set(Mask mask) const;

  /// Terms of `set` in universe order joined by '&'.
  std::string label(const TermSet& set) const;
  std::string label(Mask mask) const;

  /// Number of non-empty subsets, i.e. 2^n - 1. Throws if n exceeds
  /// max_mask_terms.
  std::size_t subset_count() const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace nmir
