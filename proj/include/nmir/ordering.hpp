#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nmir/corpus.hpp"
#include "nmir/kernels.hpp"
#include "nmir/term_set.hpp"

namespace nmir {

enum class OrderKind { preferential, rational };

std::string_view to_string(OrderKind kind);

using TermPair = std::pair<Term, Term>;

/// Reflexive relation over a term universe, queried through its
/// reflexive-transitive closure. A pair (a, b) reads "a precedes b".
///
/// The base pairs are kept as given (canonically ordered, reflexive pairs
/// dropped); the closure is computed once at construction.
class TermPreorder {
 public:
  TermPreorder() = default;
  /// Throws DomainError on a pair that mentions a term outside `universe`.
  TermPreorder(Universe universe, std::vector<TermPair> pairs, OrderKind kind);

  const Universe& universe() const noexcept { return universe_; }
  OrderKind kind() const noexcept { return kind_; }

  /// Base pairs in universe order of (first, second), reflexive ones omitted.
  const std::vector<TermPair>& pairs() const noexcept { return pairs_; }

  /// Closure lookup. Throws DomainError on an unknown term.
  bool precedes(std::string_view a, std::string_view b) const;
  bool precedes(std::size_t a, std::size_t b) const { return closure_(a, b); }

  const BoolMatrix& closure() const noexcept { return closure_; }

 private:
  Universe universe_;
  std::vector<TermPair> pairs_;
  OrderKind kind_ = OrderKind::preferential;
  BoolMatrix closure_;
};

/// t1 before t2 iff |D+_t1| <= |D+_t2|.
TermPreorder positive_order(const Corpus& corpus);

/// t2 before t1 iff |D-_t1| <= |D-_t2|: rarer in negative documents ranks higher.
TermPreorder negative_order(const Corpus& corpus);

/// Intersection of two orderings over the same universe. Throws DomainError
/// on a universe mismatch.
TermPreorder combined_order(const TermPreorder& positive, const TermPreorder& negative);

/// Coverage extension to conjunctions: every v in V is matched or preceded
/// by some u in U. Throws DomainError on an empty set or unknown term.
bool set_precedes(const TermPreorder& order, const TermSet& lhs, const TermSet& rhs);

/// Mask form of set_precedes against order.universe(); no validation.
bool set_precedes_mask(const TermPreorder& order, Universe::Mask lhs, Universe::Mask rhs);

/// `# kind: <kind>` then one `a < b` line per base pair.
std::string export_pairs(const TermPreorder& order);

/// Graphviz digraph of the base pairs; edge a -> b for a < b.
std::string export_dot(const TermPreorder& order, std::string_view name = "ordering");

}  // namespace nmir
