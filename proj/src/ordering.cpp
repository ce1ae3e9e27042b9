#include "nmir/ordering.hpp"

#include <algorithm>

#include "nmir/error.hpp"

namespace nmir {

std::string_view to_string(OrderKind kind) {
  return kind == OrderKind::rational ? "rational" : "preferential";
}

TermPreorder::TermPreorder(Universe universe, std::vector<TermPair> pairs, OrderKind kind)
    : universe_(std::move(universe)), kind_(kind), closure_(universe_.size()) {
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = universe_.index_of(a);
    auto ib = universe_.index_of(b);
    if (!ia) throw DomainError("unknown term '" + a + "'");
    if (!ib) throw DomainError("unknown term '" + b + "'");
    if (*ia != *ib) indexed.emplace_back(*ia, *ib);
  }
  std::sort(indexed.begin(), indexed.end());
  indexed.erase(std::unique(indexed.begin(), indexed.end()), indexed.end());
  pairs_.reserve(indexed.size());
  for (auto [a, b] : indexed) {
    pairs_.emplace_back(universe_[a], universe_[b]);
    closure_.set(a, b);
  }
  transitive_closure(closure_);
}

bool TermPreorder::precedes(std::string_view a, std::string_view b) const {
  auto ia = universe_.index_of(a);
  auto ib = universe_.index_of(b);
  if (!ia) throw DomainError("unknown term '" + std::string(a) + "'");
  if (!ib) throw DomainError("unknown term '" + std::string(b) + "'");
  return closure_(*ia, *ib);
}

namespace {

std::vector<std::size_t> counts(const Corpus& corpus, Polarity polarity) {
  std::vector<std::size_t> out;
  out.reserve(corpus.vocabulary().size());
  for (const auto& t : corpus.vocabulary().terms()) out.push_back(term_count(corpus, t, polarity));
  return out;
}

// Pairs (a, b) with before(count[a], count[b]).
template <typename Before>
TermPreorder order_from_counts(const Corpus& corpus, Polarity polarity, Before before) {
  const auto& vocab = corpus.vocabulary();
  if (vocab.size() == 0) throw DomainError("empty vocabulary");
  auto c = counts(corpus, polarity);
  std::vector<TermPair> pairs;
  for (std::size_t a = 0; a < vocab.size(); ++a)
    for (std::size_t b = 0; b < vocab.size(); ++b)
      if (a != b && before(c[a], c[b])) pairs.emplace_back(vocab[a], vocab[b]);
  return TermPreorder(vocab, std::move(pairs), OrderKind::rational);
}

}  // namespace

TermPreorder positive_order(const Corpus& corpus) {
  return order_from_counts(corpus, Polarity::positive,
                           [](std::size_t ca, std::size_t cb) { return ca <= cb; });
}

TermPreorder negative_order(const Corpus& corpus) {
  return order_from_counts(corpus, Polarity::negative,
                           [](std::size_t ca, std::size_t cb) { return cb <= ca; });
}

TermPreorder combined_order(const TermPreorder& positive, const TermPreorder& negative) {
  if (!(positive.universe() == negative.universe()))
    throw DomainError("cannot combine orderings over different universes");
  const auto& u = positive.universe();
  std::vector<TermPair> pairs;
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = 0; b < u.size(); ++b)
      if (a != b && positive.precedes(a, b) && negative.precedes(a, b))
        pairs.emplace_back(u[a], u[b]);
  return TermPreorder(u, std::move(pairs), OrderKind::preferential);
}

bool set_precedes_mask(const TermPreorder& order, Universe::Mask lhs, Universe::Mask rhs) {
  const std::size_t n = order.universe().size();
  for (std::size_t v = 0; v < n; ++v) {
    if (!(rhs & (Universe::Mask{1} << v))) continue;
    bool covered = false;
    for (std::size_t u = 0; u < n && !covered; ++u)
      covered = (lhs & (Universe::Mask{1} << u)) && order.precedes(u, v);
    if (!covered) return false;
  }
  return true;
}

bool set_precedes(const TermPreorder& order, const TermSet& lhs, const TermSet& rhs) {
  if (lhs.empty() || rhs.empty()) throw DomainError("set_precedes requires non-empty term-sets");
  const auto& u = order.universe();
  std::vector<std::size_t> left;
  left.reserve(lhs.size());
  for (const auto& t : lhs) {
    auto i = u.index_of(t);
    if (!i) throw DomainError("unknown term '" + t + "'");
    left.push_back(*i);
  }
  for (const auto& t : rhs) {
    auto v = u.index_of(t);
    if (!v) throw DomainError("unknown term '" + t + "'");
    if (std::none_of(left.begin(), left.end(), [&](std::size_t i) { return order.precedes(i, *v); }))
      return false;
  }
  return true;
}

std::string export_pairs(const TermPreorder& order) {
  std::string out = "# kind: ";
  out += to_string(order.kind());
  out += '\n';
  for (const auto& [a, b] : order.pairs()) out += a + " < " + b + '\n';
  return out;
}

std::string export_dot(const TermPreorder& order, std::string_view name) {
  std::string out = "digraph \"" + std::string(name) + "\" {\n  rankdir=BT;\n";
  for (const auto& t : order.universe().terms()) out += "  \"" + t + "\";\n";
  for (const auto& [a, b] : order.pairs()) out += "  \"" + a + "\" -> \"" + b + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace nmir
