#include <algorithm>
#include <cctype>

#include "nmir/error.hpp"
#include "nmir/logic_audit.hpp"

namespace nmir {

bool entails(const TermSet& lhs, const TermSet& rhs) { return is_subset(rhs, lhs); }

FiniteRelation::FiniteRelation(Universe universe) : universe_(std::move(universe)) {
  if (universe_.size() > max_terms)
    throw DomainError("relation universe limited to " + std::to_string(max_terms) + " terms");
  matrix_ = BoolMatrix(universe_.subset_count());
}

FiniteRelation::FiniteRelation(Universe universe,
                               const std::vector<std::pair<TermSet, TermSet>>& pairs)
    : FiniteRelation(std::move(universe)) {
  for (const auto& [lhs, rhs] : pairs) add(lhs, rhs);
}

bool FiniteRelation::holds(const TermSet& lhs, const TermSet& rhs) const {
  if (lhs.empty() || rhs.empty()) return false;
  return holds(universe_.to_mask(lhs), universe_.to_mask(rhs));
}

void FiniteRelation::add(const TermSet& lhs, const TermSet& rhs) {
  if (lhs.empty() || rhs.empty()) throw DomainError("relation pairs must be non-empty");
  add(universe_.to_mask(lhs), universe_.to_mask(rhs));
}

std::vector<std::pair<FiniteRelation::Mask, FiniteRelation::Mask>> FiniteRelation::pairs() const {
  std::vector<std::pair<Mask, Mask>> out;
  for (std::size_t i = 0; i < matrix_.size(); ++i)
    for (std::size_t j = 0; j < matrix_.size(); ++j)
      if (matrix_(i, j)) out.emplace_back(static_cast<Mask>(i + 1), static_cast<Mask>(j + 1));
  return out;
}

std::size_t FiniteRelation::size() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < matrix_.size(); ++i)
    for (std::size_t j = 0; j < matrix_.size(); ++j) n += matrix_(i, j) ? 1 : 0;
  return n;
}

FiniteRelation generated_relation(const InferenceFn& infer, const Universe& universe,
                                  std::size_t bound, Execution exec) {
  if (universe.size() > bound)
    throw DomainError("universe of " + std::to_string(universe.size()) +
                      " terms exceeds the generation bound of " + std::to_string(bound));
  FiniteRelation rel(universe);
  const auto count = static_cast<std::ptrdiff_t>(rel.subset_count());
  std::vector<TermSet> sets(static_cast<std::size_t>(count));
  for (std::ptrdiff_t i = 0; i < count; ++i)
    sets[static_cast<std::size_t>(i)] = universe.to_set(static_cast<FiniteRelation::Mask>(i + 1));

  // Row-wise results, so each thread writes only its own rows.
  std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(count),
                                              std::vector<std::uint8_t>(static_cast<std::size_t>(count)));
  auto fill_row = [&](std::ptrdiff_t i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    for (std::ptrdiff_t j = 0; j < count; ++j)
      row[static_cast<std::size_t>(j)] =
          infer(sets[static_cast<std::size_t>(i)], sets[static_cast<std::size_t>(j)]) ? 1 : 0;
  };
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) fill_row(i);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) fill_row(i);
  }
  for (std::ptrdiff_t i = 0; i < count; ++i)
    for (std::ptrdiff_t j = 0; j < count; ++j)
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        rel.add(static_cast<FiniteRelation::Mask>(i + 1), static_cast<FiniteRelation::Mask>(j + 1));
  return rel;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Term> split_conjunction(std::string_view side, std::size_t row) {
  std::vector<Term> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= side.size(); ++i) {
    if (i == side.size() || side[i] == '&') {
      auto piece = trim(side.substr(start, i - start));
      if (!is_valid_term(piece))
        throw ParseError(ParseErrorKind::malformed_line, row, 0,
                         "invalid term '" + std::string(piece) + "'");
      out.emplace_back(piece);
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

FiniteRelation parse_relation(std::string_view text, const std::vector<Term>& extra_terms) {
  std::vector<Term> order = extra_terms;
  std::vector<std::pair<std::vector<Term>, std::vector<Term>>> raw;
  std::size_t row = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++row;
    if (auto directive = trim(line); directive.rfind("# universe:", 0) == 0) {
      for (auto& t : parse_term_list(directive.substr(11)))
        if (std::find(order.begin(), order.end(), t) == order.end()) order.push_back(std::move(t));
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto arrow = line.find("|~");
    if (arrow == std::string_view::npos)
      throw ParseError(ParseErrorKind::malformed_line, row, 0, "missing '|~'");
    auto lhs = split_conjunction(trim(line.substr(0, arrow)), row);
    auto rhs = split_conjunction(trim(line.substr(arrow + 2)), row);
    for (const auto* side : {&lhs, &rhs})
      for (const auto& t : *side)
        if (std::find(order.begin(), order.end(), t) == order.end()) order.push_back(t);
    raw.emplace_back(std::move(lhs), std::move(rhs));
    if (end == text.size()) break;
  }
  FiniteRelation rel{Universe(order)};
  for (const auto& [lhs, rhs] : raw)
    rel.add(TermSet(lhs.begin(), lhs.end()), TermSet(rhs.begin(), rhs.end()));
  return rel;
}

std::string format_relation(const FiniteRelation& rel) {
  std::string out = "# universe: ";
  const auto& terms = rel.universe().terms();
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? "," : "") + terms[i];
  out += '\n';
  for (const auto& [lhs, rhs] : rel.pairs())
    out += rel.universe().label(lhs) + " |~ " + rel.universe().label(rhs) + '\n';
  return out;
}

}  // namespace nmir
