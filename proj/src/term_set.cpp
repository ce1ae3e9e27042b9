#include "nmir/term_set.hpp"

#include <algorithm>
#include <cctype>

#include "nmir/error.hpp"

namespace nmir {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::malformed_header: return "malformed header";
    case ParseErrorKind::duplicate_term: return "duplicate term";
    case ParseErrorKind::duplicate_doc_id: return "duplicate document id";
    case ParseErrorKind::wrong_cell_count: return "wrong cell count";
    case ParseErrorKind::non_binary_cell: return "non-binary cell";
    case ParseErrorKind::bad_label: return "bad label";
    case ParseErrorKind::empty_document: return "empty document";
    case ParseErrorKind::malformed_line: return "malformed line";
  }
  return "parse error";
}

namespace {

std::string parse_message(ParseErrorKind kind, std::size_t row, std::size_t column,
                          const std::string& detail) {
  std::string msg = to_string(kind);
  if (row != 0) msg += " at row " + std::to_string(row);
  if (column != 0) msg += ", column " + std::to_string(column);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename Fn>
void for_each_piece(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == '&') {
      auto piece = trim(text.substr(start, i - start));
      if (!piece.empty()) fn(piece);
      start = i + 1;
    }
  }
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t row, std::size_t column,
                       const std::string& detail)
    : Error(parse_message(kind, row, column, detail)), kind_(kind), row_(row), column_(column) {}

SchemaError::SchemaError(std::string pointer, const std::string& detail)
    : Error("schema violation at " + (pointer.empty() ? std::string("/") : pointer) + ": " + detail),
      pointer_(std::move(pointer)) {}

VersionConflict::VersionConflict(unsigned long long expected, unsigned long long actual)
    : Error("version conflict: expected " + std::to_string(expected) + ", session is at " +
            std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

bool is_subset(const TermSet& sub, const TermSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

TermSet set_union(const TermSet& a, const TermSet& b) {
  TermSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

TermSet set_difference(const TermSet& a, const TermSet& b) {
  TermSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool is_valid_term(std::string_view token) {
  if (token.empty()) return false;
  return std::none_of(token.begin(), token.end(), [](char c) {
    return c == ',' || c == '&' || std::isspace(static_cast<unsigned char>(c));
  });
}

TermSet parse_term_set(std::string_view text) {
  TermSet out;
  for_each_piece(text, [&](std::string_view piece) { out.emplace(piece); });
  return out;
}

std::vector<Term> parse_term_list(std::string_view text) {
  std::vector<Term> out;
  for_each_piece(text, [&](std::string_view piece) {
    if (std::find(out.begin(), out.end(), piece) != out.end())
      throw DomainError("duplicate term '" + std::string(piece) + "'");
    out.emplace_back(piece);
  });
  return out;
}

Universe::Universe(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!index_.emplace(terms_[i], i).second)
      throw DomainError("duplicate term '" + terms_[i] + "' in universe");
  }
}

std::optional<std::size_t> Universe::index_of(std::string_view term) const {
  auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Universe::require(const TermSet& set) const {
  for (const auto& t : set) {
    if (!contains(t)) throw DomainError("unknown term '" + t + "'");
  }
}

Universe::Mask Universe::to_mask(const TermSet& set) const {
  if (terms_.size() > max_mask_terms)
    throw DomainError("universe too large for subset enumeration (" +
                      std::to_string(terms_.size()) + " terms)");
  Mask m = 0;
  for (const auto& t : set) {
    auto i = index_of(t);
    if (!i) throw DomainError("unknown term '" + t + "'");
    m |= Mask{1} << *i;
  }
  return m;
}

TermSet Universe::to_set(Mask mask) const {
  TermSet out;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (mask & (Mask{1} << i)) out.insert(terms_[i]);
  return out;
}

std::string Universe::label(const TermSet& set) const {
  std::string out;
  for (const auto& t : terms_) {
    if (!set.count(t)) continue;
    if (!out.empty()) out += '&';
    out += t;
  }
  // Terms outside the universe go last, in lexical order.
  for (const auto& t : set) {
    if (contains(t)) continue;
    if (!out.empty()) out += '&';
    out += t;
  }
  return out;
}

std::string Universe::label(Mask mask) const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(mask & (Mask{1} << i))) continue;
    if (!out.empty()) out += '&';
    out += terms_[i];
  }
  return out;
}

std::size_t Universe::subset_count() const {
  if (terms_.size() > max_mask_terms)
    throw DomainError("universe too large for subset enumeration (" +
                      std::to_string(terms_.size()) + " terms)");
  return (std::size_t{1} << terms_.size()) - 1;
}

}  // namespace nmir
