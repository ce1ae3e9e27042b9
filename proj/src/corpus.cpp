#include "nmir/corpus.hpp"

#include <algorithm>
#include <set>

#include "nmir/error.hpp"

namespace nmir {

char label_symbol(Label label) {
  switch (label) {
    case Label::positive: return '+';
    case Label::negative: return '-';
    case Label::unlabeled: return '?';
  }
  return '?';
}

std::string_view label_name(Label label) {
  switch (label) {
    case Label::positive: return "positive";
    case Label::negative: return "negative";
    case Label::unlabeled: return "unlabeled";
  }
  return "unlabeled";
}

Label parse_label(std::string_view text) {
  if (text == "+" || text == "positive") return Label::positive;
  if (text == "-" || text == "negative") return Label::negative;
  if (text == "?" || text == "unlabeled") return Label::unlabeled;
  throw DomainError("invalid label '" + std::string(text) + "'");
}

Corpus::Corpus(std::vector<Term> vocabulary, std::vector<Document> documents,
               std::uint64_t version)
    : documents_(std::move(documents)), version_(version) {
  for (const auto& t : vocabulary) {
    if (!is_valid_term(t)) throw DomainError("invalid term token '" + t + "'");
  }
  vocabulary_ = Universe(std::move(vocabulary));
  std::set<std::string_view> ids;
  for (const auto& d : documents_) {
    if (!is_valid_term(d.id)) throw DomainError("invalid document id '" + d.id + "'");
    if (!ids.insert(d.id).second) throw DomainError("duplicate document id '" + d.id + "'");
    if (d.terms.empty()) throw DomainError("document '" + d.id + "' has no terms");
    vocabulary_.require(d.terms);
  }
}

const Document* Corpus::find(std::string_view id) const {
  auto it = std::find_if(documents_.begin(), documents_.end(),
                         [&](const Document& d) { return d.id == id; });
  return it == documents_.end() ? nullptr : &*it;
}

const Document& Corpus::document(std::string_view id) const {
  if (const auto* d = find(id)) return *d;
  throw DomainError("unknown document '" + std::string(id) + "'");
}

std::size_t Corpus::labeled_count() const {
  return static_cast<std::size_t>(std::count_if(
      documents_.begin(), documents_.end(),
      [](const Document& d) { return d.label != Label::unlabeled; }));
}

Corpus Corpus::with_label(std::string_view id, Label label) const {
  Corpus out = *this;
  auto it = std::find_if(out.documents_.begin(), out.documents_.end(),
                         [&](const Document& d) { return d.id == id; });
  if (it == out.documents_.end())
    throw DomainError("unknown document '" + std::string(id) + "'");
  it->label = label;
  ++out.version_;
  return out;
}

Corpus Corpus::with_document(Document doc) const {
  if (find(doc.id)) throw DomainError("duplicate document id '" + doc.id + "'");
  if (doc.terms.empty()) throw DomainError("document '" + doc.id + "' has no terms");
  vocabulary_.require(doc.terms);
  Corpus out = *this;
  out.documents_.push_back(std::move(doc));
  ++out.version_;
  return out;
}

namespace {

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      cells.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return cells;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace

Corpus parse_corpus(std::string_view csv) {
  if (csv.size() >= 3 && csv.substr(0, 3) == "\xEF\xBB\xBF") csv.remove_prefix(3);
  auto lines = split_lines(csv);
  // Trailing blank lines are tolerated; interior blank lines are not.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(ParseErrorKind::malformed_header, 1, 0, "missing header row");

  auto header = split_cells(lines.front());
  if (header.front() != "doc_id")
    throw ParseError(ParseErrorKind::malformed_header, 1, 1, "first column must be 'doc_id'");
  bool has_label = header.back() == "label";
  std::size_t term_columns = header.size() - 1 - (has_label ? 1 : 0);

  std::vector<Term> vocabulary;
  std::set<std::string_view> seen_terms;
  for (std::size_t c = 1; c <= term_columns; ++c) {
    if (!is_valid_term(header[c]))
      throw ParseError(ParseErrorKind::malformed_header, 1, c + 1,
                       "invalid term token '" + std::string(header[c]) + "'");
    if (!seen_terms.insert(header[c]).second)
      throw ParseError(ParseErrorKind::duplicate_term, 1, c + 1, std::string(header[c]));
    vocabulary.emplace_back(header[c]);
  }

  std::vector<Document> documents;
  std::set<std::string_view> seen_ids;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::size_t row = r + 1;
    auto cells = split_cells(lines[r]);
    if (cells.size() != header.size())
      throw ParseError(ParseErrorKind::wrong_cell_count, row, 0,
                       "expected " + std::to_string(header.size()) + " cells, got " +
                           std::to_string(cells.size()));
    if (!is_valid_term(cells[0]))
      throw ParseError(ParseErrorKind::malformed_line, row, 1,
                       "invalid document id '" + std::string(cells[0]) + "'");
    if (!seen_ids.insert(cells[0]).second)
      throw ParseError(ParseErrorKind::duplicate_doc_id, row, 1, std::string(cells[0]));

    Document doc;
    doc.id = std::string(cells[0]);
    for (std::size_t c = 1; c <= term_columns; ++c) {
      if (cells[c] == "1") {
        doc.terms.insert(vocabulary[c - 1]);
      } else if (cells[c] != "0") {
        throw ParseError(ParseErrorKind::non_binary_cell, row, c + 1,
                         "'" + std::string(cells[c]) + "'");
      }
    }
    if (has_label) {
      auto cell = cells.back();
      if (cell == "+") doc.label = Label::positive;
      else if (cell == "-") doc.label = Label::negative;
      else if (cell == "?" || cell.empty()) doc.label = Label::unlabeled;
      else
        throw ParseError(ParseErrorKind::bad_label, row, header.size(),
                         "'" + std::string(cell) + "'");
    }
    if (doc.terms.empty())
      throw ParseError(ParseErrorKind::empty_document, row, 0, "document '" + doc.id + "'");
    documents.push_back(std::move(doc));
  }
  return Corpus(std::move(vocabulary), std::move(documents));
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out = "doc_id";
  for (const auto& t : corpus.vocabulary().terms()) out += ',' + t;
  out += ",label\n";
  for (const auto& d : corpus.documents()) {
    out += d.id;
    for (const auto& t : corpus.vocabulary().terms()) out += d.terms.count(t) ? ",1" : ",0";
    out += ',';
    out += label_symbol(d.label);
    out += '\n';
  }
  return out;
}

Corpus set_label(const Corpus& corpus, std::string_view doc_id, Label label) {
  return corpus.with_label(doc_id, label);
}

std::size_t term_count(const Corpus& corpus, const Term& term, Polarity polarity) {
  if (!corpus.vocabulary().contains(term)) throw DomainError("unknown term '" + term + "'");
  const Label wanted = polarity == Polarity::positive ? Label::positive : Label::negative;
  return static_cast<std::size_t>(
      std::count_if(corpus.documents().begin(), corpus.documents().end(),
                    [&](const Document& d) { return d.label == wanted && d.terms.count(term); }));
}

}  // namespace nmir
