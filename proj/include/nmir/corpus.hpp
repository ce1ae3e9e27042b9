#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nmir/term_set.hpp"

namespace nmir {

enum class Label { positive, negative, unlabeled };
enum class Polarity { positive, negative };

/// '+', '-' or '?'.
char label_symbol(Label label);
/// Accepts "+", "-", "?" and the words "positive", "negative", "unlabeled".
/// Throws DomainError otherwise.
Label parse_label(std::string_view text);
std::string_view label_name(Label label);

struct Document {
  std::string id;
  TermSet terms;
  Label label = Label::unlabeled;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Document/term incidence matrix plus relevance-feedback labels.
/// Immutable: every mutation returns a new corpus with version + 1.
class Corpus {
 public:
  Corpus() = default;
  /// Validates unique ids and terms, non-empty term-sets drawn from the
  /// vocabulary. Throws DomainError.
  Corpus(std::vector<Term> vocabulary, std::vector<Document> documents,
         std::uint64_t version = 0);

  const Universe& vocabulary() const noexcept { return vocabulary_; }
  const std::vector<Document>& documents() const noexcept { return documents_; }
  std::uint64_t version() const noexcept { return version_; }

  const Document* find(std::string_view id) const;
  const Document& document(std::string_view id) const;
  std::size_t labeled_count() const;

  Corpus with_label(std::string_view id, Label label) const;
  Corpus with_document(Document doc) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  Universe vocabulary_;
  std::vector<Document> documents_;
  std::uint64_t version_ = 0;
};

/// Parses `doc_id,<term>...[,label]` CSV with 0/1 cells. LF or CRLF.
/// Throws ParseError.
Corpus parse_corpus(std::string_view csv);

/// Inverse of parse_corpus; always writes the label column.
std::string serialize_corpus(const Corpus& corpus);

Corpus set_label(const Corpus& corpus, std::string_view doc_id, Label label);

/// |D+_t| or |D-_t|: labeled documents of the given polarity containing t.
std::size_t term_count(const Corpus& corpus, const Term& term, Polarity polarity);

}  // namespace nmir
