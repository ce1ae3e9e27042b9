#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nmir {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lookup or precondition failure on a well-formed input: unknown term,
/// unknown document, empty term-set, undefined score.
class DomainError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  malformed_header,
  duplicate_term,
  duplicate_doc_id,
  wrong_cell_count,
  non_binary_cell,
  bad_label,
  empty_document,
  malformed_line,
};

const char* to_string(ParseErrorKind kind);

/// Corpus CSV / relation file errors. Row and column are 1-based; 0 means
/// "not applicable".
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t row, std::size_t column,
             const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t row_;
  std::size_t column_;
};

/// Session document does not match the schema. `pointer` is a JSON pointer
/// to the offending value.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& detail);

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// Optimistic-concurrency mismatch on a session mutation.
class VersionConflict : public Error {
 public:
  VersionConflict(unsigned long long expected, unsigned long long actual);

  unsigned long long expected() const noexcept { return expected_; }
  unsigned long long actual() const noexcept { return actual_; }

 private:
  unsigned long long expected_;
  unsigned long long actual_;
};

}  // namespace nmir
