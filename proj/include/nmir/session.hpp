#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "nmir/corpus.hpp"
#include "nmir/eum.hpp"
#include "nmir/expectations.hpp"
#include "nmir/retrieval.hpp"

namespace nmir {

struct Settings {
  double smoothing = default_smoothing;
  LogBase log_base = LogBase::natural;

  friend bool operator==(const Settings&, const Settings&) = default;
};

/// One relevance-feedback session: the corpus with its labels, optional
/// term weights, scoring settings, and reference expectations for fixtures.
struct Session {
  Corpus corpus;
  std::optional<WeightTable> weights;
  Settings settings;
  std::uint64_t version = 0;
  Expectations expectations;

  /// Relabels a document; bumps both the corpus and the session version.
  Session with_label(std::string_view doc_id, Label label) const;
  /// Replaces the corpus (keeps weights and settings, drops expectations).
  Session with_corpus(Corpus corpus) const;
  Session with_settings(Settings settings) const;
};

nlohmann::ordered_json save_session(const Session& session);
/// Throws SchemaError carrying a JSON pointer to the offending value.
Session load_session(const nlohmann::ordered_json& doc);

/// save_session pretty-printed with a trailing newline. Byte-stable.
std::string dump_session(const Session& session);

Session read_session_file(const std::filesystem::path& path);
/// Writes through a temporary file and renames over `path`.
void write_session_file(const std::filesystem::path& path, const Session& session);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace nmir
