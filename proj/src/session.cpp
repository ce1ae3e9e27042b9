#include "nmir/session.hpp"

#include <fstream>
#include <sstream>

#include "nmir/error.hpp"

namespace nmir {

using json = nlohmann::ordered_json;

Session Session::with_label(std::string_view doc_id, Label label) const {
  Session out = *this;
  out.corpus = corpus.with_label(doc_id, label);
  ++out.version;
  return out;
}

Session Session::with_corpus(Corpus c) const {
  Session out = *this;
  out.corpus = std::move(c);
  out.expectations = {};
  ++out.version;
  return out;
}

Session Session::with_settings(Settings s) const {
  if (!(s.smoothing >= 0.0)) throw DomainError("smoothing must be non-negative");
  Session out = *this;
  out.settings = s;
  ++out.version;
  return out;
}

json save_session(const Session& s) {
  json docs = json::array();
  for (const auto& d : s.corpus.documents()) {
    json terms = json::array();
    // Vocabulary order, not lexical order.
    for (const auto& t : s.corpus.vocabulary().terms())
      if (d.terms.count(t)) terms.push_back(t);
    docs.push_back(json{{"id", d.id},
                        {"terms", std::move(terms)},
                        {"label", std::string(1, label_symbol(d.label))}});
  }
  json out;
  out["corpus"] = json{{"vocabulary", s.corpus.vocabulary().terms()},
                       {"documents", std::move(docs)},
                       {"version", s.corpus.version()}};
  if (s.weights) {
    json w = json::object();
    for (const auto& [t, v] : s.weights->entries()) w[t] = v;
    out["weights"] = std::move(w);
  }
  out["settings"] = json{{"smoothing", s.settings.smoothing},
                         {"log_base", std::string(to_string(s.settings.log_base))}};
  out["version"] = s.version;
  if (!s.expectations.empty()) out["expectations"] = s.expectations;
  return out;
}

namespace {

const json& require(const json& j, const char* key, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer, "expected an object");
  if (!j.contains(key)) throw SchemaError(pointer + "/" + key, "missing field");
  return j.at(key);
}

std::string require_string(const json& j, const std::string& pointer) {
  if (!j.is_string()) throw SchemaError(pointer, "expected a string");
  return j.get<std::string>();
}

std::uint64_t require_unsigned(const json& j, const std::string& pointer) {
  if (!j.is_number_unsigned()) throw SchemaError(pointer, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

Session load_session(const json& doc) {
  Session s;
  const auto& corpus = require(doc, "corpus", "");
  const auto& vocab = require(corpus, "vocabulary", "/corpus");
  if (!vocab.is_array()) throw SchemaError("/corpus/vocabulary", "expected an array");
  std::vector<Term> vocabulary;
  for (std::size_t i = 0; i < vocab.size(); ++i)
    vocabulary.push_back(require_string(vocab[i], "/corpus/vocabulary/" + std::to_string(i)));

  const auto& docs = require(corpus, "documents", "/corpus");
  if (!docs.is_array()) throw SchemaError("/corpus/documents", "expected an array");
  std::vector<Document> documents;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const std::string p = "/corpus/documents/" + std::to_string(i);
    Document d;
    d.id = require_string(require(docs[i], "id", p), p + "/id");
    const auto& terms = require(docs[i], "terms", p);
    if (!terms.is_array()) throw SchemaError(p + "/terms", "expected an array");
    for (std::size_t k = 0; k < terms.size(); ++k)
      d.terms.insert(require_string(terms[k], p + "/terms/" + std::to_string(k)));
    const auto label = require_string(require(docs[i], "label", p), p + "/label");
    if (label != "+" && label != "-" && label != "?")
      throw SchemaError(p + "/label",
                        "document '" + d.id + "' has invalid label '" + label + "' (expected +, - or ?)");
    d.label = parse_label(label);
    documents.push_back(std::move(d));
  }
  std::uint64_t corpus_version = 0;
  if (corpus.contains("version"))
    corpus_version = require_unsigned(corpus.at("version"), "/corpus/version");
  try {
    s.corpus = Corpus(std::move(vocabulary), std::move(documents), corpus_version);
  } catch (const DomainError& e) {
    throw SchemaError("/corpus", e.what());
  }

  if (doc.contains("weights")) {
    try {
      s.weights = weights_from_json(doc.at("weights"), "/weights");
    } catch (const DomainError& e) {
      throw SchemaError("/weights", e.what());
    }
  }

  const auto& settings = require(doc, "settings", "");
  const auto& smoothing = require(settings, "smoothing", "/settings");
  if (!smoothing.is_number() || smoothing.get<double>() < 0.0)
    throw SchemaError("/settings/smoothing", "expected a non-negative number");
  s.settings.smoothing = smoothing.get<double>();
  const auto base = require_string(require(settings, "log_base", "/settings"), "/settings/log_base");
  if (base != "e" && base != "10") throw SchemaError("/settings/log_base", "expected \"e\" or \"10\"");
  s.settings.log_base = parse_log_base(base);

  s.version = require_unsigned(require(doc, "version", ""), "/version");
  if (doc.contains("expectations"))
    s.expectations = expectations_from_json(doc.at("expectations"), "/expectations");
  return s;
}

std::string dump_session(const Session& session) { return save_session(session).dump(2) + "\n"; }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.flush()) throw DomainError("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

Session read_session_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return load_session(doc);
}

void write_session_file(const std::filesystem::path& path, const Session& session) {
  write_text_file(path, dump_session(session));
}

}  // namespace nmir
