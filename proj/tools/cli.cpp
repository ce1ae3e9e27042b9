#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "nmir/api_server.hpp"
#include "nmir/engine.hpp"
#include "nmir/error.hpp"

namespace nmir {

using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Globals {
  std::string session_path = "session.json";
  bool as_json = false;
  std::optional<double> smoothing;
  std::optional<std::string> log_base;
  int port = 8080;
};

WeightTable load_weights(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", "invalid JSON in '" + path + "': " + e.what());
  }
  return weights_from_json(doc);
}

Expectations load_expectations(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", "invalid JSON in '" + path + "': " + e.what());
  }
  return expectations_from_json(doc);
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_divergences(std::ostream& out, const json& result) {
  if (!result.contains("divergences") || result.at("divergences").empty()) return;
  out << '\n';
  for (const auto& d : result.at("divergences"))
    out << "* " << d.at("subject").get<std::string>() << ": " << d.at("detail").get<std::string>()
        << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relevance feedback as nonmonotonic inference"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--session", g.session_path, "Session file")->capture_default_str();
  app.add_flag("--json", g.as_json, "Machine-readable output");
  app.add_option("--smoothing", g.smoothing, "Additive smoothing for the decision score")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--log-base", g.log_base, "Logarithm base for the decision score")
      ->check(CLI::IsMember({"e", "10"}));
  app.add_option("--port", g.port, "Port for serve")->capture_default_str();

  std::string csv_path, weights_path, expect_path;
  auto* ingest = app.add_subcommand("ingest", "Create a session from a corpus CSV");
  ingest->add_option("csv", csv_path, "Corpus CSV")->required();
  ingest->add_option("--weights", weights_path, "Weight fixture JSON");
  ingest->add_option("--expect", expect_path, "Reference expectations JSON");

  std::string doc_id, label_text;
  std::optional<std::uint64_t> expected;
  auto* label = app.add_subcommand("label", "Set a document's feedback label");
  label->add_option("doc", doc_id)->required();
  label->add_option("label", label_text, "+, - or ?")->required();
  label->add_option("--expected-version", expected);

  std::string kind = "combined";
  bool dot = false;
  auto* order = app.add_subcommand("order", "Print a term ordering");
  order->add_option("--kind", kind)->check(CLI::IsMember({"positive", "negative", "combined"}));
  order->add_flag("--dot", dot, "Graphviz output");

  std::string terms_text;
  auto* query = app.add_subcommand("query", "Documents relevant to a conjunctive query");
  query->add_option("terms", terms_text, "Comma-separated terms")->required();

  auto* score = app.add_subcommand("score", "Decision score for a new document");
  score->add_option("terms", terms_text, "Comma-separated terms")->required();

  auto* eum = app.add_subcommand("eum", "Expected-utility inference");
  eum->require_subcommand(1);
  std::string sets_text;
  std::size_t max_size = 2;
  auto* table = eum->add_subcommand("table", "Derivation table");
  table->add_option("--weights", weights_path);
  table->add_option("--sets", sets_text, "Semicolon-separated sets, e.g. t1;t2;t1&t2");
  table->add_option("--max-size", max_size)->capture_default_str();
  std::string q_text, d_text;
  auto* infer = eum->add_subcommand("infer", "Decide q |~ d");
  infer->add_option("query", q_text)->required();
  infer->add_option("doc", d_text)->required();
  infer->add_option("--weights", weights_path);

  bool from_eum = false;
  std::string audit_terms, relation_path, rules_text;
  std::size_t loop_bound = 4;
  auto* audit = app.add_subcommand("audit", "Audit a consequence relation against the rule system");
  audit->add_flag("--from-eum", from_eum, "Audit the relation generated by eum inference");
  audit->add_option("--terms", audit_terms, "Universe for --from-eum");
  audit->add_option("--weights", weights_path);
  audit->add_option("--relation", relation_path, "Relation file (q |~ d per line)");
  audit->add_option("--rules", rules_text, "Comma-separated rule names (default: all)");
  audit->add_option("--loop-bound", loop_bound)->capture_default_str();

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    auto session_or_weights = [&]() -> WeightTable {
      if (!weights_path.empty()) return load_weights(weights_path);
      return effective_weights(read_session_file(g.session_path));
    };

    if (ingest->parsed()) {
      Session s;
      if (std::filesystem::exists(g.session_path)) {
        s = read_session_file(g.session_path).with_corpus(parse_corpus(read_text_file(csv_path)));
      } else {
        s.corpus = parse_corpus(read_text_file(csv_path));
      }
      if (!weights_path.empty()) s.weights = load_weights(weights_path);
      if (!expect_path.empty()) s.expectations = load_expectations(expect_path);
      if (g.smoothing) s.settings.smoothing = *g.smoothing;
      if (g.log_base) s.settings.log_base = parse_log_base(*g.log_base);
      write_session_file(g.session_path, s);
      if (g.as_json) {
        print_json(out, session_json(s));
      } else {
        out << "ingested " << s.corpus.documents().size() << " documents over "
            << s.corpus.vocabulary().size() << " terms into " << g.session_path << " (version "
            << s.version << ")\n";
      }
      return kOk;
    }

    if (label->parsed()) {
      auto s = read_session_file(g.session_path);
      if (expected && *expected != s.version) throw VersionConflict(*expected, s.version);
      s = s.with_label(doc_id, parse_label(label_text));
      write_session_file(g.session_path, s);
      const auto& d = s.corpus.document(doc_id);
      if (g.as_json) {
        print_json(out, json{{"version", s.version},
                             {"document", {{"id", d.id}, {"label", std::string(1, label_symbol(d.label))}}}});
      } else {
        out << d.id << ": " << label_symbol(d.label) << " (version " << s.version << ")\n";
      }
      return kOk;
    }

    if (order->parsed()) {
      const auto s = read_session_file(g.session_path);
      const auto choice = parse_ordering_choice(kind);
      const auto result = ordering_json(s, choice);
      if (g.as_json) {
        print_json(out, result);
      } else if (dot) {
        out << result.at("dot").get<std::string>();
      } else {
        out << export_pairs(build_ordering(s.corpus, choice));
        print_divergences(out, result);
      }
      return kOk;
    }

    if (query->parsed()) {
      const auto s = read_session_file(g.session_path);
      const auto result = query_json(s, parse_term_set(terms_text));
      if (g.as_json) {
        print_json(out, result);
        return kOk;
      }
      std::vector<std::string> flagged;
      if (result.contains("divergences"))
        for (const auto& d : result.at("divergences")) flagged.push_back(d.at("subject"));
      for (const auto& id : result.at("relevant")) {
        const auto name = id.get<std::string>();
        const bool mark = std::find(flagged.begin(), flagged.end(), name) != flagged.end();
        out << name << (mark ? " *" : "") << '\n';
      }
      print_divergences(out, result);
      return kOk;
    }

    if (score->parsed()) {
      const auto s = read_session_file(g.session_path);
      std::optional<LogBase> base;
      if (g.log_base) base = parse_log_base(*g.log_base);
      const auto result = score_json(s, parse_term_set(terms_text), g.smoothing, base);
      if (g.as_json) {
        print_json(out, result);
        return kOk;
      }
      const auto& v = result.at("value");
      const double value = v.is_string() ? (v == "+inf" ? INFINITY : -INFINITY) : v.get<double>();
      const auto& p = result.at("partition");
      out << "value: " << format_number(value) << " ("
          << (result.at("relevant").get<bool>() ? "relevant" : "irrelevant") << ")\n"
          << "partition: D+p=" << p.at("d_plus_p") << " D-n=" << p.at("d_minus_n")
          << " D+n=" << p.at("d_plus_n") << " D-p=" << p.at("d_minus_p")
          << " U=" << p.at("undecided") << " N=" << p.at("total") << '\n';
      return kOk;
    }

    if (table->parsed()) {
      const auto weights = session_or_weights();
      std::vector<TermSet> sets;
      if (!sets_text.empty()) {
        std::size_t start = 0;
        while (start <= sets_text.size()) {
          auto end = sets_text.find(';', start);
          if (end == std::string::npos) end = sets_text.size();
          auto set = parse_term_set(std::string_view(sets_text).substr(start, end - start));
          if (!set.empty()) sets.push_back(std::move(set));
          start = end + 1;
        }
      } else {
        sets = default_table_sets(weights, max_size);
      }
      const auto result = eum_table_json(weights, sets);
      if (g.as_json) print_json(out, result);
      else out << result.at("csv").get<std::string>();
      return kOk;
    }

    if (infer->parsed()) {
      const auto weights = session_or_weights();
      const auto result = eum_infer_json(weights, parse_term_set(q_text), parse_term_set(d_text));
      if (g.as_json) print_json(out, result);
      else out << (result.at("infers").get<bool>() ? "Y" : "N") << '\n';
      return kOk;
    }

    if (audit->parsed()) {
      AuditRequest request;
      request.options.loop_bound = loop_bound;
      if (!rules_text.empty()) {
        request.rules.clear();
        for (const auto& r : parse_term_list(rules_text)) request.rules.push_back(parse_rule(r));
      }
      RuleReport report;
      if (!relation_path.empty() && from_eum) throw DomainError("choose --relation or --from-eum");
      if (!relation_path.empty()) {
        std::vector<Term> extra;
        if (!audit_terms.empty()) extra = parse_term_list(audit_terms);
        report = audit_rules(parse_relation(read_text_file(relation_path), extra), request.rules,
                             request.options);
      } else if (from_eum) {
        const auto weights = session_or_weights();
        const auto terms = audit_terms.empty() ? weights.terms() : parse_term_list(audit_terms);
        report = audit_eum(weights, terms, request);
      } else {
        err << "usage error: audit needs --from-eum or --relation\n";
        return kUsageError;
      }
      if (g.as_json) {
        print_json(out, audit_json(report));
      } else {
        for (Rule r : report.rules) {
          out << to_string(r) << ": " << report.totals.at(r) << " violations\n";
          for (const auto& inst : report.violations.at(r)) {
            std::vector<std::string> premises;
            for (const auto& p : inst.premises)
              premises.push_back(report.universe.label(p.first) + " |~ " +
                                 report.universe.label(p.second));
            out << "  premises [" << join(premises, "; ") << "] missing "
                << report.universe.label(inst.conclusion.first) << " |~ "
                << report.universe.label(inst.conclusion.second) << '\n';
          }
        }
        out << "total: " << report.total() << " violations\n";
      }
      return kOk;
    }

    if (serve->parsed()) {
      auto s = read_session_file(g.session_path);
      ApiServer server(std::move(s), std::filesystem::path(g.session_path));
      out << "serving " << g.session_path << " on http://127.0.0.1:" << g.port << '\n' << std::flush;
      if (!server.listen("0.0.0.0", g.port)) {
        err << "error: cannot listen on port " << g.port << '\n';
        return kDomainError;
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace nmir
