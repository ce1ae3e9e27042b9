#include "nmir/api_server.hpp"

#include "httplib.h"
#include "nmir/engine.hpp"
#include "nmir/error.hpp"

namespace nmir {

using json = nlohmann::ordered_json;

namespace {

void send_json(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& message) {
  send_json(res, json{{"error", message}}, status);
}

TermSet terms_from(const json& value) {
  if (value.is_string()) return parse_term_set(value.get<std::string>());
  if (value.is_array()) {
    TermSet out;
    for (const auto& t : value) {
      if (!t.is_string()) throw DomainError("terms must be strings");
      out.insert(t.get<std::string>());
    }
    return out;
  }
  throw DomainError("terms must be a string or an array of strings");
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("invalid JSON body: ") + e.what());
  }
}

std::optional<std::uint64_t> expected_version(const json& body) {
  if (!body.contains("expected_version")) return std::nullopt;
  if (!body.at("expected_version").is_number_unsigned())
    throw DomainError("expected_version must be a non-negative integer");
  return body.at("expected_version").get<std::uint64_t>();
}

// Maps engine exceptions onto status codes.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const VersionConflict& e) {
      send_json(res, json{{"error", e.what()}, {"version", e.actual()}}, 409);
    } catch (const Error& e) {
      send_error(res, 400, e.what());
    } catch (const nlohmann::json::exception& e) {
      send_error(res, 400, e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, e.what());
    }
  };
}

}  // namespace

ApiServer::ApiServer(Session session, std::optional<std::filesystem::path> persist_to)
    : session_(std::move(session)),
      persist_to_(std::move(persist_to)),
      server_(std::make_unique<httplib::Server>()) {
  install_routes();
}

ApiServer::~ApiServer() { stop(); }

bool ApiServer::listen(const std::string& host, int port) { return server_->listen(host, port); }

int ApiServer::bind_to_any_port(const std::string& host) { return server_->bind_to_any_port(host); }

bool ApiServer::listen_after_bind() { return server_->listen_after_bind(); }

void ApiServer::wait_until_ready() const { server_->wait_until_ready(); }

void ApiServer::stop() {
  if (server_) server_->stop();
}

Session ApiServer::snapshot() const {
  std::lock_guard lock(mutex_);
  return session_;
}

void ApiServer::commit(Session next) {
  if (persist_to_) write_session_file(*persist_to_, next);
  session_ = std::move(next);
}

void ApiServer::install_routes() {
  auto& s = *server_;
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  s.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  s.Get("/api/session", guarded([this](const httplib::Request&, httplib::Response& res) {
          send_json(res, session_json(snapshot()));
        }));

  // Body is the corpus CSV; ?expected_version=n is optional.
  s.Post("/api/session", guarded([this](const httplib::Request& req, httplib::Response& res) {
           auto corpus = parse_corpus(req.body);
           std::lock_guard lock(mutex_);
           if (req.has_param("expected_version")) {
             const auto expected = std::stoull(req.get_param_value("expected_version"));
             if (expected != session_.version) throw VersionConflict(expected, session_.version);
           }
           commit(session_.with_corpus(std::move(corpus)));
           send_json(res, session_json(session_));
         }));

  s.Post(R"(/api/documents/([^/]+)/label)",
         guarded([this](const httplib::Request& req, httplib::Response& res) {
           const std::string id = req.matches[1];
           const auto body = parse_body(req);
           if (!body.contains("label") || !body.at("label").is_string())
             throw DomainError("body needs a string 'label'");
           const Label label = parse_label(body.at("label").get<std::string>());
           const auto expected = expected_version(body);
           std::lock_guard lock(mutex_);
           if (expected && *expected != session_.version)
             throw VersionConflict(*expected, session_.version);
           commit(session_.with_label(id, label));
           const auto& doc = session_.corpus.document(id);
           send_json(res, json{{"version", session_.version},
                               {"document",
                                {{"id", doc.id},
                                 {"label", std::string(1, label_symbol(doc.label))}}}});
         }));

  s.Get("/api/query", guarded([this](const httplib::Request& req, httplib::Response& res) {
          if (!req.has_param("terms")) throw DomainError("missing 'terms' parameter");
          send_json(res, query_json(snapshot(), parse_term_set(req.get_param_value("terms"))));
        }));

  s.Post("/api/score", guarded([this](const httplib::Request& req, httplib::Response& res) {
           const auto body = parse_body(req);
           if (!body.contains("terms")) throw DomainError("body needs 'terms'");
           std::optional<double> smoothing;
           if (body.contains("smoothing")) {
             if (!body.at("smoothing").is_number()) throw DomainError("smoothing must be a number");
             smoothing = body.at("smoothing").get<double>();
           }
           std::optional<LogBase> base;
           if (body.contains("log_base")) {
             const auto& b = body.at("log_base");
             base = parse_log_base(b.is_string() ? b.get<std::string>() : b.dump());
           }
           send_json(res, score_json(snapshot(), terms_from(body.at("terms")), smoothing, base));
         }));

  // Read-only variant: ?terms=a,b&smoothing=s&log_base=e|10.
  s.Get("/api/score", guarded([this](const httplib::Request& req, httplib::Response& res) {
          if (!req.has_param("terms")) throw DomainError("missing 'terms' parameter");
          std::optional<double> smoothing;
          if (req.has_param("smoothing")) {
            try {
              smoothing = std::stod(req.get_param_value("smoothing"));
            } catch (const std::logic_error&) {
              throw DomainError("smoothing must be a number");
            }
          }
          std::optional<LogBase> base;
          if (req.has_param("log_base")) base = parse_log_base(req.get_param_value("log_base"));
          send_json(res, score_json(snapshot(), parse_term_set(req.get_param_value("terms")),
                                    smoothing, base));
        }));

  s.Get("/api/ordering",guarded([this](const httplib::Request& req, httplib::Response& res) {
          const auto kind = req.has_param("kind") ? req.get_param_value("kind") : "combined";
          send_json(res, ordering_json(snapshot(), parse_ordering_choice(kind)));
        }));

  // ?max_size=k or ?sets=t1;t1&t2 selects the rows/columns.
  s.Get("/api/eum/table", guarded([this](const httplib::Request& req, httplib::Response& res) {
          const auto session = snapshot();
          const auto weights = effective_weights(session);
          std::vector<TermSet> sets;
          if (req.has_param("sets")) {
            const auto spec = req.get_param_value("sets");
            std::size_t start = 0;
            while (start <= spec.size()) {
              auto end = spec.find(';', start);
              if (end == std::string::npos) end = spec.size();
              auto set = parse_term_set(std::string_view(spec).substr(start, end - start));
              if (!set.empty()) sets.push_back(std::move(set));
              start = end + 1;
            }
          } else {
            std::size_t max_size = 2;
            if (req.has_param("max_size")) max_size = std::stoul(req.get_param_value("max_size"));
            sets = default_table_sets(weights, max_size);
          }
          auto body = eum_table_json(weights, sets);
          body["version"] = session.version;
          body["weights_source"] = session.weights ? "session" : "default";
          send_json(res, body);
        }));

  // {"source": "eum", "terms": [...]} or {"source": "relation", "relation": "<text>"}
  s.Post("/api/audit", guarded([this](const httplib::Request& req, httplib::Response& res) {
           const auto body = parse_body(req);
           AuditRequest request;
           if (body.contains("rules")) {
             request.rules.clear();
             for (const auto& r : body.at("rules")) request.rules.push_back(parse_rule(r.get<std::string>()));
           }
           if (body.contains("loop_bound"))
             request.options.loop_bound = body.at("loop_bound").get<std::size_t>();
           const std::string source = body.value("source", std::string("eum"));
           RuleReport report;
           if (source == "relation") {
             if (!body.contains("relation")) throw DomainError("body needs 'relation' text");
             report = audit_rules(parse_relation(body.at("relation").get<std::string>()),
                                  request.rules, request.options);
           } else if (source == "eum") {
             const auto session = snapshot();
             const auto weights = effective_weights(session);
             std::vector<Term> terms = weights.terms();
             if (body.contains("terms")) {
               const auto set = terms_from(body.at("terms"));
               terms.clear();
               for (const auto& t : weights.terms())
                 if (set.count(t)) terms.push_back(t);
               if (terms.size() != set.size()) throw DomainError("audit terms must all carry weights");
             }
             report = audit_eum(weights, terms, request);
           } else {
             throw DomainError("source must be 'eum' or 'relation'");
           }
           send_json(res, audit_json(report));
         }));
}

}  // namespace nmir
