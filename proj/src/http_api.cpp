#include "hangman/http_api.hpp"

#include <httplib.h>
#include <json.hpp>

#include "hangman/service.hpp"

namespace hangman {

namespace {

using nlohmann::json;

json to_json(const SessionSnapshot& s) {
  json j{
      {"id", s.id},
      {"lexicon", s.lexicon},
      {"setter", s.setter},
      {"k", s.k},
      {"sigma", s.sigma},
      {"mask", s.mask},
      {"failed", s.failed},
      {"max_fails", s.max_fails},
      {"remaining", s.remaining},
      {"guessed", s.guessed},
      {"consistent_count", s.consistent_count},
      {"status", std::string(to_string(s.status))},
  };
  if (s.word) j["word"] = *s.word;
  return j;
}

json to_json(const TurnResult& t) {
  return json{
      {"mask", t.mask},
      {"failed", t.failed},
      {"status", std::string(to_string(t.status))},
      {"revealed_positions", t.revealed_positions},
  };
}

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

int status_of(ServiceError::Kind kind) {
  switch (kind) {
    case ServiceError::Kind::not_found: return 404;
    case ServiceError::Kind::conflict: return 409;
    case ServiceError::Kind::invalid: return 422;
  }
  return 500;
}

// Runs a handler body, mapping service errors and malformed JSON to status codes.
template <class Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const ServiceError& e) {
    reply(res, status_of(e.kind()), json{{"error", e.what()}});
  } catch (const json::exception& e) {
    reply(res, 422, json{{"error", std::string("malformed body: ") + e.what()}});
  } catch (const Error& e) {
    const int code = e.kind() == Error::Kind::repeated_guess ? 409 : 422;
    reply(res, code, json{{"error", e.what()}});
  }
}

json parse_body(const httplib::Request& req) {
  json body = req.body.empty() ? json::object() : json::parse(req.body);
  if (!body.is_object()) throw ServiceError(ServiceError::Kind::invalid, "body must be an object");
  return body;
}

}  // namespace

void register_routes(httplib::Server& server, GameService& service) {
  server.Post("/games", [&service](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const json body = parse_body(req);
      CreateRequest create;
      create.lexicon = body.at("lexicon").get<std::string>();
      create.setter = body.at("setter").get<std::string>();
      create.max_fails = body.at("max_fails").get<int>();
      if (body.contains("seed") && !body["seed"].is_null()) {
        create.seed = body["seed"].get<std::uint64_t>();
      }
      reply(res, 201, to_json(service.create(create)));
    });
  });

  server.Post(R"(/games/([^/]+)/guess)", [&service](const httplib::Request& req,
                                                    httplib::Response& res) {
    guarded(res, [&] {
      const json body = parse_body(req);
      const json& sym = body.at("symbol");
      const std::string text = sym.is_number_unsigned() ? std::to_string(sym.get<std::uint64_t>())
                                                        : sym.get<std::string>();
      reply(res, 200, to_json(service.guess(req.matches[1].str(), text)));
    });
  });

  server.Get(R"(/games/([^/]+))", [&service](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { reply(res, 200, to_json(service.info(req.matches[1].str()))); });
  });

  server.Post(R"(/games/([^/]+)/concede)", [&service](const httplib::Request& req,
                                                      httplib::Response& res) {
    guarded(res, [&] {
      const std::string id = req.matches[1].str();
      const std::string word = service.concede(id);
      json out = to_json(service.info(id));
      out["word"] = word;
      reply(res, 200, out);
    });
  });

  server.Get("/lexicons", [&service](const httplib::Request&, httplib::Response& res) {
    reply(res, 200, json{{"lexicons", service.lexicons()}});
  });
}

bool serve_http(GameService& service, const std::string& host, int port) {
  httplib::Server server;
  register_routes(server, service);
  return server.listen(host, port);
}

}  // namespace hangman
