#pragma once

#include <string>

namespace httplib {
class Server;
}

namespace hangman {

class GameService;

/// Mounts the game routes on `server`:
///   POST /games, POST /games/{id}/guess, GET /games/{id},
///   POST /games/{id}/concede, GET /lexicons
/// Bodies are JSON objects. 404 unknown session, 409 rule violation, 422 malformed input.
void register_routes(httplib::Server& server, GameService& service);

/// Blocks serving on host:port until the process is stopped. Returns false if binding fails.
bool serve_http(GameService& service, const std::string& host, int port);

}  // namespace hangman
