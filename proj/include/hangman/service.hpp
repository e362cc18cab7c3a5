#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hangman/core.hpp"
#include "hangman/solver.hpp"

namespace hangman {

/// Failure of a service call; `kind` selects the wire status code.
class ServiceError : public std::runtime_error {
 public:
  enum class Kind { not_found, conflict, invalid };

  ServiceError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct NamedLexicon {
  std::string name;
  std::shared_ptr<const Lexicon> lexicon;
};

/// Resolves "builtin:fig1", "builtin:fig2", "adversarial:m=<m>", "graph:<k4|k33|cube|petersen>"
/// or "file:<name>" (a file inside `lexicon_dir`). Throws ServiceError(invalid).
NamedLexicon resolve_lexicon(std::string_view ref, const std::string& lexicon_dir);

/// Every reference that resolve_lexicon accepts without arguments, plus files in the directory.
std::vector<std::string> available_lexicons(const std::string& lexicon_dir);

enum class SessionStatus { active, guesser_won, setter_won };
std::string_view to_string(SessionStatus s);

struct CreateRequest {
  std::string lexicon;
  std::string setter;
  int max_fails = 0;
  std::optional<std::uint64_t> seed;
};

struct SessionSnapshot {
  std::string id;
  std::string lexicon;
  std::string setter;
  std::size_t k = 0;
  std::size_t sigma = 0;
  std::string mask;
  int failed = 0;
  int max_fails = 0;
  std::vector<std::string> remaining;
  std::vector<std::string> guessed;
  std::size_t consistent_count = 0;
  SessionStatus status = SessionStatus::active;
  std::optional<std::string> word;  // set once the game is over
};

struct TurnResult {
  std::string mask;
  int failed = 0;
  SessionStatus status = SessionStatus::active;
  Positions revealed_positions;
};

struct ServiceConfig {
  std::string lexicon_dir;
  std::chrono::seconds idle_timeout{3600};
};

/// In-memory game sessions. Calls on distinct sessions run concurrently; calls
/// on one session are serialized by that session's lock.
class GameService {
 public:
  using Clock = std::chrono::steady_clock;

  explicit GameService(ServiceConfig config = {});
  ~GameService();

  GameService(const GameService&) = delete;
  GameService& operator=(const GameService&) = delete;

  SessionSnapshot create(const CreateRequest& request);
  TurnResult guess(const std::string& id, std::string_view symbol);
  SessionSnapshot info(const std::string& id);

  /// Ends an active game in the setter's favour and returns the revealed word.
  std::string concede(const std::string& id);

  /// Word of a finished game: the honest secret, else the first consistent word.
  std::string reveal(const std::string& id);

  std::vector<std::string> lexicons() const;
  const ServiceConfig& config() const noexcept { return config_; }

  /// Drops sessions idle since before now - idle_timeout. Returns the number dropped.
  std::size_t evict_idle(Clock::time_point now);
  std::size_t session_count() const;

 private:
  struct Session;

  std::shared_ptr<Session> find(const std::string& id);
  std::string next_id();

  ServiceConfig config_;
  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t id_state_;
};

}  // namespace hangman
