#include "hangman/service.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <random>

#include "hangman/generators.hpp"
#include "hangman/graphs.hpp"
#include "hangman/strategies.hpp"
#include "hangman/text.hpp"

namespace hangman {

namespace {

constexpr std::string_view kFig1Words =
    "sigma=26\n"
    "bun\nfun\ngun\npun\nrun\nsun\nfan\nfin\nfit\nfat\ntan\nten\ntin\nton\nnut\nhut\nhat\n";

constexpr std::string_view kFig2Words = "abbc\nabcb\nabcc\ndddd\neeee\n";

ServiceError invalid(const std::string& what) {
  return ServiceError(ServiceError::Kind::invalid, what);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

NamedLexicon resolve_lexicon(std::string_view ref, const std::string& lexicon_dir) {
  const auto colon = ref.find(':');
  if (colon == std::string_view::npos) throw invalid("lexicon reference needs a 'kind:' prefix");
  const auto kind = ref.substr(0, colon);
  const auto arg = ref.substr(colon + 1);
  try {
    if (kind == "builtin") {
      if (arg == "fig1") return {std::string(ref), std::make_shared<const Lexicon>(parse_lexicon(kFig1Words))};
      if (arg == "fig2") return {std::string(ref), std::make_shared<const Lexicon>(parse_lexicon(kFig2Words))};
    } else if (kind == "adversarial" && arg.starts_with("m=")) {
      std::size_t m = 0;
      const auto digits = arg.substr(2);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
      if (ec == std::errc{} && ptr == digits.data() + digits.size()) {
        return {std::string(ref), std::make_shared<const Lexicon>(adversarial_family(m))};
      }
    } else if (kind == "graph") {
      if (auto g = builtin_graph(arg)) {
        return {std::string(ref), std::make_shared<const Lexicon>(proper_encode(*g))};
      }
    } else if (kind == "file") {
      const std::string name(arg);
      if (lexicon_dir.empty()) throw invalid("no lexicon directory configured");
      if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos) {
        throw invalid("bad lexicon file name");
      }
      const auto path = std::filesystem::path(lexicon_dir) / name;
      if (!std::filesystem::is_regular_file(path)) throw invalid("no lexicon file '" + name + "'");
      return {std::string(ref), std::make_shared<const Lexicon>(read_lexicon_file(path.string()))};
    }
  } catch (const Error& e) {
    throw invalid(e.what());
  }
  throw invalid("unknown lexicon '" + std::string(ref) + "'");
}

std::vector<std::string> available_lexicons(const std::string& lexicon_dir) {
  std::vector<std::string> out{"builtin:fig1", "builtin:fig2", "adversarial:m=1",
                               "adversarial:m=2", "adversarial:m=3"};
  for (const auto& g : builtin_graph_names()) out.push_back("graph:" + g);
  if (!lexicon_dir.empty() && std::filesystem::is_directory(lexicon_dir)) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(lexicon_dir)) {
      if (entry.is_regular_file()) files.push_back("file:" + entry.path().filename().string());
    }
    std::sort(files.begin(), files.end());
    out.insert(out.end(), files.begin(), files.end());
  }
  return out;
}

std::string_view to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::active: return "active";
    case SessionStatus::guesser_won: return "guesser_won";
    case SessionStatus::setter_won: return "setter_won";
  }
  return "active";
}

struct GameService::Session {
  std::mutex mutex;
  std::string id;
  NamedLexicon lexicon;
  GameState state;
  std::unique_ptr<SetterStrategy> setter;
  std::optional<Word> secret;
  int max_fails = 0;
  SessionStatus status = SessionStatus::active;
  Clock::time_point last_access;

  std::string word_text() const {
    const Word& w = secret ? *secret : (*state.lexicon)[state.consistent.front()];
    return format_word(w, lexicon.lexicon->sigma());
  }

  SessionSnapshot snapshot() const {
    const std::size_t sigma = lexicon.lexicon->sigma();
    SessionSnapshot s;
    s.id = id;
    s.lexicon = lexicon.name;
    s.setter = std::string(setter->name());
    s.k = lexicon.lexicon->word_length();
    s.sigma = sigma;
    s.mask = format_mask(state.mask, sigma);
    s.failed = state.failed;
    s.max_fails = max_fails;
    for (auto sym : state.remaining.members()) s.remaining.push_back(format_symbol(sym, sigma));
    for (auto sym : state.guessed.members()) s.guessed.push_back(format_symbol(sym, sigma));
    s.consistent_count = state.consistent.size();
    s.status = status;
    if (status != SessionStatus::active) s.word = word_text();
    return s;
  }
};

GameService::GameService(ServiceConfig config) : config_(std::move(config)) {
  std::random_device rd;
  id_state_ = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

GameService::~GameService() = default;

std::string GameService::next_id() {
  static constexpr char kHex[] = "0123456789abcdef";
  std::uint64_t v = splitmix64(id_state_);
  std::string id(16, '0');
  for (auto& c : id) {
    c = kHex[v & 0xF];
    v >>= 4;
  }
  return id;
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw ServiceError(ServiceError::Kind::not_found, "unknown session '" + id + "'");
  }
  return it->second;
}

SessionSnapshot GameService::create(const CreateRequest& request) {
  if (!is_setter_name(request.setter)) throw invalid("unknown setter '" + request.setter + "'");
  if (request.max_fails < 0) throw invalid("max_fails must be non-negative");

  auto session = std::make_shared<Session>();
  session->lexicon = resolve_lexicon(request.lexicon, config_.lexicon_dir);
  session->state = GameState::fresh(session->lexicon.lexicon);
  session->max_fails = request.max_fails;

  if (request.setter == "honest") {
    std::mt19937_64 rng(request.seed ? *request.seed : std::random_device{}());
    const auto n = session->lexicon.lexicon->size();
    session->secret = (*session->lexicon.lexicon)[static_cast<std::size_t>(rng() % n)];
  } else if (request.setter == "optimal" && !within_limits(*session->lexicon.lexicon)) {
    throw invalid("lexicon exceeds the optimal setter's solver limits");
  }
  session->setter = make_setter(request.setter, session->lexicon.lexicon, session->secret);
  session->last_access = Clock::now();

  evict_idle(Clock::now());
  std::lock_guard lock(sessions_mutex_);
  do {
    session->id = next_id();
  } while (sessions_.contains(session->id));
  sessions_.emplace(session->id, session);
  return session->snapshot();
}

TurnResult GameService::guess(const std::string& id, std::string_view symbol) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->last_access = Clock::now();
  if (session->status != SessionStatus::active) {
    throw ServiceError(ServiceError::Kind::conflict, "game is finished");
  }
  const std::size_t sigma = session->lexicon.lexicon->sigma();
  Symbol s;
  try {
    s = parse_symbol(symbol, sigma);
  } catch (const Error& e) {
    throw invalid(e.what());
  }
  if (session->state.guessed.contains(s)) {
    throw ServiceError(ServiceError::Kind::conflict, "symbol already guessed");
  }

  Positions reveal = session->setter->answer(session->state, s);
  session->state = apply_answer(session->state, s, reveal);
  if (session->state.mask.complete()) {
    session->status = SessionStatus::guesser_won;
  } else if (session->state.failed > session->max_fails) {
    session->status = SessionStatus::setter_won;
  }
  return TurnResult{format_mask(session->state.mask, sigma), session->state.failed,
                    session->status, std::move(reveal)};
}

SessionSnapshot GameService::info(const std::string& id) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->last_access = Clock::now();
  return session->snapshot();
}

std::string GameService::concede(const std::string& id) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->last_access = Clock::now();
  if (session->status == SessionStatus::active) session->status = SessionStatus::setter_won;
  return session->word_text();
}

std::string GameService::reveal(const std::string& id) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->last_access = Clock::now();
  if (session->status == SessionStatus::active) {
    throw ServiceError(ServiceError::Kind::conflict, "game is still active; concede first");
  }
  return session->word_text();
}

std::vector<std::string> GameService::lexicons() const {
  return available_lexicons(config_.lexicon_dir);
}

std::size_t GameService::evict_idle(Clock::time_point now) {
  std::lock_guard lock(sessions_mutex_);
  return std::erase_if(sessions_, [&](const auto& entry) {
    std::lock_guard session_lock(entry.second->mutex);
    return now - entry.second->last_access > config_.idle_timeout;
  });
}

std::size_t GameService::session_count() const {
  std::lock_guard lock(sessions_mutex_);
  return sessions_.size();
}

}  // namespace hangman
