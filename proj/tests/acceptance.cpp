// Standalone acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <thread>

#include "hangman/core.hpp"
#include "hangman/generators.hpp"
#include "hangman/graphs.hpp"
#include "hangman/http_api.hpp"
#include "hangman/service.hpp"
#include "hangman/solver.hpp"
#include "hangman/strategies.hpp"
#include "hangman/text.hpp"
#include "oracle.hpp"

using namespace hangman;
using nlohmann::json;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    body();
  } catch (const Failure& f) {
    ok = false;
    detail = f.what;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && elapsed > limit_seconds) {
    ok = false;
    detail = "took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_seconds) + " s";
  }
  if (!ok) ++failures;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << std::to_string(elapsed).substr(0, 6) << " s)";
  if (!detail.empty()) std::cout << ": " << detail;
  std::cout << std::endl;
}

std::shared_ptr<const Lexicon> letters(const std::string& text) {
  return std::make_shared<const Lexicon>(parse_lexicon(text));
}

std::vector<Mask> all_masks(std::size_t k, std::size_t sigma) {
  std::vector<Mask> out;
  std::vector<SymbolId> cells(k, 0);
  while (true) {
    out.emplace_back(cells);
    std::size_t i = 0;
    while (i < k && cells[i] == sigma) cells[i++] = 0;
    if (i == k) break;
    ++cells[i];
  }
  return out;
}

void mask_laws() {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto masks = all_masks(k, 3);
    expect(masks.size() == std::size_t{1} << (2 * k), "mask count");
    for (const auto& a : masks) {
      expect(precedes(a, a), "reflexivity");
      for (const auto& b : masks) {
        if (precedes(a, b) && precedes(b, a)) expect(a == b, "antisymmetry");
        const auto lo = meet(a, b);
        const auto hi = overlay(a, b);
        expect(precedes(lo, a) && precedes(lo, b), "meet is a lower bound");
        expect(precedes(a, hi), "overlay extends its first argument");
        for (const auto& c : masks) {
          if (precedes(a, b) && precedes(b, c)) expect(precedes(a, c), "transitivity");
          if (precedes(c, a) && precedes(c, b)) expect(precedes(c, lo), "meet is the greatest lower bound");
          if (precedes(a, c) && precedes(b, c)) expect(precedes(hi, c), "overlay is the least upper bound");
        }
        if (b.complete() && precedes(a, b)) {
          const Word w(b);
          for (SymbolId s = 1; s <= 3; ++s) {
            const auto r = reveal_with_word(a, w, Symbol(s));
            expect(precedes(a, r) && precedes(r, b), "reveal_with_word sandwich");
          }
        }
      }
    }
  }
}

void anti_greedy_replay() {
  const auto l = letters("abbc\nabcb\nabcc\ndddd\neeee\n");
  const auto start = GameState::fresh(l);
  const Symbol a(1);

  const auto g = greedy_answer(start, a);
  expect(g == Positions{1}, "greedy reveals " + format_positions(g));
  expect(apply_answer(start, a, g).consistent.size() == 3, "greedy leaves three words");

  Solver solver(l);
  const auto o = optimal_answer(start, a, solver);
  expect(o.empty(), "optimal reveals " + format_positions(o));
  const auto after = apply_answer(start, a, o);
  expect(after.consistent.size() == 2, "optimal leaves two words");
  expect(after.failed == 1, "the rejection costs one guess");
  expect(evaluate_setter(start, GreedySetter{}).value == 0, "greedy costs nothing");
  expect(solver.value(start) == 2, "optimal forces two failures");
}

void separation() {
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto r = verify_separation(m);
    expect(r.greedy_value == 0, "m=" + std::to_string(m) + " greedy=" + std::to_string(r.greedy_value));
    expect(r.optimal_value == static_cast<int>(m),
           "m=" + std::to_string(m) + " optimal=" + std::to_string(r.optimal_value));
  }
}

void solver_vs_brute() {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 200; ++i) {
    const auto l = oracle::random_lexicon(rng, 6, 3, 5);
    const int fast = solve(l).value;
    const int slow = brute_force_solve(l).value;
    expect(fast == slow, "lexicon " + std::to_string(i) + ": solve=" + std::to_string(fast) +
                             " brute=" + std::to_string(slow) + "\n" + format_lexicon(l));
  }
}

void encoding_properness() {
  for (const auto& name : builtin_graph_names()) {
    const auto g = *builtin_graph(name);
    expect(is_proper_coloring(g, three_color(g)), name + " coloring");
    expect(properness_check(proper_encode(g)), name + " encoding");
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 4 + 2 * (seed % 6);
    const auto g = random_cubic(n, seed);
    expect(properness_check(proper_encode(g)), "random n=" + std::to_string(n) + " seed=" + std::to_string(seed));
  }
  expect(!properness_check(*letters("abcd\nbacd\ncabd\ndabc\n")), "non-proper encoding accepted");
  expect(properness_check(*letters("abcd\nbadc\ncdba\ndcab\n")), "proper encoding rejected");
}

void check_reduction(const CubicGraph& g, const std::string& label, std::size_t expected_gamma) {
  const auto r = build_reduction(g);
  if (expected_gamma) {
    expect(r.gamma == expected_gamma, label + " gamma=" + std::to_string(r.gamma));
  }
  expect(r.holds(), label + ": value=" + std::to_string(r.game_value) + " gamma=" + std::to_string(r.gamma));
  for (int d = 0; d <= static_cast<int>(g.size()); ++d) {
    expect(verify_domination_equivalence(g, d), label + " equivalence fails at d=" + std::to_string(d));
  }
}

void reduction() {
  check_reduction(*builtin_graph("k4"), "k4", 1);
  check_reduction(*builtin_graph("k33"), "k33", 2);
  check_reduction(*builtin_graph("petersen"), "petersen", 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 4 + 2 * (seed % 4);
    check_reduction(random_cubic(n, 1000 + seed), "random n=" + std::to_string(n), 0);
  }
}

void replay_soundness() {
  std::vector<std::shared_ptr<const Lexicon>> cases{
      letters("abbc\nabcb\nabcc\ndddd\neeee\n"),
      std::make_shared<const Lexicon>(adversarial_family(3)),
      std::make_shared<const Lexicon>(proper_encode(*builtin_graph("petersen"))),
  };
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    cases.push_back(std::make_shared<const Lexicon>(oracle::random_lexicon(rng, 6, 3, 5)));
  }
  for (const auto& l : cases) {
    const auto report = solve(*l);
    const int replayed = replay_fails(l, report.principal_line);
    expect(replayed == report.value, "replay " + std::to_string(replayed) + " vs value " +
                                         std::to_string(report.value) + "\n" + format_lexicon(*l));
  }
}

void service_conformance() {
  GameService service;
  httplib::Server server;
  register_routes(server, service);
  const int port = server.bind_to_any_port("127.0.0.1");
  expect(port > 0, "cannot bind");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  struct Stop {
    httplib::Server& s;
    std::thread& t;
    ~Stop() {
      s.stop();
      t.join();
    }
  } stop{server, thread};

  httplib::Client client("127.0.0.1", port);
  auto create = [&](const std::string& setter, int d) {
    const auto res = client.Post("/games",
                                 json{{"lexicon", "builtin:fig2"}, {"setter", setter}, {"max_fails", d}}.dump(),
                                 "application/json");
    expect(res && res->status == 201, "create " + setter);
    return json::parse(res->body).at("id").get<std::string>();
  };
  auto guess = [&](const std::string& id, const std::string& s) {
    const auto res = client.Post("/games/" + id + "/guess", json{{"symbol", s}}.dump(), "application/json");
    expect(res && res->status == 200, "guess " + s);
    return json::parse(res->body);
  };
  auto info = [&](const std::string& id) {
    const auto res = client.Get("/games/" + id);
    expect(res && res->status == 200, "info");
    return json::parse(res->body);
  };

  // Greedy: 'a' is revealed at position 1, and the guesser finishes with no loss.
  auto id = create("greedy", 0);
  auto t = guess(id, "a");
  expect(t.at("mask") == "a___" && t.at("failed") == 0, "greedy first answer " + t.dump());
  expect(info(id).at("consistent_count") == 3, "greedy leaves three words");
  guess(id, "b");
  t = guess(id, "c");
  expect(t.at("status") == "guesser_won" && t.at("failed") == 0, "greedy game " + t.dump());

  // Optimal: 'a' is rejected and a second failure can be forced.
  id = create("optimal", 1);
  t = guess(id, "a");
  expect(t.at("mask") == "____" && t.at("failed") == 1, "optimal first answer " + t.dump());
  expect(t.at("status") == "active", "one failure with d=1 keeps the game open");
  expect(info(id).at("consistent_count") == 2, "optimal leaves two words");
  t = guess(id, "d");
  expect(t.at("failed") == 2 && t.at("status") == "setter_won", "two failures with d=1 " + t.dump());
  const auto late = client.Post("/games/" + id + "/guess", R"({"symbol":"e"})", "application/json");
  expect(late && late->status == 409, "guess after the end");

  // With d=2 the same two failures are survivable and the guesser then wins.
  id = create("optimal", 2);
  guess(id, "a");
  t = guess(id, "d");
  expect(t.at("failed") == 2 && t.at("status") == "active", "two failures with d=2 " + t.dump());
  t = guess(id, "e");
  expect(t.at("mask") == "eeee" && t.at("status") == "guesser_won", "final guess " + t.dump());
}

}  // namespace

int main() {
  criterion("mask algebra laws, exhaustive k<=3 sigma<=3", 1.0, mask_laws);
  criterion("anti-greedy lexicon: greedy reveals {1} (3 left), optimal rejects (2 left)", 1.0,
            anti_greedy_replay);
  criterion("separation m=1..3: greedy loss 0, optimal loss m", 30.0, separation);
  criterion("solve == brute force on 200 random lexicons (n<=6, k<=3, sigma<=5)", 120.0, solver_vs_brute);
  criterion("proper encoding on built-in and 50 random cubic graphs; properness check examples", 10.0,
            encoding_properness);
  criterion("reduction value = domination number - 1, equivalence for all d", 300.0, reduction);
  criterion("principal line replay reproduces the solved value", 60.0, replay_soundness);
  criterion("service over HTTP: anti-greedy outcomes and more-than-d status rule", 30.0,
            service_conformance);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
