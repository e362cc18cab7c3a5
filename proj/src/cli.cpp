#include "hangman/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "hangman/generators.hpp"
#include "hangman/graphs.hpp"
#include "hangman/http_api.hpp"
#include "hangman/service.hpp"
#include "hangman/solver.hpp"
#include "hangman/strategies.hpp"
#include "hangman/text.hpp"

namespace hangman {

namespace {

using nlohmann::json;

struct Options {
  std::string lexicon;
  std::string graph;
  std::string setter = "greedy";
  std::string output;
  std::string lexicon_dir;
  std::size_t m = 2;
  int max_fails = 6;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool json = false;
  bool brute = false;
  int port = 0;
};

// A path to a lexicon file, or a service reference such as "adversarial:m=2".
NamedLexicon load_lexicon(const std::string& ref, const std::string& lexicon_dir) {
  if (ref.empty()) throw Error(Error::Kind::contract, "--lexicon is required");
  if (std::filesystem::is_regular_file(ref)) {
    return {ref, std::make_shared<const Lexicon>(read_lexicon_file(ref))};
  }
  if (ref.find(':') != std::string::npos) return resolve_lexicon(ref, lexicon_dir);
  throw Error(Error::Kind::contract, "cannot open lexicon '" + ref + "'");
}

std::string format_line(const PrincipalLine& line, std::size_t sigma) {
  std::string out;
  for (const auto& move : line) {
    if (!out.empty()) out += ' ';
    out += format_symbol(move.guess, sigma) + ":" + format_positions(move.reveal);
  }
  return out;
}

json line_json(const PrincipalLine& line, std::size_t sigma) {
  json arr = json::array();
  for (const auto& move : line) {
    arr.push_back(json{{"guess", format_symbol(move.guess, sigma)}, {"reveal", move.reveal}});
  }
  return arr;
}

void emit_lexicon(const Lexicon& lexicon, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    write_lexicon(out, lexicon);
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw Error(Error::Kind::contract, "cannot write '" + opt.output + "'");
  write_lexicon(file, lexicon);
  if (opt.json) {
    out << json{{"path", opt.output}, {"words", lexicon.size()}}.dump() << '\n';
  } else {
    out << "words=" << lexicon.size() << "\npath=" << opt.output << '\n';
  }
}

int cmd_solve(const Options& opt, std::ostream& out) {
  auto named = load_lexicon(opt.lexicon, opt.lexicon_dir);
  const auto report = opt.brute ? brute_force_solve(*named.lexicon) : solve(*named.lexicon);
  const auto sigma = named.lexicon->sigma();
  if (opt.json) {
    out << json{{"value", report.value},
                {"states_expanded", report.states_expanded},
                {"table_size", report.table_size},
                {"principal_line", line_json(report.principal_line, sigma)}}
               .dump()
        << '\n';
  } else {
    out << "value=" << report.value << "\nstates_expanded=" << report.states_expanded
        << "\ntable_size=" << report.table_size
        << "\nline=" << format_line(report.principal_line, sigma) << '\n';
  }
  return kExitOk;
}

int cmd_eval_greedy(const Options& opt, std::ostream& out) {
  auto named = load_lexicon(opt.lexicon, opt.lexicon_dir);
  const auto result = evaluate_setter(GameState::fresh(named.lexicon), GreedySetter{});
  const auto sigma = named.lexicon->sigma();
  if (opt.json) {
    out << json{{"value", result.value},
                {"principal_line", line_json(result.principal_line, sigma)}}
               .dump()
        << '\n';
  } else {
    out << "value=" << result.value << "\nline=" << format_line(result.principal_line, sigma)
        << '\n';
  }
  return kExitOk;
}

int cmd_verify_reduction(const Options& opt, std::ostream& out) {
  if (opt.graph.empty()) throw Error(Error::Kind::contract, "--graph is required");
  const auto instance = build_reduction(load_graph(opt.graph));
  bool equivalence = true;
  for (int d = 0; d <= static_cast<int>(instance.graph.size()); ++d) {
    equivalence = equivalence && verify_domination_equivalence(instance, d);
  }
  const bool ok = instance.holds() && equivalence;
  if (opt.json) {
    out << json{{"n", instance.graph.size()},
                {"gamma", instance.gamma},
                {"value", instance.game_value},
                {"ok", ok}}
               .dump()
        << '\n';
  } else {
    out << "gamma=" << instance.gamma << " value=" << instance.game_value << ' '
        << (ok ? "ok" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitDomain;
}

int cmd_verify_separation(const Options& opt, std::ostream& out) {
  const auto report = verify_separation(opt.m);
  if (opt.json) {
    out << json{{"m", report.m},
                {"greedy", report.greedy_value},
                {"optimal", report.optimal_value},
                {"ok", report.holds()}}
               .dump()
        << '\n';
  } else {
    out << "greedy=" << report.greedy_value << " optimal=" << report.optimal_value << ' '
        << (report.holds() ? "ok" : "FAIL") << '\n';
  }
  return report.holds() ? kExitOk : kExitDomain;
}

int cmd_play(const Options& opt, std::istream& in, std::ostream& out) {
  ServiceConfig config;
  config.lexicon_dir = opt.lexicon_dir;
  std::string ref = opt.lexicon;
  if (std::filesystem::is_regular_file(ref)) {
    const std::filesystem::path path(ref);
    config.lexicon_dir = path.has_parent_path() ? path.parent_path().string() : ".";
    ref = "file:" + path.filename().string();
  }
  GameService service(config);
  CreateRequest request{ref, opt.setter, opt.max_fails, std::nullopt};
  if (opt.seed_given) request.seed = opt.seed;
  const auto snap = service.create(request);
  out << "lexicon=" << snap.lexicon << " setter=" << snap.setter << " k=" << snap.k
      << " sigma=" << snap.sigma << " max_fails=" << snap.max_fails << '\n';
  out << "mask=" << snap.mask << '\n';

  std::string line;
  SessionStatus status = SessionStatus::active;
  while (status == SessionStatus::active && std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string symbol;
    if (!(tokens >> symbol)) continue;
    try {
      const auto turn = service.guess(snap.id, symbol);
      status = turn.status;
      out << "guess=" << symbol << " mask=" << turn.mask << " failed=" << turn.failed
          << " status=" << to_string(turn.status) << '\n';
    } catch (const ServiceError& e) {
      out << "guess=" << symbol << " rejected: " << e.what() << '\n';
    }
  }
  out << "status=" << to_string(status) << '\n';
  if (status != SessionStatus::active) out << "word=" << service.reveal(snap.id) << '\n';
  return kExitOk;
}

int cmd_serve(Options opt, std::ostream& out) {
  if (opt.port == 0) {
    if (const char* env = std::getenv("HANGMAN_PORT")) opt.port = std::atoi(env);
  }
  if (opt.port == 0) opt.port = 8080;
  if (opt.port < 0 || opt.port > 65535) throw Error(Error::Kind::contract, "bad port");
  ServiceConfig config;
  config.lexicon_dir = opt.lexicon_dir;
  GameService service(config);
  out << "listening on 0.0.0.0:" << opt.port << std::endl;
  if (!serve_http(service, "0.0.0.0", opt.port)) {
    throw Error(Error::Kind::contract, "cannot listen on port " + std::to_string(opt.port));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Hangman / Evil Hangman engine"};
  app.require_subcommand(1);
  Options opt;

  auto add_lexicon = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", opt.lexicon, "Lexicon file or reference (e.g. adversarial:m=2)")
        ->required();
    cmd->add_option("--lexicon-dir", opt.lexicon_dir, "Directory for file: references");
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "Structured output");
  };

  auto* play = app.add_subcommand("play", "Play from stdin guesses, printing a transcript");
  add_lexicon(play);
  play->add_option("--setter", opt.setter, "honest, greedy or optimal")
      ->check(CLI::IsMember({"honest", "greedy", "optimal"}));
  play->add_option("-d", opt.max_fails, "Allowed failed guesses")->check(CLI::NonNegativeNumber);
  play->add_option("--seed", opt.seed, "Secret selection seed (honest setter)")
      ->each([&](const std::string&) { opt.seed_given = true; });

  auto* solve_cmd = app.add_subcommand("solve", "Exact game value against the optimal setter");
  add_lexicon(solve_cmd);
  add_json(solve_cmd);
  solve_cmd->add_flag("--brute", opt.brute, "Use the unmemoized reference evaluator");

  auto* eval = app.add_subcommand("eval-greedy", "Guesser loss against the greedy setter");
  add_lexicon(eval);
  add_json(eval);

  auto* gen = app.add_subcommand("gen", "Generate lexicons");
  gen->require_subcommand(1);
  auto* adversarial = gen->add_subcommand("adversarial", "Anti-greedy family");
  adversarial->add_option("-m", opt.m, "Family parameter")->required()->check(CLI::PositiveNumber);
  adversarial->add_option("-o", opt.output, "Output path (default stdout)");
  add_json(adversarial);

  auto* encode = app.add_subcommand("encode-graph", "Proper encoding of a cubic graph");
  encode->add_option("--graph", opt.graph, "Graph file or k4|k33|cube|petersen")->required();
  encode->add_option("-o", opt.output, "Output path (default stdout)");
  add_json(encode);

  auto* verify = app.add_subcommand("verify", "Check constructions against the solver");
  verify->require_subcommand(1);
  auto* reduction = verify->add_subcommand("reduction", "value = gamma - 1 on a graph encoding");
  reduction->add_option("--graph", opt.graph, "Graph file or k4|k33|cube|petersen")->required();
  add_json(reduction);
  auto* separation = verify->add_subcommand("separation", "Greedy 0 versus optimal m");
  separation->add_option("-m", opt.m, "Family parameter (<= 3)")->required()->check(CLI::PositiveNumber);
  add_json(separation);

  auto* serve = app.add_subcommand("serve", "Run the HTTP game service");
  serve->add_option("--port", opt.port, "Listen port (env HANGMAN_PORT)");
  serve->add_option("--lexicon-dir", opt.lexicon_dir, "Directory for file: lexicons");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (play->parsed()) return cmd_play(opt, in, out);
    if (solve_cmd->parsed()) return cmd_solve(opt, out);
    if (eval->parsed()) return cmd_eval_greedy(opt, out);
    if (adversarial->parsed()) {
      emit_lexicon(adversarial_family(opt.m), opt, out);
      return kExitOk;
    }
    if (encode->parsed()) {
      emit_lexicon(proper_encode(load_graph(opt.graph)), opt, out);
      return kExitOk;
    }
    if (reduction->parsed()) return cmd_verify_reduction(opt, out);
    if (separation->parsed()) return cmd_verify_separation(opt, out);
    if (serve->parsed()) return cmd_serve(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ServiceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace hangman
