#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hangman/cli.hpp"
#include "hangman/text.hpp"

using hangman::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("hangman_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& body) const {
    const auto p = path / name;
    std::ofstream(p) << body;
    return p.string();
  }
};

}  // namespace

TEST_CASE("solve") {
  TempDir dir;
  const auto fig2 = dir.file("fig2.txt", "abbc\nabcb\nabcc\ndddd\neeee\n");
  auto r = run({"solve", "--lexicon", fig2});
  CHECK(r.code == hangman::kExitOk);
  CHECK(r.out.starts_with("value=2\n"));
  CHECK(r.out.find("line=a:{} d:{}") != std::string::npos);

  r = run({"solve", "--lexicon", fig2, "--brute"});
  CHECK(r.out.starts_with("value=2\n"));

  r = run({"solve", "--lexicon", "adversarial:m=2", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("value") == 2);
  CHECK(j.at("principal_line").size() == 2);
  CHECK(j.at("states_expanded").get<int>() > 0);

  // Same input, same output.
  CHECK(run({"solve", "--lexicon", fig2}).out == run({"solve", "--lexicon", fig2}).out);
}

TEST_CASE("eval-greedy") {
  auto r = run({"eval-greedy", "--lexicon", "builtin:fig2"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("value=0\n"));
  r = run({"eval-greedy", "--lexicon", "adversarial:m=3", "--json"});
  CHECK(nlohmann::json::parse(r.out).at("value") == 0);
}

TEST_CASE("gen adversarial") {
  TempDir dir;
  const auto out = (dir.path / "m2.txt").string();
  auto r = run({"gen", "adversarial", "-m", "2", "-o", out});
  CHECK(r.code == 0);
  CHECK(r.out.find("words=5") != std::string::npos);
  const auto lexicon = hangman::read_lexicon_file(out);
  CHECK(lexicon.size() == 5);
  CHECK(lexicon.word_length() == 4);

  r = run({"gen", "adversarial", "-m", "1"});
  CHECK(r.out == "abc\nacb\nddd\n");
}

TEST_CASE("encode-graph") {
  auto r = run({"encode-graph", "--graph", "k4"});
  CHECK(r.code == 0);
  CHECK(r.out == "abdc\nbacd\ncdba\ndcab\n");

  TempDir dir;
  const auto g = dir.file("k4.txt", "# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(run({"encode-graph", "--graph", g}).out.size() == 20);

  const auto bad = dir.file("bad.txt", "0 1\n1 2\n");
  r = run({"encode-graph", "--graph", bad});
  CHECK(r.code == hangman::kExitDomain);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run({"verify", "reduction", "--graph", "petersen"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gamma=3 value=2 ok") != std::string::npos);
  r = run({"verify", "reduction", "--graph", "k4"});
  CHECK(r.out.find("gamma=1 value=0 ok") != std::string::npos);

  r = run({"verify", "separation", "-m", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "greedy=0 optimal=2 ok\n");
  r = run({"verify", "separation", "-m", "2", "--json"});
  CHECK(nlohmann::json::parse(r.out).at("optimal") == 2);

  CHECK(run({"verify", "separation", "-m", "9"}).code == hangman::kExitDomain);
}

TEST_CASE("play transcript") {
  auto r = run({"play", "--lexicon", "builtin:fig2", "--setter", "optimal", "-d", "1"}, "a\nd\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("guess=a mask=____ failed=1 status=active") != std::string::npos);
  CHECK(r.out.find("guess=d mask=____ failed=2 status=setter_won") != std::string::npos);
  CHECK(r.out.find("word=eeee") != std::string::npos);

  r = run({"play", "--lexicon", "builtin:fig2", "--setter", "greedy", "-d", "3"}, "a\na\nb\nc\n");
  CHECK(r.out.find("guess=a mask=a___ failed=0") != std::string::npos);
  CHECK(r.out.find("guess=a rejected") != std::string::npos);
  CHECK(r.out.find("status=guesser_won\nword=abcc") != std::string::npos);

  // Running out of input leaves the game active.
  r = run({"play", "--lexicon", "builtin:fig1", "--setter", "honest", "--seed", "3"}, "");
  CHECK(r.out.ends_with("status=active\n"));
  CHECK(run({"play", "--lexicon", "builtin:fig1", "--setter", "honest", "--seed", "3"}, "u\nn\n").out ==
        run({"play", "--lexicon", "builtin:fig1", "--setter", "honest", "--seed", "3"}, "u\nn\n").out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == hangman::kExitUsage);
  CHECK(run({"frobnicate"}).code == hangman::kExitUsage);
  CHECK(run({"gen", "adversarial"}).code == hangman::kExitUsage);
  CHECK(run({"gen", "adversarial", "-m", "0"}).code == hangman::kExitUsage);
  CHECK(run({"play", "--setter", "sneaky", "--lexicon", "builtin:fig2"}).code == hangman::kExitUsage);
  CHECK(run({"solve", "--lexicon", "/no/such/file"}).code == hangman::kExitDomain);
  CHECK(run({"solve", "--lexicon", "builtin:unknown"}).code == hangman::kExitDomain);
  CHECK(run({"verify", "reduction", "--graph", "nope"}).code == hangman::kExitDomain);
  CHECK(run({"--help"}).code == hangman::kExitOk);
}
