#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

// MATRANK_BIN is injected by the build: the path of the command-line tool.

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the tool through the shell with stdout+stderr captured.  `extra` is
// prepended, so callers can set environment variables or pipe input in.
RunResult run_tool(const std::string& args, const std::string& prefix = "") {
  std::string cmd = prefix + std::string(MATRANK_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "matrank_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("rank command: default line, single quantities, stdin") {
  fs::path c6 = write_file("c6.txt",
                           "6 6\n111000\n011100\n001110\n000111\n100011\n110001\n");
  RunResult r = run_tool("rank " + c6.string());
  CHECK(r.status == 0);
  CHECK(r.out == "real=4 binary=6 boolean=6 isolation=6\n");

  RunResult q = run_tool("rank --quantity real " + c6.string());
  CHECK(q.status == 0);
  CHECK(q.out == "4\n");
  CHECK(run_tool("rank --quantity isolation " + c6.string()).out == "6\n");

  // Reading from stdin, both spellings.
  fs::path id3 = write_file("id3.txt", "3 3\n100\n010\n001\n");
  RunResult s1 = run_tool("rank -", "cat " + id3.string() + " | ");
  CHECK(s1.status == 0);
  CHECK(s1.out == "real=3 binary=3 boolean=3 isolation=3\n");
  RunResult s2 = run_tool("rank", "cat " + id3.string() + " | ");
  CHECK(s2.out == s1.out);
}

TEST_CASE("rank command: JSON reports parse and carry certificates") {
  fs::path c4 = write_file("c4.txt", "4 4\n1100\n0110\n0011\n1001\n");
  RunResult r = run_tool("rank --json " + c4.string());
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["real"] == 3);
  CHECK(j["binary"] == 4);
  CHECK(j["certificates"]["partition"].size() == 4);

  RunResult q = run_tool("rank --json --quantity binary " + c4.string());
  CHECK(q.status == 0);
  Json jq = Json::parse(q.out);
  CHECK(jq["binary"] == 4);
  CHECK(jq["certificate"].size() == 4);
  CHECK(!jq.contains("real"));
}

TEST_CASE("rank command: malformed input exits 2 with a parse error") {
  fs::path bad = write_file("bad.txt", "2 2\n10\n0x\n");
  RunResult r = run_tool("rank " + bad.string());
  CHECK(r.status == 2);
  CHECK(contains(r.out, "parse error:"));
  CHECK(contains(r.out, "line 3"));

  RunResult missing = run_tool("rank /nonexistent/matrix.txt");
  CHECK(missing.status == 2);
}

TEST_CASE("graph command: partition and cover with biclique witnesses") {
  fs::path cyc = write_file("cycle8.txt",
                            "4 4\n1 1\n1 2\n2 2\n2 3\n3 3\n3 4\n4 4\n4 1\n");
  RunResult bp = run_tool("graph " + cyc.string() + " bp");
  CHECK(bp.status == 0);
  CHECK(contains(bp.out, "bp = 4\n"));
  // Four witness bicliques, 1-based vertex sets.
  int bicliques = 0;
  for (int i = 1; i <= 4; ++i)
    if (contains(bp.out, "biclique " + std::to_string(i) + ": left {")) ++bicliques;
  CHECK(bicliques == 4);

  fs::path chord = write_file("chord6.txt",
                              "3 3\n1 1\n1 2\n2 2\n2 3\n3 3\n3 1\n1 3\n");
  CHECK(contains(run_tool("graph " + chord.string() + " bp").out, "bp = 3\n"));
  CHECK(contains(run_tool("graph " + chord.string() + " bc").out, "bc = 2\n"));

  fs::path edge = write_file("edge1.txt", "1 1\n1 1\n");
  CHECK(contains(run_tool("graph " + edge.string() + " bp").out, "bp = 1\n"));

  // Graph parse failures exit 2.
  fs::path badg = write_file("badgraph.txt", "2 2\n9 1\n");
  RunResult r = run_tool("graph " + badg.string() + " bp");
  CHECK(r.status == 2);
  CHECK(contains(r.out, "parse error:"));
}

TEST_CASE("catalog commands: list, show, export round trip") {
  RunResult list = run_tool("catalog list");
  CHECK(list.status == 0);
  CHECK(contains(list.out, "fig2.A1  3x3  expected real=3 binary=3 boolean=3 isolation=3\n"));
  CHECK(contains(list.out, "lemma17.m1  8x7  expected real=4 binary=- boolean=- isolation=-\n"));
  // Exactly sixteen lines.
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 16);

  RunResult show = run_tool("catalog show fig2.A4");
  CHECK(show.status == 0);
  CHECK(show.out ==
        "3 3\n100\n110\n011\nexpected: real=3 binary=3 boolean=3 isolation=3\n");

  // Aliases resolve; unknown names exit 2.
  CHECK(run_tool("catalog show lemma14.A2").status == 0);
  CHECK(run_tool("catalog show zzz").status == 2);

  fs::path dir = scratch_dir() / "export";
  fs::remove_all(dir);
  RunResult exp = run_tool("catalog export --dir " + dir.string());
  CHECK(exp.status == 0);
  CHECK(contains(exp.out, "wrote 16 entries to "));
  int txt = 0, json_files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".txt") ++txt;
    if (e.path().extension() == ".json") ++json_files;
  }
  CHECK(txt == 16);
  CHECK(json_files == 16);

  // The exported matrix feeds back through the rank command.
  RunResult rt = run_tool("rank " + (dir / "c6.txt").string());
  CHECK(rt.out == "real=4 binary=6 boolean=6 isolation=6\n");

  // Sidecars parse and agree with the stated pins.
  std::ifstream side(dir / "fig2.A7.json");
  Json j = Json::parse(side);
  CHECK(j["name"] == "fig2.A7");
  CHECK(j["expected"]["boolean"] == 2);
}

TEST_CASE("reproduce command: verdict lines, JSON, --out, exit codes") {
  // The default output is the full JSON report on stdout.
  RunResult ok = run_tool("reproduce c4_unique");
  CHECK(ok.status == 0);
  Json jok = Json::parse(ok.out);
  CHECK(jok["check"] == "c4_unique");
  CHECK(jok["verdict"] == "PASS");

  RunResult js = run_tool("reproduce reps3x3");
  CHECK(js.status == 0);
  Json j = Json::parse(js.out);
  CHECK(j["check"] == "reps3x3");
  CHECK(j["verdict"] == "PASS");

  fs::path out = scratch_dir() / "report.json";
  fs::remove(out);
  RunResult wrote = run_tool("reproduce theorem1 --n 6 --out " + out.string());
  CHECK(wrote.status == 0);
  CHECK(contains(wrote.out, "check theorem1: PASS (report written to "));
  std::ifstream in(out);
  Json jf = Json::parse(in);
  CHECK(jf["params"]["n"] == 6);

  // Budget exhaustion: exit 3 and an INCONCLUSIVE verdict.
  RunResult tiny = run_tool("reproduce no5x5_rank3 --budget 10");
  CHECK(tiny.status == 3);
  CHECK(contains(tiny.out, "INCONCLUSIVE"));

  // Unknown check id is a usage error.
  CHECK(run_tool("reproduce bogus_check").status == 2);
  // theorem1 out-of-range size is a usage error.
  CHECK(run_tool("reproduce theorem1 --n 3").status == 2);
}

TEST_CASE("MATRANK_BUDGET environment variable is honored and validated") {
  RunResult tiny = run_tool("reproduce no5x5_rank3", "MATRANK_BUDGET=10 ");
  CHECK(tiny.status == 3);

  // An explicit flag overrides the environment.
  RunResult flag = run_tool("reproduce no5x5_rank3 --budget 0", "MATRANK_BUDGET=10 ");
  CHECK(flag.status == 0);

  // A bogus value is a usage error, not a silent fallback.
  RunResult bogus = run_tool("reproduce no5x5_rank3", "MATRANK_BUDGET=banana ");
  CHECK(bogus.status == 2);
  CHECK(contains(bogus.out, "error"));
}

TEST_CASE("enumerate command: text summary and JSON report") {
  RunResult r = run_tool("enumerate 3 --max-dim 5");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "search d=3 max_dim=5: PASS\n"));
  CHECK(contains(r.out, "3x3: 7 classes\n"));
  CHECK(contains(r.out, "3x5: 6 classes\n"));

  RunResult js = run_tool("enumerate 2 --max-dim 4 --json");
  CHECK(js.status == 0);
  Json j = Json::parse(js.out);
  CHECK(j["check"] == "search_max_basic");
  CHECK(j["verdict"] == "PASS");
  CHECK(j["params"]["d"] == 2);

  // Out-of-range rank is rejected at parse time.
  CHECK(run_tool("enumerate 7").status == 2);
  CHECK(run_tool("enumerate 3 --max-dim 1").status == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_tool("").status == 2);              // a subcommand is required
  CHECK(run_tool("frobnicate").status == 2);    // unknown subcommand
  CHECK(run_tool("rank --bogus-flag x").status == 2);
  CHECK(run_tool("graph missing-mode.txt").status == 2);
  RunResult help = run_tool("--help");
  CHECK(help.status == 0);
  CHECK(contains(help.out, "rank"));
  CHECK(contains(help.out, "reproduce"));
}
