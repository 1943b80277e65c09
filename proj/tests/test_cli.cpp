#include <cstdio>
#include <filesystem>
#include <sstream>

#include <doctest.h>

#include "nimcash/cli.hpp"
#include "support.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = nimcash::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: solve") {
  Run r = run({"solve", "-A", "1,6", "-n", "43", "-d", "27", "-e", "28"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("P1 (staircase", 0) == 0);

  r = run({"solve", "-A", "1,2", "-n", "5", "-d", "0", "-e", "9"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("P2 ", 0) == 0);

  r = run({"solve", "--moves", "1,6", "--stones", "43", "--cash1", "22", "--cash2", "24",
           "--oracle"});
  CHECK(r.out == "P2 (oracle)\n");

  r = run({"solve", "-A", "1,6", "-n", "43", "-d", "22", "-e", "22", "--strict-text"});
  CHECK(r.out.rfind("P2 (staircase {1,L} L=6, case 2, bottom", 0) == 0);

  r = run({"solve", "-A", "1,3,4", "-n", "9"});
  CHECK(r.out == "P2 (upper class, case 3)\n");
}

TEST_CASE("cli: classic and classes") {
  Run r = run({"classic", "-A", "1,3,4", "-n", "9"});
  CHECK(r.status == 0);
  CHECK(r.out == "P2\n");

  r = run({"classes", "-A", "1,6", "-n", "43", "-d", "27", "-e", "inf"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "U1 37\nU2 34\nM1 22\nM2 22\nP1 cash 27: middle\nP2 cash inf: upper\nclassic winner P1\n");
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"solve", "-n", "4"}).status == 2);
  CHECK(run({"solve", "-A", "1,2", "-n", "-4"}).status == 2);
  CHECK(run({"solve", "-A", "", "-n", "4"}).status == 2);
  CHECK(run({"solve", "-A", "1,2", "-n", "4", "-d", "lots"}).status == 2);
  CHECK(run({"staircase", "-A", "1,2", "-n", "4", "--dlo", "0", "--dhi", "1", "--elo", "0",
             "--ehi", "1", "--format", "png"})
            .status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("cli: staircase renders and writes files") {
  Run r = run({"staircase", "-A", "1,6", "-n", "43", "--dlo", "22", "--dhi", "36", "--elo", "22",
               "--ehi", "33", "--oracle"});
  CHECK(r.status == 0);
  CHECK(r.out == testing::golden("n43_A1-6.csv"));

  const auto path = std::filesystem::temp_directory_path() / "nimcash_cli_grid.svg";
  r = run({"staircase", "-A", "1,3,4", "-n", "42", "--dlo", "22", "--dhi", "29", "--elo", "21",
           "--ehi", "29", "--format", "svg", "--out", path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  const std::string svg = testing::read_file(path.string());
  CHECK(svg.rfind("<svg", 0) == 0);
  std::filesystem::remove(path);

  r = run({"staircase", "-A", "1,4,5", "-n", "48", "--dlo", "25", "--dhi", "26", "--elo", "24",
           "--ehi", "24", "--format", "json"});
  CHECK(r.out.find("\"source\": \"fast\"") != std::string::npos);
}

TEST_CASE("cli: sweep exit status follows the report") {
  Run r = run({"sweep", "-A", "1,2", "-A", "1,4,5", "--n-max", "30"});
  CHECK(r.status == 0);
  CHECK(r.out.find("{1,2}: ") == 0);
  CHECK(r.out.find("0 discrepancies") != std::string::npos);

  r = run({"sweep", "-A", "1,4", "--n-max", "30", "--strict-text"});
  CHECK(r.status == 1);
  CHECK(r.out.find("rules,n,d,e,fast,regime,case,oracle") != std::string::npos);

  r = run({"sweep", "-A", "2,3", "--n-max", "10"});
  CHECK(r.status == 0);
  CHECK(r.out.find("skipped") != std::string::npos);
}

TEST_CASE("cli: output depends only on the arguments") {
  const std::vector<std::string> args = {"sweep", "-A", "1,6", "--n-max", "40", "--strict-text"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.status == b.status);
}
