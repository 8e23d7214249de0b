#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "pareto/datasets.hpp"
#include "pareto/nd_tree.hpp"

// PARETO_CLI_PATH is injected by the build: the installed-style binary under
// test. Every case drives the real executable through std::system.

namespace {

namespace fs = std::filesystem;

const fs::path& work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "pareto_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path at(const std::string& name) { return work_dir() / name; }

int run(const std::string& args) {
  std::string command = std::string(PARETO_CLI_PATH) + " " + args + " > " +
                        at("stdout.txt").string() + " 2> " +
                        at("stderr.txt").string();
  int status = std::system(command.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string captured_stdout() { return read_text(at("stdout.txt")); }

std::size_t count_lines(const std::string& text) {
  return std::count(text.begin(), text.end(), '\n');
}

}  // namespace

TEST_CASE("generate writes the promised header and is deterministic") {
  auto out_a = at("gen_a.txt");
  auto out_b = at("gen_b.txt");
  std::string flags =
      "generate --shape convex --n 1000 --p 3 --epsilon 0.1 --vmax 10000 "
      "--seed 7 --out ";
  CHECK(run(flags + out_a.string()) == 0);
  CHECK(run(flags + out_b.string()) == 0);
  auto text = read_text(out_a);
  CHECK(text.substr(0, text.find('\n')) == "3 1000");
  CHECK(count_lines(text) == 1001);
  CHECK(text == read_text(out_b));
}

TEST_CASE("generate rejects a broken cluster budget") {
  CHECK(run("generate --shape clustered --n 500 --p 2 --epsilon 0.5 --seed 1 "
            "--clusters 3 --cluster-size 200 --out " +
            at("bad.txt").string()) == 2);
}

TEST_CASE("unknown flags are a usage error") {
  CHECK(run("generate --whatever 3") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("bench --in missing_file.txt --backend ndtree --csv " +
            at("x.csv").string()) == 2);
}

TEST_CASE("bench runs every applicable backend and writes the table") {
  auto stream_file = at("bench_in.txt");
  REQUIRE(run("generate --shape convex --n 400 --p 2 --epsilon 0.5 --seed 3 "
              "--vmax 1000 --out " +
              stream_file.string()) == 0);

  auto csv = at("bench_out.csv");
  CHECK(run("bench --in " + stream_file.string() +
            " --backend all --reps 3 --shuffle --csv " + csv.string()) == 0);
  // 5 backends apply at p=2, 3 repetitions each, plus the header.
  CHECK(count_lines(read_text(csv)) == 16);

  CHECK(run("bench --in " + stream_file.string() +
            " --backend ndtree --reps 2 --shuffle --verify --csv " +
            csv.string()) == 0);
}

TEST_CASE("bench refuses the sorted list off two objectives") {
  auto stream_file = at("bench_p4.txt");
  REQUIRE(run("generate --shape convex --n 100 --p 4 --epsilon 0.5 --seed 5 "
              "--vmax 100 --out " +
              stream_file.string()) == 0);
  CHECK(run("bench --in " + stream_file.string() +
            " --backend sortedlist --csv " + at("p4.csv").string()) == 2);
}

TEST_CASE("sort peels a chain into one front per point") {
  auto input = at("chain.txt");
  std::ofstream(input) << "2 3\n1 1\n2 2\n3 3\n";
  auto fronts = at("chain_fronts.txt");
  CHECK(run("sort --in " + input.string() + " --backend ndtree --out " +
            fronts.string()) == 0);
  CHECK(read_text(fronts) == "0 0\n1 1\n2 2\n");
  CHECK(captured_stdout().find("3 fronts") != std::string::npos);
}

TEST_CASE("sort backends agree file-for-file") {
  auto input = at("sort_in.txt");
  REQUIRE(run("generate --shape convex --n 300 --p 3 --epsilon 0.25 --seed 9 "
              "--vmax 1000 --out " +
              input.string()) == 0);
  auto by_tree = at("fronts_tree.txt");
  auto by_brute = at("fronts_brute.txt");
  auto by_front = at("fronts_mfront.txt");
  CHECK(run("sort --in " + input.string() + " --backend ndtree --out " +
            by_tree.string()) == 0);
  CHECK(run("sort --in " + input.string() + " --backend bruteforce --out " +
            by_brute.string()) == 0);
  CHECK(run("sort --in " + input.string() + " --backend mfront2 --out " +
            by_front.string()) == 0);
  auto expected = read_text(by_brute);
  CHECK(read_text(by_tree) == expected);
  CHECK(read_text(by_front) == expected);
}

TEST_CASE("audit walks generated streams without violations") {
  auto input = at("audit_in.txt");
  REQUIRE(run("generate --shape nonconvex --n 2000 --p 3 --epsilon 0.25 "
              "--seed 13 --vmax 1000 --out " +
              input.string()) == 0);
  CHECK(run("audit --in " + input.string()) == 0);
  CHECK(run("audit --in " + input.string() + " --check-every 1") == 0);
  CHECK(run("audit --in " + input.string() + " --check-every 0") == 2);
}

TEST_CASE("audit confirms the adversarial chain builds clean") {
  auto input = at("audit_chain.txt");
  pareto::PointStream stream;
  stream.objectives = 2;
  stream.points = pareto::worst_case_stream(10);
  pareto::write_stream(stream, input);
  CHECK(run("audit --in " + input.string() +
            " --max-leaf-size 2 --children 2 --check-every 1") == 0);
  // The chain shape shows up as depth close to the level count.
  auto summary = captured_stdout();
  CHECK(summary.find("depth") != std::string::npos);
}
