//
// automon - automaton monoids for numerical semigroups
// Copyright (C) 2026 The automon developers
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "automon/cli.hpp"
#include "automon/construction.hpp"
#include "automon/numerical_semigroup.hpp"
#include "automon/serialization.hpp"

using namespace automon;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::size_t count_lines_with(const std::string& text,
                               const std::string& needle) {
    std::size_t        count = 0;
    std::istringstream in(text);
    std::string        line;
    while (std::getline(in, line)) {
      if (line.find(needle) != std::string::npos) {
        ++count;
      }
    }
    return count;
  }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("build emits dot with one node per state") {
    Run r = run_cli({"build", "--gens", "3,5", "--format", "dot"});
    REQUIRE(r.code == 0);
    std::size_t nodes = count_lines_with(r.out, "[label=")
                        - count_lines_with(r.out, "->");
    CHECK(nodes == 13);
    CHECK(count_lines_with(r.out, "->") == 13 * 17);
  }

  TEST_CASE("act applies label words") {
    Run r = run_cli({"act", "--gaps", "", "--n", "2", "--word", "1,1,1",
                     "--input", "0,0,0,0,0"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "1,2,0,0,0\n");
  }

  TEST_CASE("act accepts space-separated sequences") {
    Run r = run_cli({"act", "--gaps", "", "--n", "2", "--word", "1 1 1",
                     "--input", "0 0 0 0 0"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "1,2,0,0,0\n");
  }

  TEST_CASE("act on periodic input") {
    Run r = run_cli({"act", "--gaps", "", "--word", "2", "--periodic",
                     ";0"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "2;0\n");
  }

  TEST_CASE("value and equiv") {
    Run v = run_cli({"value", "--n", "2", "--word", "1,1,1"});
    REQUIRE(v.code == 0);
    CHECK(v.out == "3\n");

    Run e = run_cli({"equiv", "--n", "2", "--word", "1,1", "--word2", "2"});
    REQUIRE(e.code == 0);
    CHECK(e.out == "true\n");

    Run ne = run_cli({"equiv", "--n", "2", "--word", "1", "--word2", "2"});
    REQUIRE(ne.code == 0);
    CHECK(ne.out == "false\n");
  }

  TEST_CASE("growth prints one size per line") {
    Run r = run_cli({"growth", "--gaps", "", "--radius", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "1\n3\n5\n7\n");
  }

  TEST_CASE("ball dump lists key, representative and value") {
    Run r = run_cli({"ball", "--gaps", "", "--radius", "2", "--dump"});
    REQUIRE(r.code == 0);
    CHECK(count_lines_with(r.out, "classes: 5") == 1);
    // Header plus one line per class.
    std::istringstream in(r.out);
    std::string        line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      CHECK(line.find('\t') != std::string::npos);
    }
    CHECK(rows == 5);
  }

  TEST_CASE("info reports the construction parameters") {
    Run r = run_cli({"info", "--gaps", "1,2,4,7"});
    REQUIRE(r.code == 0);
    CHECK(count_lines_with(r.out, "conductor: 8") == 1);
    CHECK(count_lines_with(r.out, "k: 8") == 1);
    CHECK(count_lines_with(r.out, "n: 16") == 1);
    CHECK(count_lines_with(r.out, "states: 13") == 1);
  }

  TEST_CASE("verify succeeds on a valid construction") {
    Run r = run_cli({"verify", "--gaps", "1,2,4,7"});
    REQUIRE(r.code == 0);
    CHECK(count_lines_with(r.out, "result: ok") == 1);
  }

  TEST_CASE("verify fails on a corrupted machine") {
    auto sm = semigroup_machine(NumericalSemigroup::from_gaps({1, 2, 4, 7}));
    nlohmann::ordered_json j = machine_to_json(sm.machine);
    // Corrupt one output letter of the first non-identity state.
    int original = j["states"][1]["transitions"][0]["output"].get<int>();
    j["states"][1]["transitions"][0]["output"] = (original + 1) % 17;

    std::string path = "cli_test_mutated_machine.json";
    {
      std::ofstream file(path);
      file << j.dump();
    }
    Run r = run_cli({"verify", "--machine", path, "--gaps", "1,2,4,7"});
    std::remove(path.c_str());
    CHECK(r.code == 2);
    CHECK(count_lines_with(r.out, "result: FAIL") == 1);
    CHECK(count_lines_with(r.out, "counterexample:") == 1);
  }

  TEST_CASE("json round-trip preserves behaviour") {
    Run r = run_cli({"build", "--gens", "3,5"});
    REQUIRE(r.code == 0);

    MealyMachine parsed = machine_from_json(nlohmann::json::parse(r.out));
    auto sm = semigroup_machine(NumericalSemigroup::from_gaps({1, 2, 4, 7}));
    REQUIRE(parsed == sm.machine);

    std::mt19937 rng(97);
    std::uniform_int_distribution<int> pick_letter(0, 16);
    std::uniform_int_distribution<int> pick_state(
        0, sm.machine.num_states() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<StateIndex> word(
          std::uniform_int_distribution<int>(0, 4)(rng));
      for (StateIndex& q : word) {
        q = pick_state(rng);
      }
      std::vector<Letter> input(
          std::uniform_int_distribution<int>(0, 24)(rng));
      for (Letter& a : input) {
        a = pick_letter(rng);
      }
      REQUIRE(act_prefix(StateWord(parsed, word), input)
              == act_prefix(StateWord(sm.machine, word), input));
    }
  }

  TEST_CASE("invocations are deterministic") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"build", "--gens", "3,5"},
             {"build", "--gaps", "1,2", "--format", "dot"},
             {"verify", "--gaps", "1,3"},
             {"ball", "--gaps", "", "--radius", "3", "--dump"}}) {
      Run first  = run_cli(args);
      Run second = run_cli(args);
      CHECK(first.code == second.code);
      CHECK(first.out == second.out);
      CHECK(first.err == second.err);
    }
  }

  TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli({"act", "--gaps", ""}).code == 1);           // no input
    CHECK(run_cli({"value", "--word", "1"}).code == 1);        // no machine
    CHECK(run_cli({"build", "--gaps", "2"}).code == 1);        // not closed
    CHECK(run_cli({"build", "--gaps", "x"}).code == 1);        // not a number
    CHECK(run_cli({"build", "--gens", "4,6"}).code == 1);      // gcd 2
    CHECK(run_cli({"nonsense"}).code == 1);
    CHECK(run_cli({}).code == 1);

    Run unknown = run_cli({"value", "--gaps", "", "--word", "5"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("available labels") != std::string::npos);
  }

  TEST_CASE("class limits exit with 3") {
    Run r = run_cli({"growth", "--gaps", "", "--radius", "3", "--limit",
                     "2"});
    CHECK(r.code == 3);
  }

  TEST_CASE("empty gap spellings") {
    CHECK(run_cli({"info", "--gaps", ""}).code == 0);
    CHECK(run_cli({"info", "--gaps", "\xE2\x88\x85"}).code == 0);
    CHECK(run_cli({"info", "--gaps", ""}).out
          == run_cli({"info", "--gaps", "\xE2\x88\x85"}).out);
  }

  TEST_CASE("monogenic study machine via --n --m") {
    Run r = run_cli({"build", "--n", "5", "--m", "--format", "text"});
    REQUIRE(r.code == 0);
    CHECK(count_lines_with(r.out, "states: 3") == 1);
  }
}
