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

#include <random>
#include <set>

#include "automon/construction.hpp"
#include "automon/mealy.hpp"
#include "automon/numerical_semigroup.hpp"

using namespace automon;

TEST_SUITE("construction") {
  TEST_CASE("the base machine rejects n < 2") {
    CHECK_THROWS_AS(monogenic_machine(1), BadParameter);
    CHECK_THROWS_AS(monogenic_machine(0), BadParameter);
    CHECK_THROWS_AS(interval_machine(1), BadParameter);
  }

  TEST_CASE("base machine transitions") {
    MealyMachine m = monogenic_machine(2);
    CHECK(m.num_states() == 3);
    CHECK(m.labels() == std::vector<int>{0, 1, 2});
    // The state labelled n sends 0 0 to n 0.
    CHECK(act_prefix(StateWord(m, {2}), std::vector<Letter>{0, 0})
          == std::vector<Letter>{2, 0});
  }

  TEST_CASE("interval machine rows") {
    MealyMachine m = interval_machine(4);
    CHECK(m.num_states() == 5);
    CHECK(m.alphabet_size() == 5);

    StateIndex two = *m.state_of_label(2);
    CHECK(m.step(two, 3).output == 1);
    CHECK(m.label(m.step(two, 3).next) == 4);
    CHECK(m.step(two, 1).output == 3);
    CHECK(m.label(m.step(two, 1).next) == 0);
  }

  TEST_CASE("interval machine equals the base machine for n = 2") {
    CHECK(interval_machine(2) == monogenic_machine(2));
  }

  TEST_CASE("redundant states match powers of the unit") {
    // The wreath recursion of the state labelled 2 in the interval
    // machine has the transform and section label sums of the squared
    // unit state of the base machine.
    MealyMachine    base = monogenic_machine(4);
    WreathRecursion uu   = compose_wreath(wreath_of(StateWord(base, {1})),
                                          wreath_of(StateWord(base, {1})));

    MealyMachine    ext = interval_machine(4);
    WreathRecursion two = wreath_of(StateWord(ext, {2}));

    CHECK(two.transform == uu.transform);
    for (Letter a = 0; a < 5; ++a) {
      long long uu_sum = 0;
      for (StateIndex q : uu.sections[static_cast<std::size_t>(a)]) {
        uu_sum += base.label(q);
      }
      long long two_sum = 0;
      for (StateIndex q : two.sections[static_cast<std::size_t>(a)]) {
        two_sum += ext.label(q);
      }
      CHECK(uu_sum == two_sum);
    }
  }

  TEST_CASE("all unit powers have the expected recursion") {
    for (int n = 2; n <= 8; ++n) {
      MealyMachine m = monogenic_machine(n);
      for (int p = 1; p <= n; ++p) {
        std::vector<StateIndex> word(static_cast<std::size_t>(p), 1);
        WreathRecursion         r = wreath_of(StateWord(m, word));
        for (Letter a = 0; a <= n; ++a) {
          Letter expected
              = a <= n - p ? a + p : a + p - n;
          CAPTURE(n);
          CAPTURE(p);
          CAPTURE(a);
          CHECK(r.transform[static_cast<std::size_t>(a)] == expected);
          long long sum = 0;
          for (StateIndex q : r.sections[static_cast<std::size_t>(a)]) {
            sum += m.label(q);
          }
          CHECK(sum == (a <= n - p ? 0 : n));
        }
      }
    }
  }

  TEST_CASE("interval machine is complete and only 0 and n take edges") {
    for (int n = 2; n <= 8; ++n) {
      MealyMachine  m = interval_machine(n);
      std::set<int> targets;
      for (StateIndex q = 0; q < m.num_states(); ++q) {
        REQUIRE(static_cast<int>(m.row(q).size()) == n + 1);
        for (Letter a = 0; a <= n; ++a) {
          targets.insert(m.label(m.step(q, a).next));
        }
      }
      CHECK(targets == std::set<int>{0, n});
    }
  }

  TEST_CASE("the n-th power of the unit equals the top state") {
    for (int n = 2; n <= 6; ++n) {
      MealyMachine            m = monogenic_machine(n);
      std::vector<StateIndex> word(static_cast<std::size_t>(n), 1);
      CHECK(are_equivalent(StateWord(m, word), StateWord(m, {2})));
    }
  }

  TEST_CASE("delete_states") {
    MealyMachine n16 = interval_machine(16);

    CHECK(delete_states(n16, {}) == n16);

    MealyMachine pruned = delete_states(n16, {1, 2, 4, 7});
    CHECK(pruned.num_states() == 13);
    CHECK(pruned.labels()
          == std::vector<int>{0, 3, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16});

    CHECK_THROWS_AS(delete_states(n16, {16}), NotDeletable);
    CHECK_THROWS_AS(delete_states(n16, {0}), NotDeletable);
    CHECK_THROWS_AS(delete_states(n16, {17}), NotDeletable);
    // Already deleted.
    CHECK_THROWS_AS(delete_states(pruned, {2}), NotDeletable);
  }

  TEST_CASE("deletion does not change the kept actions") {
    std::mt19937 rng(61);
    MealyMachine full   = interval_machine(8);
    MealyMachine pruned = delete_states(full, {1, 2, 5});

    std::uniform_int_distribution<int> pick_letter(0, 8);
    std::uniform_int_distribution<int> pick_state(0,
                                                  pruned.num_states() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<StateIndex> word(
          std::uniform_int_distribution<int>(0, 4)(rng));
      std::vector<StateIndex> word_full(word.size());
      for (std::size_t i = 0; i < word.size(); ++i) {
        word[i]      = pick_state(rng);
        word_full[i] = *full.state_of_label(pruned.label(word[i]));
      }
      std::vector<Letter> input(
          std::uniform_int_distribution<int>(0, 20)(rng));
      for (Letter& a : input) {
        a = pick_letter(rng);
      }
      REQUIRE(act_prefix(StateWord(pruned, word), input)
              == act_prefix(StateWord(full, word_full), input));
    }
  }

  TEST_CASE("semigroup_machine") {
    SUBCASE("the full monoid") {
      auto sm = semigroup_machine(NumericalSemigroup::from_gaps({}));
      CHECK(sm.n == 2);
      CHECK(sm.machine == monogenic_machine(2));
      CHECK(sm.generator_labels == std::vector<int>{0, 1, 2});
      CHECK(sm.deleted.empty());
    }
    SUBCASE("<3,5>") {
      auto sm = semigroup_machine(
          NumericalSemigroup::from_gaps({1, 2, 4, 7}));
      CHECK(sm.n == 16);
      CHECK(sm.machine.num_states() == 13);
      CHECK(sm.deleted == std::vector<int>{1, 2, 4, 7});
    }
    SUBCASE("gap at 1") {
      auto sm = semigroup_machine(NumericalSemigroup::from_gaps({1}));
      CHECK(sm.n == 4);
      CHECK(sm.machine.labels() == std::vector<int>{0, 2, 3, 4});
    }
  }
}
