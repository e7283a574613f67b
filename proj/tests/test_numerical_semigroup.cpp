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

#include <numeric>
#include <random>

#include "automon/numerical_semigroup.hpp"

using automon::ClosureViolation;
using automon::InfiniteComplement;
using automon::NonPositiveGap;
using automon::NumericalSemigroup;

namespace {
  // Independent oracle: the gap set of the monoid generated by gens,
  // by direct dynamic programming up to a bound.
  std::vector<int> sieve_gaps(const std::vector<int>& gens, int bound) {
    std::vector<bool> member(bound + 1, false);
    member[0] = true;
    for (int v = 0; v <= bound; ++v) {
      if (!member[v]) {
        continue;
      }
      for (int g : gens) {
        if (v + g <= bound) {
          member[v + g] = true;
        }
      }
    }
    std::vector<int> gaps;
    for (int v = 1; v <= bound; ++v) {
      if (!member[v]) {
        gaps.push_back(v);
      }
    }
    return gaps;
  }
}  // namespace

TEST_SUITE("numerical_semigroup") {
  TEST_CASE("empty gap set is the full monoid") {
    auto s = NumericalSemigroup::from_gaps({});
    CHECK(s.gaps().empty());
    CHECK(s.conductor() == 0);
    CHECK(s.tail_start() == 1);
    CHECK(s.contains(0));
    CHECK(s.contains(1));
  }

  TEST_CASE("gap set of <3,5>") {
    // Oracle: sieve the closure of {3,5} up to 20.
    CHECK(sieve_gaps({3, 5}, 20) == std::vector<int>{1, 2, 4, 7});

    auto s = NumericalSemigroup::from_gaps({1, 2, 4, 7});
    CHECK(s.contains(3));
    CHECK(!s.contains(7));
    CHECK(s.contains(0));
    CHECK(s.contains(100));
    CHECK(s.conductor() == 8);
  }

  TEST_CASE("closure violations are rejected") {
    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({2}), ClosureViolation);
    try {
      NumericalSemigroup::from_gaps({2});
    } catch (const ClosureViolation& e) {
      CHECK(e.a == 1);
      CHECK(e.b == 1);
    }
    // 3 = 1 + 2 would need both 1 and 2 outside the gap set.
    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({3}), ClosureViolation);
  }

  TEST_CASE("non-positive gaps are rejected") {
    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({0}), NonPositiveGap);
    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({-3, 1}), NonPositiveGap);
  }

  TEST_CASE("from_generators") {
    CHECK(NumericalSemigroup::from_generators({1}).gaps().empty());

    auto s = NumericalSemigroup::from_generators({3, 5});
    CHECK(s.gaps() == std::vector<int>{1, 2, 4, 7});
    // Largest gap agrees with the two-generator formula 3*5 - 3 - 5.
    CHECK(s.gaps().back() == 7);

    CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}),
                    InfiniteComplement);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({}),
                    automon::BadParameter);
  }

  TEST_CASE("from_generators without a coprime pair") {
    auto s = NumericalSemigroup::from_generators({6, 10, 15});
    CHECK(s.gaps() == sieve_gaps({6, 10, 15}, 90));
    CHECK(s.contains(6 + 10));
    CHECK(!s.contains(29));
    CHECK(s.contains(30));
  }

  TEST_CASE("tail_start") {
    CHECK(NumericalSemigroup::from_gaps({}).tail_start() == 1);
    CHECK(NumericalSemigroup::from_gaps({1, 2, 4, 7}).tail_start() == 8);
    CHECK(NumericalSemigroup::from_gaps({1}).tail_start() == 2);
  }

  TEST_CASE("membership is closed under addition") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(1, 12);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<int> gens;
      for (int i = std::uniform_int_distribution<int>(1, 4)(rng); i > 0;
           --i) {
        gens.push_back(pick(rng));
      }
      int gcd = 0;
      for (int g : gens) {
        gcd = std::gcd(gcd, g);
      }
      if (gcd != 1) {
        continue;
      }
      auto s     = NumericalSemigroup::from_generators(gens);
      int  limit = 3 * std::max(s.conductor(), 1);
      for (int a = 0; a <= limit; ++a) {
        for (int b = a; a + b <= limit; ++b) {
          if (s.contains(a) && s.contains(b)) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(s.contains(a + b));
          }
        }
      }
    }
  }

  TEST_CASE("minimal generators round-trip") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(1, 30);
    int done = 0;
    while (done < 50) {
      std::vector<int> gens;
      for (int i = std::uniform_int_distribution<int>(1, 5)(rng); i > 0;
           --i) {
        gens.push_back(pick(rng));
      }
      int gcd = 0;
      for (int g : gens) {
        gcd = std::gcd(gcd, g);
      }
      if (gcd != 1) {
        continue;
      }
      ++done;
      auto s = NumericalSemigroup::from_generators(gens);
      auto t = NumericalSemigroup::from_generators(s.minimal_generators());
      CAPTURE(gens);
      CHECK(s.gaps() == t.gaps());
    }
  }

  TEST_CASE("minimal generators of known semigroups") {
    CHECK(NumericalSemigroup::from_gaps({}).minimal_generators()
          == std::vector<int>{1});
    CHECK(NumericalSemigroup::from_gaps({1, 2, 4, 7}).minimal_generators()
          == std::vector<int>{3, 5});
    CHECK(NumericalSemigroup::from_gaps({1}).minimal_generators()
          == std::vector<int>{2, 3});
  }

  TEST_CASE("tail_start minus one is a gap or one") {
    for (auto gaps : std::vector<std::vector<int>>{
             {}, {1}, {1, 2}, {1, 3}, {1, 2, 4, 7}, {1, 2, 3, 4, 6, 9}}) {
      auto s = NumericalSemigroup::from_gaps(gaps);
      int  k = s.tail_start();
      bool ok = k == 1
                || std::find(gaps.begin(), gaps.end(), k - 1) != gaps.end();
      CAPTURE(gaps);
      CHECK(ok);
    }
  }
}
