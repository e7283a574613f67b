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

#include "automon/numerical_semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace automon {

  NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<int> gaps) {
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());

    for (int g : gaps) {
      if (g <= 0) {
        throw NonPositiveGap(g);
      }
    }
    if (gaps.empty()) {
      return NumericalSemigroup({}, 0);
    }

    // Sums beyond max(gaps) cannot land in the gap set, so checking all
    // member pairs in [1, max(gaps)] is a complete closure test.
    int               max_gap = gaps.back();
    std::vector<bool> is_gap(max_gap + 1, false);
    for (int g : gaps) {
      is_gap[g] = true;
    }
    for (int a = 1; a <= max_gap; ++a) {
      if (is_gap[a]) {
        continue;
      }
      for (int b = a; a + b <= max_gap; ++b) {
        if (!is_gap[b] && is_gap[a + b]) {
          throw ClosureViolation(a, b);
        }
      }
    }
    return NumericalSemigroup(std::move(gaps), max_gap + 1);
  }

  NumericalSemigroup
  NumericalSemigroup::from_generators(const std::vector<int>& gens) {
    if (gens.empty()) {
      throw BadParameter("at least one generator is required");
    }
    for (int g : gens) {
      if (g <= 0) {
        throw BadParameter("generators must be strictly positive, got "
                           + std::to_string(g));
      }
    }
    int gcd = 0;
    for (int g : gens) {
      gcd = std::gcd(gcd, g);
    }
    if (gcd != 1) {
      throw InfiniteComplement("generators have gcd " + std::to_string(gcd)
                               + ", the complement is infinite");
    }

    int       min_gen = *std::min_element(gens.begin(), gens.end());
    int       max_gen = *std::max_element(gens.begin(), gens.end());
    long long bound   = static_cast<long long>(min_gen) * max_gen;

    // Sieve reachable sums; a run of min_gen consecutive members
    // certifies the whole tail beyond it.
    for (;;) {
      std::vector<bool> member(bound + 1, false);
      member[0] = true;
      for (long long v = 0; v <= bound; ++v) {
        if (!member[v]) {
          continue;
        }
        for (int g : gens) {
          if (v + g <= bound) {
            member[v + g] = true;
          }
        }
      }
      bool tail_certified = true;
      for (long long v = bound - min_gen + 1; v <= bound; ++v) {
        tail_certified = tail_certified && member[v];
      }
      if (tail_certified) {
        std::vector<int> gaps;
        for (long long v = 1; v <= bound; ++v) {
          if (!member[v]) {
            gaps.push_back(static_cast<int>(v));
          }
        }
        int conductor = gaps.empty() ? 0 : gaps.back() + 1;
        return NumericalSemigroup(std::move(gaps), conductor);
      }
      bound *= 2;
    }
  }

  bool NumericalSemigroup::contains(long long m) const {
    if (m < 0) {
      return false;
    }
    if (m >= conductor_) {
      return true;
    }
    return !std::binary_search(gaps_.begin(), gaps_.end(),
                               static_cast<int>(m));
  }

  int NumericalSemigroup::tail_start() const {
    return gaps_.empty() ? 1 : gaps_.back() + 1;
  }

  std::vector<int> NumericalSemigroup::minimal_generators() const {
    // Minimal generators never exceed conductor + multiplicity.
    int multiplicity = 1;
    while (!contains(multiplicity)) {
      ++multiplicity;
    }
    std::vector<int> result;
    for (int m = 1; m <= conductor_ + multiplicity; ++m) {
      if (!contains(m)) {
        continue;
      }
      bool decomposable = false;
      for (int s = multiplicity; !decomposable && s <= m - s; ++s) {
        decomposable = contains(s) && contains(m - s);
      }
      if (!decomposable) {
        result.push_back(m);
      }
    }
    return result;
  }

}  // namespace automon
