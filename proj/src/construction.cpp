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

#include "automon/construction.hpp"

#include <algorithm>
#include <set>

namespace automon {

  namespace {
    // Transition row of the state labelled m in {1, ..., n}: letters up
    // to n - m shift by +m and drop into the identity state; the rest
    // wrap by +m-n and continue in the state labelled n.
    std::vector<Transition> adder_row(int n, int m, StateIndex identity,
                                      StateIndex last) {
      std::vector<Transition> row(static_cast<std::size_t>(n) + 1);
      for (Letter a = 0; a <= n; ++a) {
        if (a <= n - m) {
          row[static_cast<std::size_t>(a)] = {a + m, identity};
        } else {
          row[static_cast<std::size_t>(a)] = {a + m - n, last};
        }
      }
      return row;
    }

    std::vector<Transition> identity_row(int n) {
      std::vector<Transition> row(static_cast<std::size_t>(n) + 1);
      for (Letter a = 0; a <= n; ++a) {
        row[static_cast<std::size_t>(a)] = {a, 0};
      }
      return row;
    }
  }  // namespace

  MealyMachine monogenic_machine(int n) {
    if (n < 2) {
      throw BadParameter("the construction needs n >= 2");
    }
    std::vector<int>                     labels{0, 1, n};
    std::vector<std::vector<Transition>> rows;
    rows.push_back(identity_row(n));
    rows.push_back(adder_row(n, 1, 0, 2));
    rows.push_back(adder_row(n, n, 0, 2));
    return MealyMachine(n + 1, std::move(labels), std::move(rows));
  }

  MealyMachine interval_machine(int n) {
    if (n < 2) {
      throw BadParameter("the construction needs n >= 2");
    }
    std::vector<int>                     labels;
    std::vector<std::vector<Transition>> rows;
    labels.reserve(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
      labels.push_back(m);
      rows.push_back(m == 0 ? identity_row(n)
                            : adder_row(n, m, 0, n));
    }
    return MealyMachine(n + 1, std::move(labels), std::move(rows));
  }

  MealyMachine delete_states(const MealyMachine&     machine,
                             const std::vector<int>& labels) {
    int n = machine.alphabet_size() - 1;

    std::set<int> doomed(labels.begin(), labels.end());
    for (int l : doomed) {
      if (l < 1 || l > n - 1 || !machine.state_of_label(l).has_value()) {
        throw NotDeletable(l);
      }
    }

    std::vector<StateIndex> kept;
    std::vector<int>        old_to_new(
        static_cast<std::size_t>(machine.num_states()), -1);
    for (StateIndex q = 0; q < machine.num_states(); ++q) {
      if (doomed.count(machine.label(q)) == 0) {
        old_to_new[static_cast<std::size_t>(q)]
            = static_cast<int>(kept.size());
        kept.push_back(q);
      }
    }

    std::vector<int>                     new_labels;
    std::vector<std::vector<Transition>> new_rows;
    for (StateIndex q : kept) {
      new_labels.push_back(machine.label(q));
      std::vector<Transition> row = machine.row(q);
      for (Transition& t : row) {
        int target = old_to_new[static_cast<std::size_t>(t.next)];
        if (target < 0) {
          // A kept state points into the deleted set; such a state has
          // an incoming edge and is not deletable.
          throw NotDeletable(machine.label(t.next));
        }
        t.next = target;
      }
      new_rows.push_back(std::move(row));
    }
    return MealyMachine(machine.alphabet_size(), std::move(new_labels),
                        std::move(new_rows));
  }

  SemigroupMachine semigroup_machine(const NumericalSemigroup& s) {
    int k = s.tail_start();
    int n = 2 * k;

    MealyMachine machine = delete_states(interval_machine(n), s.gaps());

    std::vector<int> generators;
    for (int m = 0; m <= n; ++m) {
      if (!std::binary_search(s.gaps().begin(), s.gaps().end(), m)) {
        generators.push_back(m);
      }
    }
    return {n, s.gaps(), std::move(machine), std::move(generators)};
  }

}  // namespace automon
