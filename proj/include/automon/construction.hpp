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

#ifndef AUTOMON_CONSTRUCTION_HPP_
#define AUTOMON_CONSTRUCTION_HPP_

#include <vector>

#include "mealy.hpp"
#include "numerical_semigroup.hpp"

namespace automon {

  //! The machine built for a numerical semigroup, together with the
  //! parameters of the construction.
  struct SemigroupMachine {
    int              n;                 // alphabet is {0, ..., n}
    std::vector<int> deleted;           // labels removed (the gap set)
    MealyMachine     machine;
    std::vector<int> generator_labels;  // labels kept, {0, ..., n} \ deleted
  };

  //! The 3-state machine with labels {0, 1, n} over the alphabet
  //! {0, ..., n}.  State 0 acts identically; the monoid it generates is
  //! free monogenic, generated by state 1, with state m acting as +m.
  //! Throws BadParameter if n < 2.
  MealyMachine monogenic_machine(int n);

  //! monogenic_machine(n) extended with one state per label in
  //! {2, ..., n-1}, each acting as the corresponding sum of copies of
  //! state 1.  For n = 2 this equals monogenic_machine(2).  The states
  //! {1, ..., n-1} have no incoming edges.  Throws BadParameter if n < 2.
  MealyMachine interval_machine(int n);

  //! Submachine on the states whose labels are not listed.  Only labels
  //! in {1, ..., n-1} may be deleted (no transition enters them, so the
  //! kept actions are unchanged); throws NotDeletable otherwise.
  MealyMachine delete_states(const MealyMachine&     machine,
                             const std::vector<int>& labels);

  //! The machine generating exactly S: interval_machine(2k) with the
  //! gap states deleted, where k is the tail start of S.
  SemigroupMachine semigroup_machine(const NumericalSemigroup& s);

}  // namespace automon

#endif  // AUTOMON_CONSTRUCTION_HPP_
