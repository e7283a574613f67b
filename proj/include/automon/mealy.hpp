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

#ifndef AUTOMON_MEALY_HPP_
#define AUTOMON_MEALY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace automon {

  //! Letters are 0 .. alphabet_size() - 1.
  using Letter = int;

  //! Index of a state within its machine.
  using StateIndex = int;

  //! One entry of a transition table row: the letter emitted and the
  //! state entered when a given letter is read.
  struct Transition {
    Letter     output;
    StateIndex next;

    friend bool operator==(const Transition&, const Transition&) = default;
  };

  //! A complete deterministic Mealy machine.
  //!
  //! Every state carries a display label (a non-negative integer, unique
  //! within the machine) and one (output, next) pair per letter.  States
  //! act on sequences from the right: for a word of states, the first
  //! state transduces the input and each later state transduces the
  //! previous result.
  //!
  //! Machines are immutable after construction.
  class MealyMachine {
   public:
    //! Validates completeness, index/letter ranges and label uniqueness;
    //! throws BadParameter on any violation.
    MealyMachine(int                                  alphabet_size,
                 std::vector<int>                     labels,
                 std::vector<std::vector<Transition>> rows);

    int alphabet_size() const noexcept {
      return alphabet_size_;
    }

    int num_states() const noexcept {
      return static_cast<int>(rows_.size());
    }

    int label(StateIndex q) const {
      return labels_[static_cast<std::size_t>(q)];
    }

    const std::vector<int>& labels() const noexcept {
      return labels_;
    }

    const Transition& step(StateIndex q, Letter a) const {
      return rows_[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)];
    }

    const std::vector<Transition>& row(StateIndex q) const {
      return rows_[static_cast<std::size_t>(q)];
    }

    //! Index of the state with the given display label, if any.
    std::optional<StateIndex> state_of_label(int label) const;

    friend bool operator==(const MealyMachine&, const MealyMachine&) = default;

   private:
    int                                  alphabet_size_;
    std::vector<int>                     labels_;
    std::vector<std::vector<Transition>> rows_;
  };

  //! A finite sequence of states of one machine, denoting their product
  //! in the generated monoid.  The empty sequence is the identity.
  struct StateWord {
    StateWord(const MealyMachine& m, std::vector<StateIndex> states);

    const MealyMachine*     machine;
    std::vector<StateIndex> states;

    std::size_t length() const noexcept {
      return states.size();
    }

    friend bool operator==(const StateWord&, const StateWord&) = default;
  };

  //! A state word presented algebraically: for every letter, the letter
  //! it maps to and the residual state word (its section).  The
  //! transform need not be a permutation.
  struct WreathRecursion {
    const MealyMachine*                  machine;
    std::vector<Letter>                  transform;  // indexed by letter
    std::vector<std::vector<StateIndex>> sections;   // indexed by letter
  };

  //! An infinite sequence given as finite prefix + repeating period,
  //! stored canonically: the period is primitive and the prefix is the
  //! shortest possible.
  class EventuallyPeriodicWord {
   public:
    //! Throws BadParameter if the period is empty or a letter is
    //! negative.
    EventuallyPeriodicWord(std::vector<Letter> prefix,
                           std::vector<Letter> period);

    const std::vector<Letter>& prefix() const noexcept {
      return prefix_;
    }

    const std::vector<Letter>& period() const noexcept {
      return period_;
    }

    //! Letter at position i of the unrolled infinite word.
    Letter at(std::size_t i) const;

    friend bool operator==(const EventuallyPeriodicWord&,
                           const EventuallyPeriodicWord&) = default;

   private:
    std::vector<Letter> prefix_;
    std::vector<Letter> period_;
  };

  //! Image of a finite input under the right action of w.  The output
  //! has the same length as the input.  Throws LetterOutOfRange.
  std::vector<Letter> act_prefix(const StateWord&        w,
                                 std::span<const Letter> input);

  //! Exact image of an eventually periodic word under the right action
  //! of w, computed by running until the (residual states, position in
  //! period) pair repeats.
  EventuallyPeriodicWord act_omega(const StateWord&              w,
                                   const EventuallyPeriodicWord& input);

  //! The wreath recursion of w: per letter, the first output letter and
  //! the chain of residual states after consuming it.
  WreathRecursion wreath_of(const StateWord& w);

  //! Composition in right-action order: u first, then v.  Satisfies
  //! wreath_of(u . v) = compose_wreath(wreath_of(u), wreath_of(v)).
  //! Throws AlphabetMismatch if u and v are over different machines.
  WreathRecursion compose_wreath(const WreathRecursion& u,
                                 const WreathRecursion& v);

  //! The machine whose states are all length-tuples of states of m,
  //! acting componentwise in right-action order.  Labels encode the
  //! tuple in base num_states(), leftmost component most significant.
  //! Throws BadParameter if length < 1, ResourceLimit if the tuple
  //! space is too large.
  MealyMachine product_machine(const MealyMachine& m, int length);

  struct MinimizationResult {
    MealyMachine machine;
    //! Per original state, its class in the minimized machine.
    std::vector<int> state_class;
  };

  //! Minimization by partition refinement: states start grouped by
  //! output row and are refined by successor classes until stable.
  //! Quotient states are numbered by breadth-first discovery from the
  //! class of state 0, exploring letters in ascending order (continuing
  //! from the lowest unvisited state when the machine is disconnected).
  MinimizationResult minimize(const MealyMachine& m);

  //! True iff u and v act identically on every finite word.  Decided
  //! exactly by minimizing the joint machine of residual-state tuples
  //! reachable from u and v.  Throws MachineMismatch if u and v refer
  //! to different machines.
  bool are_equivalent(const StateWord& u, const StateWord& v);

  //! An opaque key with key(u) == key(v) iff are_equivalent(u, v):
  //! the canonical serialization of the minimized machine of residual
  //! tuples reachable from w, pointed at w.
  std::string canonical_key(const StateWord& w);

  namespace detail {
    //! Advance a chain of states by one input letter, in right-action
    //! order, returning the emitted letter.  The chain is updated in
    //! place.
    Letter chain_step(const MealyMachine&   m,
                      std::span<StateIndex> chain,
                      Letter                a);

    //! The machine of residual-state tuples reachable from the given
    //! start tuples; returns the machine and the index of each start.
    std::pair<MealyMachine, std::vector<StateIndex>>
    reachable_tuple_machine(const MealyMachine&                         m,
                            const std::vector<std::vector<StateIndex>>& starts,
                            std::size_t tuple_limit = 1'000'000);
  }  // namespace detail

}  // namespace automon

#endif  // AUTOMON_MEALY_HPP_
