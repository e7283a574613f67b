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

#ifndef AUTOMON_NUMERICAL_SEMIGROUP_HPP_
#define AUTOMON_NUMERICAL_SEMIGROUP_HPP_

#include <vector>

#include "errors.hpp"

namespace automon {

  //! A numerical semigroup: a submonoid of the non-negative integers
  //! under addition whose complement (the gap set) is finite.
  //!
  //! Values are immutable after construction and all queries are pure,
  //! so instances can be shared freely across threads.
  class NumericalSemigroup {
   public:
    //! The semigroup with the given gap set.
    //!
    //! Throws NonPositiveGap if a gap is <= 0, and ClosureViolation(a, b)
    //! if two members a, b sum to a gap (the complement of the given set
    //! is then not closed under addition).
    static NumericalSemigroup from_gaps(std::vector<int> gaps);

    //! The smallest numerical semigroup containing the given generators.
    //!
    //! Throws InfiniteComplement if gcd(gens) != 1 and BadParameter if
    //! gens is empty or contains a non-positive value.
    static NumericalSemigroup from_generators(const std::vector<int>& gens);

    //! True iff m belongs to the semigroup.
    bool contains(long long m) const;

    //! The least positive k such that {k, k+1, k+2, ...} is contained in
    //! the semigroup: max(gaps) + 1, or 1 when there are no gaps.
    int tail_start() const;

    //! Gap set, sorted ascending.
    const std::vector<int>& gaps() const noexcept {
      return gaps_;
    }

    //! max(gaps) + 1, or 0 when there are no gaps.
    int conductor() const noexcept {
      return conductor_;
    }

    //! The minimal generating set: members that are not sums of two
    //! smaller non-zero members.
    std::vector<int> minimal_generators() const;

    friend bool operator==(const NumericalSemigroup&,
                           const NumericalSemigroup&) = default;

   private:
    NumericalSemigroup(std::vector<int> gaps, int conductor)
        : gaps_(std::move(gaps)), conductor_(conductor) {}

    std::vector<int> gaps_;
    int              conductor_;
  };

}  // namespace automon

#endif  // AUTOMON_NUMERICAL_SEMIGROUP_HPP_
