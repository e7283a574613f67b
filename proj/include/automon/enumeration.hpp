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

#ifndef AUTOMON_ENUMERATION_HPP_
#define AUTOMON_ENUMERATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "mealy.hpp"

namespace automon {

  inline constexpr std::size_t default_class_limit = 1'000'000;

  //! One equivalence class of state words.
  struct BallClass {
    std::string             key;
    //! Shortest representative; ties broken lexicographically by state
    //! index sequence.
    std::vector<StateIndex> representative;
    //! Number of words of length <= radius in this class (saturating).
    unsigned long long      word_count;
  };

  //! The classes of all state words of length up to a radius, identity
  //! first, in breadth-first discovery order.
  struct Ball {
    int                    radius = 0;
    std::vector<BallClass> classes;

    std::size_t size() const noexcept {
      return classes.size();
    }
  };

  //! Breadth-first closure of words over all states of m up to the
  //! radius, deduplicated by canonical key.  Throws ResourceLimit when
  //! the class count exceeds the limit.
  Ball ball(const MealyMachine& m, int radius,
            std::size_t class_limit = default_class_limit);

  //! Ball sizes for radii 0, ..., max_radius, computed in one pass.
  std::vector<std::size_t>
  growth_series(const MealyMachine& m, int max_radius,
                std::size_t class_limit = default_class_limit);

}  // namespace automon

#endif  // AUTOMON_ENUMERATION_HPP_
