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

#include "automon/enumeration.hpp"

#include <limits>
#include <unordered_map>
#include <utility>

namespace automon {

  namespace {
    unsigned long long sat_add(unsigned long long a, unsigned long long b) {
      unsigned long long c = a + b;
      return c < a ? std::numeric_limits<unsigned long long>::max() : c;
    }

    // Class-level breadth-first search.  Extending one representative
    // per class is complete: the class of w.g depends only on the class
    // of w, and a word whose class was first seen at an earlier level
    // cannot spawn a class that a shorter word did not already spawn.
    struct Enumeration {
      std::vector<BallClass>                classes;
      std::vector<std::vector<int>>         successors;  // class x generator
      std::vector<std::size_t>              sizes;       // per radius
    };

    Enumeration enumerate(const MealyMachine& m, int radius,
                          std::size_t class_limit) {
      Enumeration e;
      std::unordered_map<std::string, int> by_key;

      auto intern = [&](std::vector<StateIndex> rep, const std::string& key) {
        auto [it, inserted]
            = by_key.try_emplace(key, static_cast<int>(e.classes.size()));
        if (inserted) {
          if (e.classes.size() >= class_limit) {
            throw ResourceLimit("class count exceeds the configured limit "
                                + std::to_string(class_limit));
          }
          e.classes.push_back({key, std::move(rep), 0});
        }
        return it->second;
      };

      StateWord empty(m, {});
      intern({}, canonical_key(empty));
      e.sizes.push_back(e.classes.size());

      std::size_t frontier_begin = 0;
      for (int level = 1; level <= radius; ++level) {
        std::size_t frontier_end = e.classes.size();
        for (std::size_t c = frontier_begin; c < frontier_end; ++c) {
          std::vector<int> succ(static_cast<std::size_t>(m.num_states()));
          for (StateIndex g = 0; g < m.num_states(); ++g) {
            std::vector<StateIndex> rep = e.classes[c].representative;
            rep.push_back(g);
            std::string key = canonical_key(StateWord(m, rep));
            succ[static_cast<std::size_t>(g)] = intern(std::move(rep), key);
          }
          e.successors.push_back(std::move(succ));
        }
        frontier_begin = frontier_end;
        e.sizes.push_back(e.classes.size());
      }

      // Words of length r per class; every word of length < radius lies
      // in a class whose successors were computed above.
      std::vector<unsigned long long> current(e.classes.size(), 0);
      current[0] = 1;
      e.classes[0].word_count = 1;
      for (int r = 1; r <= radius; ++r) {
        std::vector<unsigned long long> next(e.classes.size(), 0);
        for (std::size_t c = 0; c < e.successors.size(); ++c) {
          if (current[c] == 0) {
            continue;
          }
          for (int target : e.successors[c]) {
            next[static_cast<std::size_t>(target)] = sat_add(
                next[static_cast<std::size_t>(target)], current[c]);
          }
        }
        for (std::size_t c = 0; c < e.classes.size(); ++c) {
          e.classes[c].word_count = sat_add(e.classes[c].word_count, next[c]);
        }
        current = std::move(next);
      }
      return e;
    }
  }  // namespace

  Ball ball(const MealyMachine& m, int radius, std::size_t class_limit) {
    if (radius < 0) {
      throw BadParameter("radius must be non-negative");
    }
    Enumeration e = enumerate(m, radius, class_limit);
    return {radius, std::move(e.classes)};
  }

  std::vector<std::size_t> growth_series(const MealyMachine& m,
                                         int                 max_radius,
                                         std::size_t         class_limit) {
    if (max_radius < 0) {
      throw BadParameter("radius must be non-negative");
    }
    return enumerate(m, max_radius, class_limit).sizes;
  }

}  // namespace automon
