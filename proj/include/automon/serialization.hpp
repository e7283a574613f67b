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

#ifndef AUTOMON_SERIALIZATION_HPP_
#define AUTOMON_SERIALIZATION_HPP_

#include <string>

#include <json.hpp>

#include "mealy.hpp"

namespace automon {

  //! Machine as JSON: {"alphabet_size": A, "states": [{"label": l,
  //! "transitions": [{"output": b, "next": q}, ...]}, ...]}, with the
  //! transitions array indexed by letter and "next" a state index.
  nlohmann::ordered_json machine_to_json(const MealyMachine& m);

  //! Parse the format above; throws BadParameter on malformed input.
  MealyMachine machine_from_json(const nlohmann::json& j);

  //! Graphviz digraph: one node per state labelled with its label, one
  //! edge per (state, letter) labelled "a|b".
  std::string machine_to_dot(const MealyMachine& m);

  //! Plain-text transition table.
  std::string machine_to_text(const MealyMachine& m);

}  // namespace automon

#endif  // AUTOMON_SERIALIZATION_HPP_
