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

#include "automon/serialization.hpp"

#include <sstream>

namespace automon {

  nlohmann::ordered_json machine_to_json(const MealyMachine& m) {
    nlohmann::ordered_json j;
    j["alphabet_size"] = m.alphabet_size();
    j["states"]        = nlohmann::ordered_json::array();
    for (StateIndex q = 0; q < m.num_states(); ++q) {
      nlohmann::ordered_json state;
      state["label"]       = m.label(q);
      state["transitions"] = nlohmann::ordered_json::array();
      for (Letter a = 0; a < m.alphabet_size(); ++a) {
        const Transition& t = m.step(q, a);
        state["transitions"].push_back(
            {{"output", t.output}, {"next", t.next}});
      }
      j["states"].push_back(std::move(state));
    }
    return j;
  }

  MealyMachine machine_from_json(const nlohmann::json& j) {
    try {
      int alphabet = j.at("alphabet_size").get<int>();

      std::vector<int>                     labels;
      std::vector<std::vector<Transition>> rows;
      for (const auto& state : j.at("states")) {
        labels.push_back(state.at("label").get<int>());
        std::vector<Transition> row;
        for (const auto& t : state.at("transitions")) {
          row.push_back(
              {t.at("output").get<int>(), t.at("next").get<int>()});
        }
        rows.push_back(std::move(row));
      }
      return MealyMachine(alphabet, std::move(labels), std::move(rows));
    } catch (const nlohmann::json::exception& err) {
      throw BadParameter(std::string("malformed machine JSON: ")
                         + err.what());
    }
  }

  std::string machine_to_dot(const MealyMachine& m) {
    std::ostringstream out;
    out << "digraph mealy {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (StateIndex q = 0; q < m.num_states(); ++q) {
      out << "  q" << q << " [label=\"" << m.label(q) << "\"];\n";
    }
    for (StateIndex q = 0; q < m.num_states(); ++q) {
      for (Letter a = 0; a < m.alphabet_size(); ++a) {
        const Transition& t = m.step(q, a);
        out << "  q" << q << " -> q" << t.next << " [label=\"" << a << "|"
            << t.output << "\"];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string machine_to_text(const MealyMachine& m) {
    std::ostringstream out;
    out << "alphabet: 0.." << m.alphabet_size() - 1 << "\n";
    out << "states: " << m.num_states() << "\n";
    for (StateIndex q = 0; q < m.num_states(); ++q) {
      out << "state " << q << " [label " << m.label(q) << "]:";
      for (Letter a = 0; a < m.alphabet_size(); ++a) {
        const Transition& t = m.step(q, a);
        out << " " << a << "|" << t.output << "->" << t.next;
      }
      out << "\n";
    }
    return out.str();
  }

}  // namespace automon
