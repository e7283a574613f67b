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

#include "automon/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "automon/construction.hpp"
#include "automon/enumeration.hpp"
#include "automon/errors.hpp"
#include "automon/mealy.hpp"
#include "automon/numerical_semigroup.hpp"
#include "automon/serialization.hpp"
#include "automon/verification.hpp"

namespace automon::cli {

  namespace {

    std::vector<int> parse_int_list(const std::string& text) {
      std::vector<int> values;
      std::string      token;
      // Accept commas and whitespace interchangeably.
      std::string normalized = text;
      for (char& c : normalized) {
        if (c == ',') {
          c = ' ';
        }
      }
      std::istringstream in(normalized);
      while (in >> token) {
        std::size_t pos = 0;
        int         v;
        try {
          v = std::stoi(token, &pos);
        } catch (const std::exception&) {
          throw BadParameter("not an integer: '" + token + "'");
        }
        if (pos != token.size()) {
          throw BadParameter("not an integer: '" + token + "'");
        }
        values.push_back(v);
      }
      return values;
    }

    std::vector<int> parse_gap_list(const std::string& text) {
      if (text.empty() || text == "\xE2\x88\x85") {  // "∅"
        return {};
      }
      return parse_int_list(text);
    }

    std::string join(const std::vector<int>& values) {
      std::string s;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
          s += ',';
        }
        s += std::to_string(values[i]);
      }
      return s;
    }

    std::string join_letters(const std::vector<Letter>& values) {
      std::string s;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
          s += ',';
        }
        s += std::to_string(values[i]);
      }
      return s;
    }

    std::string digest(const std::string& s) {
      unsigned long long h = 1469598103934665603ULL;
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      std::ostringstream out;
      out << std::hex;
      out.width(16);
      out.fill('0');
      out << h;
      return out.str();
    }

    // Options shared by every machine-selecting subcommand.
    struct Selection {
      std::string gaps_text;
      std::string gens_text;
      int         n = 0;
      bool        monogenic_only = false;
      std::string machine_file;

      CLI::Option* gaps_opt    = nullptr;
      CLI::Option* gens_opt    = nullptr;
      CLI::Option* n_opt       = nullptr;
      CLI::Option* machine_opt = nullptr;

      void attach(CLI::App* cmd) {
        gaps_opt = cmd->add_option(
            "--gaps", gaps_text,
            "gap set, e.g. '1,2,4,7' (empty or '∅' for none)");
        gens_opt = cmd->add_option("--gens", gens_text,
                                   "generators, e.g. '3,5'");
        n_opt = cmd->add_option(
            "--n", n, "build the machine with states 0..n directly");
        cmd->add_flag("--m", monogenic_only,
                      "with --n: only the states 0, 1, n")
            ->needs(n_opt);
        machine_opt = cmd->add_option("--machine", machine_file,
                                      "load a machine from a JSON file");
        gens_opt->excludes(gaps_opt);
        machine_opt->excludes(n_opt);
      }

      std::optional<NumericalSemigroup> semigroup() const {
        if (gaps_opt && *gaps_opt) {
          return NumericalSemigroup::from_gaps(parse_gap_list(gaps_text));
        }
        if (gens_opt && *gens_opt) {
          return NumericalSemigroup::from_generators(
              parse_int_list(gens_text));
        }
        return std::nullopt;
      }

      SemigroupMachine resolve() const {
        std::optional<NumericalSemigroup> s = semigroup();
        if (machine_opt && *machine_opt) {
          std::ifstream file(machine_file);
          if (!file) {
            throw BadParameter("cannot open '" + machine_file + "'");
          }
          nlohmann::json j;
          try {
            file >> j;
          } catch (const nlohmann::json::exception& e) {
            throw BadParameter(std::string("malformed machine JSON: ")
                               + e.what());
          }
          MealyMachine machine = machine_from_json(j);
          return {machine.alphabet_size() - 1,
                  s ? s->gaps() : std::vector<int>{}, machine,
                  machine.labels()};
        }
        if (n_opt && *n_opt) {
          MealyMachine base = monogenic_only ? monogenic_machine(n)
                                             : interval_machine(n);
          std::vector<int> deleted = s ? s->gaps() : std::vector<int>{};
          MealyMachine machine = deleted.empty()
                                     ? base
                                     : delete_states(base, deleted);
          return {n, deleted, machine, machine.labels()};
        }
        if (s) {
          return semigroup_machine(*s);
        }
        throw BadParameter(
            "select a machine with --gaps, --gens, --n or --machine");
      }
    };

    std::vector<StateIndex> word_from_labels(const MealyMachine& m,
                                             const std::string&  text) {
      std::vector<StateIndex> word;
      for (int label : parse_int_list(text)) {
        std::optional<StateIndex> q = m.state_of_label(label);
        if (!q) {
          throw BadParameter("unknown state label " + std::to_string(label)
                             + "; available labels: " + join(m.labels()));
        }
        word.push_back(*q);
      }
      return word;
    }

    EventuallyPeriodicWord parse_periodic(const std::string& text) {
      std::size_t split = text.find(';');
      if (split == std::string::npos) {
        throw BadParameter(
            "periodic words are written 'prefix;period', e.g. '0;1,2'");
      }
      return EventuallyPeriodicWord(
          parse_int_list(text.substr(0, split)),
          parse_int_list(text.substr(split + 1)));
    }

  }  // namespace

  int run(const std::vector<std::string>& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"automaton monoids for numerical semigroups"};
    app.name("automon");
    app.require_subcommand(1);

    // build
    auto*       build = app.add_subcommand("build", "construct a machine");
    Selection   build_sel;
    std::string build_format = "json";
    build_sel.attach(build);
    build->add_option("--format", build_format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));

    // info
    auto*     info = app.add_subcommand("info", "construction parameters");
    Selection info_sel;
    info_sel.attach(info);
    std::string info_format = "text";
    info->add_option("--format", info_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // act
    auto*       act = app.add_subcommand("act", "apply a word of states");
    Selection   act_sel;
    std::string act_word;
    std::string act_input;
    std::string act_periodic;
    act_sel.attach(act);
    act->add_option("--word", act_word,
                    "state labels, e.g. '1,1,1' (empty for the identity)");
    auto* act_in  = act->add_option("--input", act_input, "finite input");
    auto* act_per = act->add_option(
        "--periodic", act_periodic,
        "eventually periodic input 'prefix;period'");
    act_per->excludes(act_in);

    // value
    auto*       value = app.add_subcommand("value", "decode a word's value");
    Selection   value_sel;
    std::string value_word;
    value_sel.attach(value);
    value->add_option("--word", value_word, "state labels");

    // equiv
    auto*       equiv = app.add_subcommand("equiv",
                                           "decide equality of two words");
    Selection   equiv_sel;
    std::string equiv_word;
    std::string equiv_word2;
    equiv_sel.attach(equiv);
    equiv->add_option("--word", equiv_word, "first word (state labels)");
    equiv->add_option("--word2", equiv_word2, "second word (state labels)");

    // growth
    auto*     growth = app.add_subcommand("growth", "ball sizes by radius");
    Selection growth_sel;
    int       growth_radius = 0;
    std::size_t growth_limit = default_class_limit;
    growth_sel.attach(growth);
    growth->add_option("--radius", growth_radius, "maximum radius")
        ->required();
    growth->add_option("--limit", growth_limit, "class limit");

    // ball
    auto*       ball_cmd = app.add_subcommand("ball",
                                              "equivalence classes of words");
    Selection   ball_sel;
    int         ball_radius = 0;
    bool        ball_dump   = false;
    std::size_t ball_limit  = default_class_limit;
    ball_sel.attach(ball_cmd);
    ball_cmd->add_option("--radius", ball_radius, "radius")->required();
    ball_cmd->add_flag("--dump", ball_dump,
                       "print key, representative and value per class");
    ball_cmd->add_option("--limit", ball_limit, "class limit");

    // verify
    auto*     verify = app.add_subcommand(
        "verify", "check that the machine generates the semigroup");
    Selection verify_sel;
    long long verify_bound  = -1;
    int       verify_maxlen = -1;
    verify_sel.attach(verify);
    verify->add_option("--bound", verify_bound,
                       "check values up to this bound "
                       "(default conductor + 4k)");
    verify->add_option("--maxlen", verify_maxlen,
                       "maximum word length (default ceil(bound / k))");

    try {
      std::vector<std::string> argv_store;
      argv_store.reserve(args.size() + 1);
      argv_store.emplace_back("automon");
      argv_store.insert(argv_store.end(), args.begin(), args.end());
      std::vector<const char*> argv;
      argv.reserve(argv_store.size());
      for (const std::string& s : argv_store) {
        argv.push_back(s.c_str());
      }
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {
        out << app.help();
        return 0;
      }
      err << "error: " << e.what() << "\n";
      return 1;
    }

    try {
      if (build->parsed()) {
        SemigroupMachine sm = build_sel.resolve();
        if (build_format == "json") {
          out << machine_to_json(sm.machine).dump(2) << "\n";
        } else if (build_format == "dot") {
          out << machine_to_dot(sm.machine);
        } else {
          out << machine_to_text(sm.machine);
        }
        return 0;
      }

      if (info->parsed()) {
        std::optional<NumericalSemigroup> s = info_sel.semigroup();
        SemigroupMachine                  sm = info_sel.resolve();
        if (info_format == "json") {
          nlohmann::ordered_json j;
          if (s) {
            j["gaps"]      = s->gaps();
            j["conductor"] = s->conductor();
            j["k"]         = s->tail_start();
          }
          j["n"]          = sm.n;
          j["states"]     = sm.machine.num_states();
          j["generators"] = sm.generator_labels;
          out << j.dump(2) << "\n";
        } else {
          if (s) {
            out << "gaps: "
                << (s->gaps().empty() ? "none" : join(s->gaps())) << "\n";
            out << "conductor: " << s->conductor() << "\n";
            out << "k: " << s->tail_start() << "\n";
          }
          out << "n: " << sm.n << "\n";
          out << "states: " << sm.machine.num_states() << "\n";
          out << "generators: " << join(sm.generator_labels) << "\n";
        }
        return 0;
      }

      if (act->parsed()) {
        SemigroupMachine        sm = act_sel.resolve();
        std::vector<StateIndex> word
            = word_from_labels(sm.machine, act_word);
        StateWord w(sm.machine, word);
        if (act_per->count() > 0) {
          EventuallyPeriodicWord image
              = act_omega(w, parse_periodic(act_periodic));
          out << join_letters(image.prefix()) << ";"
              << join_letters(image.period()) << "\n";
        } else if (act_in->count() > 0) {
          std::vector<Letter> input = parse_int_list(act_input);
          out << join_letters(act_prefix(w, input)) << "\n";
        } else {
          throw BadParameter("one of --input or --periodic is required");
        }
        return 0;
      }

      if (value->parsed()) {
        SemigroupMachine        sm = value_sel.resolve();
        std::vector<StateIndex> word
            = word_from_labels(sm.machine, value_word);
        out << value_of(sm.machine, word) << "\n";
        return 0;
      }

      if (equiv->parsed()) {
        SemigroupMachine        sm = equiv_sel.resolve();
        std::vector<StateIndex> u = word_from_labels(sm.machine, equiv_word);
        std::vector<StateIndex> v
            = word_from_labels(sm.machine, equiv_word2);
        bool equal = are_equivalent(StateWord(sm.machine, u),
                                    StateWord(sm.machine, v));
        out << (equal ? "true" : "false") << "\n";
        return 0;
      }

      if (growth->parsed()) {
        SemigroupMachine sm = growth_sel.resolve();
        for (std::size_t size :
             growth_series(sm.machine, growth_radius, growth_limit)) {
          out << size << "\n";
        }
        return 0;
      }

      if (ball_cmd->parsed()) {
        SemigroupMachine sm = ball_sel.resolve();
        Ball             b = ball(sm.machine, ball_radius, ball_limit);
        out << "classes: " << b.size() << "\n";
        if (ball_dump) {
          for (const BallClass& cls : b.classes) {
            std::vector<int> labels;
            labels.reserve(cls.representative.size());
            for (StateIndex q : cls.representative) {
              labels.push_back(sm.machine.label(q));
            }
            std::string value_text;
            try {
              value_text
                  = std::to_string(value_of(sm.machine,
                                            cls.representative));
            } catch (const DecodeError&) {
              value_text = "-";
            }
            out << digest(cls.key) << "\t" << join(labels) << "\t"
                << value_text << "\n";
          }
        }
        return 0;
      }

      if (verify->parsed()) {
        std::optional<NumericalSemigroup> s = verify_sel.semigroup();
        if (!s) {
          throw BadParameter("verify needs the semigroup: --gaps or --gens");
        }
        SemigroupMachine sm = verify_sel.resolve();
        long long bound = verify_bound >= 0 ? verify_bound
                                            : default_bound(*s);
        int maxlen = verify_maxlen >= 0 ? verify_maxlen
                                        : minimal_word_length(*s, bound);
        VerificationReport report
            = verify_isomorphism(sm, *s, bound, maxlen);

        out << "gaps: " << (s->gaps().empty() ? "none" : join(s->gaps()))
            << "\n";
        out << "n: " << sm.n << "\n";
        out << "bound: " << report.checked_bound << "\n";
        out << "max-word-length: " << report.max_word_length << "\n";
        bool failed = false;
        auto flag_line = [&](const char* name, bool flag) {
          out << name << ": " << (flag ? "ok" : (failed ? "skipped" : "FAIL"))
              << "\n";
          failed = failed || !flag;
        };
        flag_line("value-map", report.value_map_ok);
        flag_line("distinctness", report.distinctness_ok);
        flag_line("set-equality", report.set_equality_ok);
        if (report.counterexample) {
          out << "counterexample: " << *report.counterexample << "\n";
        }
        out << "result: " << (report.all_ok() ? "ok" : "FAIL") << "\n";
        return report.all_ok() ? 0 : 2;
      }
    } catch (const ResourceLimit& e) {
      err << "error: " << e.what() << "\n";
      return 3;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    return 0;
  }

}  // namespace automon::cli
