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

#include "automon/verification.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "automon/enumeration.hpp"

namespace automon {

  namespace {
    std::string word_to_string(const MealyMachine&         m,
                               std::span<const StateIndex> w) {
      std::string s = "[";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          s += ',';
        }
        s += std::to_string(m.label(w[i]));
      }
      return s + "]";
    }

    long long label_sum(const MealyMachine&         m,
                        std::span<const StateIndex> w) {
      long long sum = 0;
      for (StateIndex q : w) {
        sum += m.label(q);
      }
      return sum;
    }
  }  // namespace

  long long value_of(const MealyMachine& m, std::span<const StateIndex> w) {
    for (StateIndex q : w) {
      if (q < 0 || q >= m.num_states()) {
        throw BadParameter("state index " + std::to_string(q)
                           + " out of range");
      }
    }
    int n = m.alphabet_size() - 1;
    if (n < 1) {
      throw DecodeError("alphabet too small to carry values");
    }

    std::vector<Letter>     probe(w.size() + 2, 0);
    std::vector<StateIndex> chain(w.begin(), w.end());
    std::vector<Letter>     out;
    out.reserve(probe.size());
    for (Letter a : probe) {
      out.push_back(detail::chain_step(m, chain, a));
    }

    auto reject = [&] {
      std::ostringstream msg;
      msg << "image of the zero sequence under " << word_to_string(m, w)
          << " is not of the form r n^q 0...:";
      for (Letter a : out) {
        msg << ' ' << a;
      }
      return DecodeError(msg.str());
    };

    std::size_t i = 0;
    long long   q = 0;
    long long   r = 0;
    if (out[0] == n) {
      while (i < out.size() && out[i] == n) {
        ++q;
        ++i;
      }
    } else if (out[0] != 0) {
      r = out[0];
      i = 1;
      while (i < out.size() && out[i] == n) {
        ++q;
        ++i;
      }
    }
    for (; i < out.size(); ++i) {
      if (out[i] != 0) {
        throw reject();
      }
    }
    return q * n + r;
  }

  FreeMonogenicResult free_monogenic_check(int n, int max_power) {
    if (n < 2) {
      throw BadParameter("the construction needs n >= 2");
    }
    if (max_power < n) {
      throw BadParameter("max_power must be at least n");
    }
    MealyMachine m = monogenic_machine(n);

    std::vector<StateIndex> power;  // [1]^m, grown incrementally
    std::map<std::string, int> key_to_power;
    for (int e = 0; e <= max_power; ++e) {
      long long value;
      try {
        value = value_of(m, power);
      } catch (const DecodeError& err) {
        return {false, err.what()};
      }
      if (value != e) {
        return {false,
                "power " + std::to_string(e) + " decodes to "
                    + std::to_string(value)};
      }
      std::string key = canonical_key(StateWord(m, power));
      auto [it, inserted] = key_to_power.try_emplace(std::move(key), e);
      if (!inserted) {
        return {false, "powers " + std::to_string(it->second) + " and "
                           + std::to_string(e) + " act identically"};
      }
      power.push_back(1);
    }

    std::vector<StateIndex> nth(static_cast<std::size_t>(n), 1);
    if (!are_equivalent(StateWord(m, nth), StateWord(m, {2}))) {
      return {false, "the n-th power of 1 differs from the state "
                     "labelled n"};
    }
    return {true, ""};
  }

  long long default_bound(const NumericalSemigroup& s) {
    return s.conductor() + 4LL * s.tail_start();
  }

  int minimal_word_length(const NumericalSemigroup& s, long long bound) {
    long long k = s.tail_start();
    return static_cast<int>((bound + k - 1) / k);
  }

  namespace {
    // Exhaustive words over all machine states, lengths 0..max_len.
    template <typename Fn>
    bool for_each_word(const MealyMachine& m, int max_len, Fn&& fn) {
      std::vector<StateIndex> word;
      // Depth-first over lengths; lexicographic within a length.
      auto rec = [&](auto&& self, int remaining) -> bool {
        if (!fn(word)) {
          return false;
        }
        if (remaining == 0) {
          return true;
        }
        for (StateIndex q = 0; q < m.num_states(); ++q) {
          word.push_back(q);
          if (!self(self, remaining - 1)) {
            return false;
          }
          word.pop_back();
        }
        return true;
      };
      return rec(rec, max_len);
    }
  }  // namespace

  VerificationReport verify_isomorphism(const SemigroupMachine&   sm,
                                        const NumericalSemigroup& s,
                                        long long B, int L) {
    long long k = s.tail_start();
    if (B < s.conductor() + 2 * k) {
      throw BadBound("bound must be at least conductor + 2k = "
                     + std::to_string(s.conductor() + 2 * k));
    }
    if (L < minimal_word_length(s, B)) {
      throw BadBound("word length must be at least ceil(B / k) = "
                     + std::to_string(minimal_word_length(s, B)));
    }

    const MealyMachine& m = sm.machine;
    VerificationReport  report{B, L, false, false, false, std::nullopt};
    int exhaustive_len = std::min(L, 3);

    // Each word must decode to the sum of its state labels.
    bool ok = for_each_word(m, exhaustive_len, [&](const auto& word) {
      long long expected = label_sum(m, word);
      try {
        long long got = value_of(m, word);
        if (got != expected) {
          report.counterexample = word_to_string(m, word) + " decodes to "
                                  + std::to_string(got) + ", label sum is "
                                  + std::to_string(expected);
          return false;
        }
      } catch (const DecodeError& err) {
        report.counterexample = err.what();
        return false;
      }
      return true;
    });
    if (ok) {
      std::mt19937 rng(0x5eed);
      std::uniform_int_distribution<int> pick_length(0, L);
      std::uniform_int_distribution<int> pick_state(0, m.num_states() - 1);
      for (int trial = 0; ok && trial < 1000; ++trial) {
        std::vector<StateIndex> word(
            static_cast<std::size_t>(pick_length(rng)));
        for (StateIndex& q : word) {
          q = pick_state(rng);
        }
        long long expected = label_sum(m, word);
        try {
          long long got = value_of(m, word);
          if (got != expected) {
            report.counterexample = word_to_string(m, word) + " decodes to "
                                    + std::to_string(got)
                                    + ", label sum is "
                                    + std::to_string(expected);
            ok = false;
          }
        } catch (const DecodeError& err) {
          report.counterexample = err.what();
          ok = false;
        }
      }
    }
    if (!ok) {
      return report;
    }
    report.value_map_ok = true;

    // Canonical keys and values must classify the exhaustive set the
    // same way.
    std::map<long long, std::pair<std::string, std::vector<StateIndex>>>
        by_value;
    std::map<std::string, std::pair<long long, std::vector<StateIndex>>>
        by_key;
    ok = for_each_word(m, exhaustive_len, [&](const auto& word) {
      long long   value = label_sum(m, word);
      std::string key   = canonical_key(StateWord(m, word));
      auto [vit, vnew] = by_value.try_emplace(value, std::pair{key, word});
      if (!vnew && vit->second.first != key) {
        report.counterexample
            = word_to_string(m, word) + " and "
              + word_to_string(m, vit->second.second)
              + " share value " + std::to_string(value)
              + " but act differently";
        return false;
      }
      auto [kit, knew] = by_key.try_emplace(key, std::pair{value, word});
      if (!knew && kit->second.first != value) {
        report.counterexample
            = word_to_string(m, word) + " and "
              + word_to_string(m, kit->second.second)
              + " act identically but have values " + std::to_string(value)
              + " and " + std::to_string(kit->second.first);
        return false;
      }
      return true;
    });
    if (!ok) {
      return report;
    }
    report.distinctness_ok = true;

    // Attained values (via the class ball), the DP sum oracle and the
    // semigroup must agree on [0, B].
    std::set<long long> attained;
    try {
      Ball bl = ball(m, L);
      for (const BallClass& cls : bl.classes) {
        long long v = value_of(m, cls.representative);
        if (v <= B) {
          attained.insert(v);
        }
      }
    } catch (const DecodeError& err) {
      report.counterexample = err.what();
      return report;
    }

    std::vector<bool> sums(static_cast<std::size_t>(B) + 1, false);
    sums[0] = true;
    for (int round = 0; round < L; ++round) {
      std::vector<bool> next = sums;
      for (long long v = 0; v <= B; ++v) {
        if (!sums[static_cast<std::size_t>(v)]) {
          continue;
        }
        for (int g : sm.generator_labels) {
          if (v + g <= B) {
            next[static_cast<std::size_t>(v + g)] = true;
          }
        }
      }
      sums = std::move(next);
    }

    for (long long v = 0; v <= B; ++v) {
      bool in_attained  = attained.count(v) > 0;
      bool in_oracle    = sums[static_cast<std::size_t>(v)];
      bool in_semigroup = s.contains(v);
      if (in_attained != in_oracle || in_oracle != in_semigroup) {
        std::ostringstream msg;
        msg << "value " << v << ": attained=" << in_attained
            << " sum-oracle=" << in_oracle << " member=" << in_semigroup;
        report.counterexample = msg.str();
        return report;
      }
    }
    report.set_equality_ok = true;
    return report;
  }

}  // namespace automon
