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

#include "automon/mealy.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace automon {

  namespace {
    void check_letters(const MealyMachine&     m,
                       std::span<const Letter> letters) {
      for (Letter a : letters) {
        if (a < 0 || a >= m.alphabet_size()) {
          throw LetterOutOfRange("letter " + std::to_string(a)
                                 + " outside alphabet of size "
                                 + std::to_string(m.alphabet_size()));
        }
      }
    }
  }  // namespace

  MealyMachine::MealyMachine(int                                  alphabet_size,
                             std::vector<int>                     labels,
                             std::vector<std::vector<Transition>> rows)
      : alphabet_size_(alphabet_size),
        labels_(std::move(labels)),
        rows_(std::move(rows)) {
    if (alphabet_size_ < 1) {
      throw BadParameter("alphabet size must be at least 1");
    }
    if (rows_.empty()) {
      throw BadParameter("a machine needs at least one state");
    }
    if (labels_.size() != rows_.size()) {
      throw BadParameter("one label per state is required");
    }
    int n = num_states();
    for (const auto& row : rows_) {
      if (static_cast<int>(row.size()) != alphabet_size_) {
        throw BadParameter("every state needs exactly one transition per "
                           "letter");
      }
      for (const Transition& t : row) {
        if (t.output < 0 || t.output >= alphabet_size_) {
          throw BadParameter("output letter " + std::to_string(t.output)
                             + " out of range");
        }
        if (t.next < 0 || t.next >= n) {
          throw BadParameter("next state " + std::to_string(t.next)
                             + " out of range");
        }
      }
    }
    std::set<int> seen;
    for (int l : labels_) {
      if (l < 0) {
        throw BadParameter("labels must be non-negative");
      }
      if (!seen.insert(l).second) {
        throw BadParameter("duplicate label " + std::to_string(l));
      }
    }
  }

  std::optional<StateIndex> MealyMachine::state_of_label(int label) const {
    for (StateIndex q = 0; q < num_states(); ++q) {
      if (labels_[static_cast<std::size_t>(q)] == label) {
        return q;
      }
    }
    return std::nullopt;
  }

  StateWord::StateWord(const MealyMachine& m, std::vector<StateIndex> states)
      : machine(&m), states(std::move(states)) {
    for (StateIndex q : this->states) {
      if (q < 0 || q >= m.num_states()) {
        throw BadParameter("state index " + std::to_string(q)
                           + " out of range");
      }
    }
  }

  EventuallyPeriodicWord::EventuallyPeriodicWord(std::vector<Letter> prefix,
                                                 std::vector<Letter> period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) {
      throw BadParameter("period must be nonempty");
    }
    for (Letter a : prefix_) {
      if (a < 0) {
        throw BadParameter("letters must be non-negative");
      }
    }
    for (Letter a : period_) {
      if (a < 0) {
        throw BadParameter("letters must be non-negative");
      }
    }
    // Reduce the period to its primitive root.
    std::size_t n = period_.size();
    for (std::size_t d = 1; d <= n / 2; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool repeats = true;
      for (std::size_t i = d; repeats && i < n; ++i) {
        repeats = period_[i] == period_[i % d];
      }
      if (repeats) {
        period_.resize(d);
        break;
      }
    }
    // Roll the period so the stored prefix is shortest possible.
    while (!prefix_.empty() && prefix_.back() == period_.back()) {
      std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
      prefix_.pop_back();
    }
  }

  Letter EventuallyPeriodicWord::at(std::size_t i) const {
    if (i < prefix_.size()) {
      return prefix_[i];
    }
    return period_[(i - prefix_.size()) % period_.size()];
  }

  namespace detail {
    Letter chain_step(const MealyMachine&   m,
                      std::span<StateIndex> chain,
                      Letter                a) {
      for (StateIndex& q : chain) {
        const Transition& t = m.step(q, a);
        a = t.output;
        q = t.next;
      }
      return a;
    }
  }  // namespace detail

  std::vector<Letter> act_prefix(const StateWord&        w,
                                 std::span<const Letter> input) {
    const MealyMachine& m = *w.machine;
    check_letters(m, input);
    std::vector<StateIndex> chain = w.states;
    std::vector<Letter>     out;
    out.reserve(input.size());
    for (Letter a : input) {
      out.push_back(detail::chain_step(m, chain, a));
    }
    return out;
  }

  EventuallyPeriodicWord act_omega(const StateWord&              w,
                                   const EventuallyPeriodicWord& input) {
    const MealyMachine& m = *w.machine;
    check_letters(m, input.prefix());
    check_letters(m, input.period());

    std::vector<StateIndex> chain = w.states;
    std::vector<Letter>     emitted;
    for (Letter a : input.prefix()) {
      emitted.push_back(detail::chain_step(m, chain, a));
    }
    std::size_t prefix_len = emitted.size();

    std::size_t period_len = input.period().size();
    std::map<std::pair<std::vector<StateIndex>, std::size_t>, std::size_t>
        seen;
    for (std::size_t step = 0;; ++step) {
      std::size_t pos = step % period_len;
      auto [it, inserted] = seen.try_emplace({chain, pos}, step);
      if (!inserted) {
        std::size_t         first = it->second;
        std::vector<Letter> out_prefix(emitted.begin(),
                                       emitted.begin() + prefix_len + first);
        std::vector<Letter> out_period(emitted.begin() + prefix_len + first,
                                       emitted.end());
        return EventuallyPeriodicWord(std::move(out_prefix),
                                      std::move(out_period));
      }
      if (seen.size() > 4'000'000) {
        throw ResourceLimit("eventually periodic image exceeds the "
                            "configured state budget");
      }
      emitted.push_back(
          detail::chain_step(m, chain, input.period()[pos]));
    }
  }

  WreathRecursion wreath_of(const StateWord& w) {
    const MealyMachine& m = *w.machine;
    WreathRecursion     r;
    r.machine = &m;
    r.transform.resize(m.alphabet_size());
    r.sections.resize(m.alphabet_size());
    for (Letter a = 0; a < m.alphabet_size(); ++a) {
      std::vector<StateIndex> chain = w.states;
      r.transform[static_cast<std::size_t>(a)]
          = detail::chain_step(m, chain, a);
      r.sections[static_cast<std::size_t>(a)] = std::move(chain);
    }
    return r;
  }

  WreathRecursion compose_wreath(const WreathRecursion& u,
                                 const WreathRecursion& v) {
    if (u.machine != v.machine
        || u.transform.size() != v.transform.size()) {
      throw AlphabetMismatch("wreath recursions live over different "
                             "machines");
    }
    WreathRecursion r;
    r.machine = u.machine;
    r.transform.resize(u.transform.size());
    r.sections.resize(u.sections.size());
    for (std::size_t a = 0; a < u.transform.size(); ++a) {
      auto ua = static_cast<std::size_t>(u.transform[a]);
      r.transform[a] = v.transform[ua];
      r.sections[a]  = u.sections[a];
      r.sections[a].insert(r.sections[a].end(), v.sections[ua].begin(),
                           v.sections[ua].end());
    }
    return r;
  }

  MealyMachine product_machine(const MealyMachine& m, int length) {
    if (length < 1) {
      throw BadParameter("tuple length must be at least 1");
    }
    const std::size_t limit = std::size_t{1} << 21;
    std::size_t       total = 1;
    std::size_t       n     = static_cast<std::size_t>(m.num_states());
    for (int i = 0; i < length; ++i) {
      if (total > limit / n) {
        throw ResourceLimit("tuple space of the product machine is too "
                            "large");
      }
      total *= n;
    }

    auto decode = [&](std::size_t code) {
      std::vector<StateIndex> tuple(static_cast<std::size_t>(length));
      for (int i = length - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = static_cast<StateIndex>(code % n);
        code /= n;
      }
      return tuple;
    };
    auto encode = [&](const std::vector<StateIndex>& tuple) {
      std::size_t code = 0;
      for (StateIndex q : tuple) {
        code = code * n + static_cast<std::size_t>(q);
      }
      return code;
    };

    std::vector<int>                     labels(total);
    std::vector<std::vector<Transition>> rows(total);
    for (std::size_t code = 0; code < total; ++code) {
      labels[code] = static_cast<int>(code);
      auto& row    = rows[code];
      row.resize(static_cast<std::size_t>(m.alphabet_size()));
      for (Letter a = 0; a < m.alphabet_size(); ++a) {
        std::vector<StateIndex> chain = decode(code);
        Letter out = detail::chain_step(m, chain, a);
        row[static_cast<std::size_t>(a)]
            = {out, static_cast<StateIndex>(encode(chain))};
      }
    }
    return MealyMachine(m.alphabet_size(), std::move(labels),
                        std::move(rows));
  }

  MinimizationResult minimize(const MealyMachine& m) {
    int n = m.num_states();
    int A = m.alphabet_size();

    // Initial blocks: identical output rows.
    std::map<std::vector<Letter>, int> row_ids;
    std::vector<int>                   part(static_cast<std::size_t>(n));
    for (StateIndex q = 0; q < n; ++q) {
      std::vector<Letter> outputs(static_cast<std::size_t>(A));
      for (Letter a = 0; a < A; ++a) {
        outputs[static_cast<std::size_t>(a)] = m.step(q, a).output;
      }
      part[static_cast<std::size_t>(q)]
          = row_ids.try_emplace(std::move(outputs),
                                static_cast<int>(row_ids.size()))
                .first->second;
    }
    std::size_t blocks = row_ids.size();

    // Refine by successor blocks until the count stabilizes.
    for (;;) {
      std::map<std::vector<int>, int> sig_ids;
      std::vector<int> refined(static_cast<std::size_t>(n));
      for (StateIndex q = 0; q < n; ++q) {
        std::vector<int> sig;
        sig.reserve(static_cast<std::size_t>(A) + 1);
        sig.push_back(part[static_cast<std::size_t>(q)]);
        for (Letter a = 0; a < A; ++a) {
          sig.push_back(
              part[static_cast<std::size_t>(m.step(q, a).next)]);
        }
        refined[static_cast<std::size_t>(q)]
            = sig_ids.try_emplace(std::move(sig),
                                  static_cast<int>(sig_ids.size()))
                  .first->second;
      }
      if (sig_ids.size() == blocks) {
        break;
      }
      blocks = sig_ids.size();
      part   = std::move(refined);
    }

    // Smallest-index representative per block.
    std::vector<StateIndex> rep(blocks, -1);
    for (StateIndex q = 0; q < n; ++q) {
      auto b = static_cast<std::size_t>(part[static_cast<std::size_t>(q)]);
      if (rep[b] < 0) {
        rep[b] = q;
      }
    }

    // Canonical numbering: BFS from the block of state 0 in ascending
    // letter order, reseeding from the lowest unvisited state.
    std::vector<int> canon(blocks, -1);
    int              next_id = 0;
    std::vector<int> order;
    std::queue<int>  bfs;
    auto visit = [&](int block) {
      if (canon[static_cast<std::size_t>(block)] < 0) {
        canon[static_cast<std::size_t>(block)] = next_id++;
        order.push_back(block);
        bfs.push(block);
      }
    };
    for (StateIndex seed = 0; seed < n; ++seed) {
      if (canon[static_cast<std::size_t>(
              part[static_cast<std::size_t>(seed)])]
          >= 0) {
        continue;
      }
      visit(part[static_cast<std::size_t>(seed)]);
      while (!bfs.empty()) {
        int block = bfs.front();
        bfs.pop();
        StateIndex q = rep[static_cast<std::size_t>(block)];
        for (Letter a = 0; a < A; ++a) {
          visit(part[static_cast<std::size_t>(m.step(q, a).next)]);
        }
      }
    }

    std::vector<int>                     labels(blocks);
    std::vector<std::vector<Transition>> rows(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      int block = order[b];
      labels[b] = static_cast<int>(b);
      auto& row = rows[b];
      row.resize(static_cast<std::size_t>(A));
      StateIndex q = rep[static_cast<std::size_t>(block)];
      for (Letter a = 0; a < A; ++a) {
        const Transition& t = m.step(q, a);
        row[static_cast<std::size_t>(a)]
            = {t.output,
               canon[static_cast<std::size_t>(
                   part[static_cast<std::size_t>(t.next)])]};
      }
    }

    std::vector<int> state_class(static_cast<std::size_t>(n));
    for (StateIndex q = 0; q < n; ++q) {
      state_class[static_cast<std::size_t>(q)]
          = canon[static_cast<std::size_t>(part[static_cast<std::size_t>(q)])];
    }
    return {MealyMachine(A, std::move(labels), std::move(rows)),
            std::move(state_class)};
  }

  namespace detail {
    std::pair<MealyMachine, std::vector<StateIndex>>
    reachable_tuple_machine(const MealyMachine&                         m,
                            const std::vector<std::vector<StateIndex>>& starts,
                            std::size_t tuple_limit) {
      std::map<std::vector<StateIndex>, int>   index;
      std::vector<std::vector<StateIndex>>     tuples;
      auto intern = [&](std::vector<StateIndex> t) {
        auto [it, inserted] = index.try_emplace(std::move(t),
                                                static_cast<int>(tuples.size()));
        if (inserted) {
          if (tuples.size() >= tuple_limit) {
            throw ResourceLimit("reachable tuple machine exceeds "
                                + std::to_string(tuple_limit) + " states");
          }
          tuples.push_back(it->first);
        }
        return it->second;
      };

      std::vector<StateIndex> start_ids;
      start_ids.reserve(starts.size());
      for (const auto& s : starts) {
        start_ids.push_back(intern(s));
      }

      std::vector<std::vector<Transition>> rows;
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        std::vector<Transition> row(
            static_cast<std::size_t>(m.alphabet_size()));
        for (Letter a = 0; a < m.alphabet_size(); ++a) {
          std::vector<StateIndex> chain = tuples[i];
          Letter                  out   = chain_step(m, chain, a);
          row[static_cast<std::size_t>(a)] = {out, intern(std::move(chain))};
        }
        rows.push_back(std::move(row));
      }

      std::vector<int> labels(tuples.size());
      for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = static_cast<int>(i);
      }
      return {MealyMachine(m.alphabet_size(), std::move(labels),
                           std::move(rows)),
              std::move(start_ids)};
    }
  }  // namespace detail

  bool are_equivalent(const StateWord& u, const StateWord& v) {
    if (u.machine != v.machine) {
      throw MachineMismatch("state words refer to different machines");
    }
    if (u.states == v.states) {
      return true;
    }
    auto [joint, starts]
        = detail::reachable_tuple_machine(*u.machine, {u.states, v.states});
    auto minimized = minimize(joint);
    return minimized.state_class[static_cast<std::size_t>(starts[0])]
           == minimized.state_class[static_cast<std::size_t>(starts[1])];
  }

  std::string canonical_key(const StateWord& w) {
    auto [pointed, starts]
        = detail::reachable_tuple_machine(*w.machine, {w.states});
    auto minimized = minimize(pointed);
    // Every class is reachable from the start, whose class is numbered
    // first by the canonical BFS, so the serialization below is a
    // complete isomorphism invariant of the pointed action.
    const MealyMachine& q = minimized.machine;
    std::string key = "a" + std::to_string(q.alphabet_size()) + ";s"
                      + std::to_string(q.num_states()) + ";p"
                      + std::to_string(minimized.state_class[static_cast<
                          std::size_t>(starts[0])]);
    for (StateIndex c = 0; c < q.num_states(); ++c) {
      key += '|';
      for (Letter a = 0; a < q.alphabet_size(); ++a) {
        const Transition& t = q.step(c, a);
        key += std::to_string(t.output) + ',' + std::to_string(t.next) + ';';
      }
    }
    return key;
  }

}  // namespace automon
