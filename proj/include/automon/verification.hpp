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

#ifndef AUTOMON_VERIFICATION_HPP_
#define AUTOMON_VERIFICATION_HPP_

#include <optional>
#include <span>
#include <string>

#include "construction.hpp"
#include "mealy.hpp"
#include "numerical_semigroup.hpp"

namespace automon {

  //! The number represented by a state word of a construction machine,
  //! read off from its action on a zero sequence of length |w| + 2.
  //!
  //! The image is r n^q 0... with 1 <= r <= n-1, or n^q 0... , or all
  //! zeros; the value is q*n + r.  Throws DecodeError when the image
  //! does not match this pattern (the machine is then not one of ours,
  //! or broken).
  long long value_of(const MealyMachine& m, std::span<const StateIndex> w);

  struct FreeMonogenicResult {
    bool        ok;
    std::string detail;  // failing check when !ok

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  //! Checks that the monoid generated by monogenic_machine(n) is free
  //! monogenic at desk scale: powers of state 1 up to max_power decode
  //! to their exponent, have pairwise distinct canonical keys, and the
  //! n-th power equals state n.  Throws BadParameter if n < 2 or
  //! max_power < n.
  FreeMonogenicResult free_monogenic_check(int n, int max_power);

  struct VerificationReport {
    long long                  checked_bound;    // B
    int                        max_word_length;  // L
    bool                       value_map_ok;
    bool                       distinctness_ok;
    bool                       set_equality_ok;
    std::optional<std::string> counterexample;

    bool all_ok() const noexcept {
      return value_map_ok && distinctness_ok && set_equality_ok;
    }
  };

  //! Bounded check that the machine generates exactly s.
  //!
  //! value_map: words decode to their label sums (exhaustively up to
  //! length min(L, 3), plus 1000 seeded random words up to length L).
  //! distinctness: on the exhaustive set, canonical keys coincide
  //! exactly when values do.  set_equality: the values attained by
  //! words of length <= L, the dynamic-programming sums of up to L
  //! generator labels, and the members of s agree within [0, B].
  //!
  //! Checks run in the order above and stop at the first failure, so a
  //! false later flag of a failed report means "not verified".
  //! Throws BadBound unless B >= conductor + 2k and L >= ceil(B / k).
  VerificationReport verify_isomorphism(const SemigroupMachine&   sm,
                                        const NumericalSemigroup& s,
                                        long long B, int L);

  //! Default bound used by the command line: conductor + 4k.
  long long default_bound(const NumericalSemigroup& s);

  //! The minimal word length admissible for a bound: ceil(B / k).
  int minimal_word_length(const NumericalSemigroup& s, long long bound);

}  // namespace automon

#endif  // AUTOMON_VERIFICATION_HPP_
