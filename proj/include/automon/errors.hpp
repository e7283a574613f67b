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

#ifndef AUTOMON_ERRORS_HPP_
#define AUTOMON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace automon {

  //! Base class of every exception thrown by this library.
  struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  //! A gap value was zero or negative.
  struct NonPositiveGap : Error {
    explicit NonPositiveGap(long long value)
        : Error("gap values must be strictly positive, got "
                + std::to_string(value)),
          value(value) {}
    long long value;
  };

  //! Two non-gaps sum to a gap, so the complement is not closed.
  struct ClosureViolation : Error {
    ClosureViolation(long long a, long long b)
        : Error("complement not closed under addition: " + std::to_string(a)
                + " + " + std::to_string(b) + " is a gap"),
          a(a),
          b(b) {}
    long long a;
    long long b;
  };

  //! The generators have gcd > 1, so the complement is infinite.
  struct InfiniteComplement : Error {
    using Error::Error;
  };

  //! A structural precondition on an argument was violated.
  struct BadParameter : Error {
    using Error::Error;
  };

  //! An input letter is outside the machine's alphabet.
  struct LetterOutOfRange : Error {
    using Error::Error;
  };

  //! Two wreath recursions live over different machines or alphabets.
  struct AlphabetMismatch : Error {
    using Error::Error;
  };

  //! Two state words refer to different machines.
  struct MachineMismatch : Error {
    using Error::Error;
  };

  //! The requested state cannot be deleted (it has incoming edges or
  //! does not exist).
  struct NotDeletable : Error {
    explicit NotDeletable(int label)
        : Error("state with label " + std::to_string(label)
                + " cannot be deleted"),
          label(label) {}
    int label;
  };

  //! The action on 0^w did not produce a decodable pattern.
  struct DecodeError : Error {
    using Error::Error;
  };

  //! An enumeration exceeded its configured class limit.
  struct ResourceLimit : Error {
    using Error::Error;
  };

  //! The verification bounds do not satisfy their preconditions.
  struct BadBound : Error {
    using Error::Error;
  };

}  // namespace automon

#endif  // AUTOMON_ERRORS_HPP_
