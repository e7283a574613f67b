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

#ifndef AUTOMON_CLI_HPP_
#define AUTOMON_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace automon::cli {

  //! Dispatch one command-line invocation (arguments without the
  //! program name).  Exit codes: 0 success, 1 usage or input error,
  //! 2 verification failure, 3 resource limit.
  int run(const std::vector<std::string>& args, std::ostream& out,
          std::ostream& err);

}  // namespace automon::cli

#endif  // AUTOMON_CLI_HPP_
