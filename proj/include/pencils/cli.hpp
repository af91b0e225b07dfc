/*
   Copyright 2026 The pencils authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PENCILS_CLI_HPP
#define PENCILS_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pencils/classifier.hpp"
#include "pencils/veronese.hpp"

namespace pencils {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitInconsistency = 3,
    kExitOutput = 4,
};

/**
 * @brief Runs the command line `args` (without the program name).
 *
 * Records go to `out` unless --out names a file; status lines, progress and
 * error messages go to `err`. `in` supplies solids to `classify` when none is
 * given on the command line. Returns one of the ExitCode values.
 */
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Matching entries of Campbell's classification, or "-".
std::string_view campbell_correspondence(OrbitLabel label);

/// A conic as a LaTeX polynomial in X_0, X_1, X_2. Coefficients other than
/// 0 and 1 print as powers of the field's primitive element \omega.
std::string conic_latex(const Field& field, const Conic& c);

}  // namespace pencils

#endif  // PENCILS_CLI_HPP
