// Copyright 2026 The cutcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUTCERT_CLI_HPP
#define CUTCERT_CLI_HPP

#include <cstdint>
#include <iosfwd>

namespace cutcert {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;  // verify: certificate rejected
inline constexpr int kError = 2;    // bad input, I/O, usage
inline constexpr int kNegativeCut = 10;
inline constexpr int kNegativeDisconnected = 11;
inline constexpr int kCertifyFailed = 20;
}  // namespace exit_code

/// Used when neither --seed nor CUTCERT_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 1;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cutcert

#endif  // CUTCERT_CLI_HPP
