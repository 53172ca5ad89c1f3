// Copyright 2026 The treesimp Authors.
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

#ifndef TREESIMP_CLI_H_
#define TREESIMP_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace treesimp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitItemErrors = 2;

// Entry point of the `treesimp` tool. `args` excludes the program name.
// Input is read from `in` unless a file is given.
int RunCli(const std::vector<std::string> &args, std::istream &in,
           std::ostream &out, std::ostream &err);

}  // namespace treesimp

#endif  // TREESIMP_CLI_H_
