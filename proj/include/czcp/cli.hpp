// Copyright 2026 The czcp Authors.
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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace czcp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBelowThreshold = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line. args excludes the program name. Reports and data
// go to out, diagnostics to err; files are written only at paths named by
// the flags.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// CZCP_MAX_N when set to a positive integer, otherwise 2048.
std::size_t max_length_from_env();

}  // namespace czcp::cli
