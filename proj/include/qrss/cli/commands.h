// Copyright 2026 The QRSS Authors
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

// Subcommands of the qrss tool. Each returns a process exit code.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qrss::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitConfig = 2,
  kExitMismatch = 3,
  kExitPreference = 4,
};

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<long> trials;
  std::string out;       // empty: write to the output stream
  std::string expected;  // access-structure comparison file
};

int cmd_encode(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_access_structure(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_simulate(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_check(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const Options& opts, std::ostream& out, std::ostream& err);

/// Full command line, subcommand first.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qrss::cli
