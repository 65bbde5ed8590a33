// Copyright 2026 The gapcircuit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "gapcircuit/gapcircuit.hpp"

namespace gapcircuit::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;  // check found a failure, verify found d_1^k != 1
inline constexpr int kExitUsage = 2;           // bad flags, unreadable input, budget exceeded

inline constexpr std::size_t kDefaultTriangleCap = 10'000;
inline constexpr std::uint64_t kDefaultSeed = 1;

enum class Format { json, csv, text };

// Where the originator comes from. Exactly one source may be set.
struct InputSpec {
  std::optional<std::uint64_t> primes;
  std::optional<std::uint64_t> limit;
  std::optional<std::string> file;
  std::optional<std::size_t> n;
  std::int64_t g_max = 2;
  bool leading_unit_gap = false;
};

struct RunConfig {
  std::string command;
  InputSpec input;
  Format format = Format::json;
  SieveBudget budget;
  std::size_t cap = kDefaultTriangleCap;
  VerifyMethod method = VerifyMethod::frontier;
  std::size_t scan_depth = kDefaultScanDepth;
  std::size_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 0;
  bool timing = false;
  std::optional<std::string> dump_dir;
};

Originator resolve_input(const RunConfig& cfg);

int cmd_triangle(const RunConfig& cfg, std::ostream& out);
int cmd_stats(const RunConfig& cfg, std::ostream& out);
int cmd_check(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_search(const RunConfig& cfg, std::ostream& out);

/// Parses argv, dispatches, and maps errors to exit statuses.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gapcircuit::cli
