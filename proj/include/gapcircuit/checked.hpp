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

#include "gapcircuit/error.hpp"

namespace gapcircuit {

// Checked signed 64-bit arithmetic. Every helper throws OverflowError
// instead of wrapping; `what` names the quantity for the message.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b,
                                const char* what = "sum") {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError(std::string(what) + " exceeds the signed 64-bit range");
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b,
                                const char* what = "difference") {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError(std::string(what) + " exceeds the signed 64-bit range");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b,
                                const char* what = "product") {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError(std::string(what) + " exceeds the signed 64-bit range");
  }
  return r;
}

// |a - b|, checked.
inline std::int64_t checked_abs_diff(std::int64_t a, std::int64_t b,
                                     const char* what = "absolute difference") {
  const std::int64_t d = checked_sub(a, b, what);
  if (d == INT64_MIN) {
    throw OverflowError(std::string(what) + " exceeds the signed 64-bit range");
  }
  return d < 0 ? -d : d;
}

}  // namespace gapcircuit
