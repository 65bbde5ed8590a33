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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gapcircuit/checked.hpp"
#include "gapcircuit/error.hpp"
#include "gapcircuit/originator.hpp"

// Gilbreath check: does every prime segment d_1^k, k = 1..n-1, equal 1?
//
// Both methods stream the triangle row by row in one O(n) buffer, so they
// never materialize a circuit.
//
// The frontier method stops early once a row reads 1, x_2, ..., x_m with
// every x_j in {0, 2}. Absolute differences of values in {0, 2} stay in
// {0, 2}, and |x - 1| = 1 for x in {0, 2}, so every later row starts with 1.

namespace gapcircuit {

enum class VerifyMethod { naive, frontier };

constexpr std::string_view to_string(VerifyMethod m) noexcept {
  return m == VerifyMethod::naive ? "naive" : "frontier";
}

struct Failure {
  std::size_t order;    // k
  std::int64_t value;   // d_1^k
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerifyReport {
  std::size_t n = 0;
  std::size_t max_order_checked = 0;
  bool all_ones = false;
  std::optional<Failure> first_failure;
  VerifyMethod method = VerifyMethod::naive;
  std::optional<std::size_t> stabilization_row;
  std::chrono::microseconds elapsed{0};
};

inline constexpr std::size_t kDefaultScanDepth = 500;

namespace detail {

// row[j] <- |row[j+1] - row[j]| for j < len-1. With TrackTail, returns
// whether every new entry after the first lies in {0, 2}.
template <bool TrackTail>
inline bool derive_in_place(std::int64_t* row, std::size_t len) {
  std::int64_t off_tail = 0;
  const std::size_t m = len - 1;
  for (std::size_t j = 0; j < m; ++j) {
    const std::int64_t d = row[j + 1] - row[j];
    const std::int64_t v = d < 0 ? -d : d;
    row[j] = v;
    if constexpr (TrackTail) off_tail |= (j == 0 ? 0 : (v & ~std::int64_t{2}));
  }
  return off_tail == 0;
}

inline std::vector<std::int64_t> first_gap_row(const Originator& o) {
  const auto t = o.terms();
  std::vector<std::int64_t> row(t.size() - 1);
  for (std::size_t j = 0; j + 1 < t.size(); ++j) row[j] = checked_abs_diff(t[j + 1], t[j], "order-1 segment");
  return row;
}

inline bool tail_in_zero_two(const std::vector<std::int64_t>& row) {
  for (std::size_t j = 1; j < row.size(); ++j) {
    if (row[j] != 0 && row[j] != 2) return false;
  }
  return true;
}

template <typename Clock>
inline std::chrono::microseconds since(typename Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

}  // namespace detail

/// Derives every row and checks d_1^k = 1 for k = 1..n-1. O(n) memory and
/// O(n^2) time; stops at the first failure.
inline VerifyReport verify_naive(const Originator& o) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  if (o.size() < 2) throw InvalidArgument("verification needs n >= 2");

  VerifyReport rep;
  rep.n = o.size();
  rep.method = VerifyMethod::naive;
  auto row = detail::first_gap_row(o);
  std::size_t len = row.size();
  for (std::size_t k = 1;; ++k) {
    if (row[0] != 1) {
      rep.first_failure = Failure{k, row[0]};
      rep.max_order_checked = k - 1;
      break;
    }
    if (len == 1) {
      rep.all_ones = true;
      rep.max_order_checked = k;
      break;
    }
    detail::derive_in_place<false>(row.data(), len);
    --len;
  }
  rep.elapsed = detail::since<Clock>(start);
  return rep;
}

/// Checks rows directly until one qualifies for the {0, 2} stabilization
/// criterion, then certifies the remaining orders. The criterion is tried on
/// rows 1..scan_depth only; past that the method continues naively and
/// reports itself as naive.
inline VerifyReport verify_frontier(const Originator& o, std::size_t scan_depth = kDefaultScanDepth) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  if (o.size() < 2) throw InvalidArgument("verification needs n >= 2");
  if (scan_depth < 1) throw InvalidArgument("scan_depth must be >= 1");

  VerifyReport rep;
  rep.n = o.size();
  rep.method = VerifyMethod::frontier;
  auto row = detail::first_gap_row(o);
  std::size_t len = row.size();
  bool tail_ok = detail::tail_in_zero_two(row);
  for (std::size_t k = 1;; ++k) {
    if (row[0] != 1) {
      rep.first_failure = Failure{k, row[0]};
      rep.max_order_checked = k - 1;
      break;
    }
    if (k <= scan_depth && tail_ok) {
      rep.all_ones = true;
      rep.stabilization_row = k;
      rep.max_order_checked = rep.n - 1;
      break;
    }
    if (len == 1) {
      rep.all_ones = true;
      rep.max_order_checked = k;
      break;
    }
    if (k + 1 <= scan_depth) {
      tail_ok = detail::derive_in_place<true>(row.data(), len);
    } else {
      rep.method = VerifyMethod::naive;
      detail::derive_in_place<false>(row.data(), len);
    }
    --len;
  }
  rep.elapsed = detail::since<Clock>(start);
  return rep;
}

}  // namespace gapcircuit
