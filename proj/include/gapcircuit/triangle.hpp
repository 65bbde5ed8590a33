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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gapcircuit/checked.hpp"
#include "gapcircuit/error.hpp"
#include "gapcircuit/originator.hpp"

// Paths, circuits and their statistics.
//
// Indices follow the usual 1-based convention throughout the public API:
// order k, segment j or s, term i. Segment d_j^k of an n-term originator
// exists for 1 <= k <= n-1 and 1 <= j <= n-k.

namespace gapcircuit {

/// A path of order k: the k-th iterated absolute forward difference of an
/// originator. Order 0 is the originator itself.
class Path {
 public:
  Path(std::size_t order, std::vector<std::int64_t> segments)
      : order_(order), segments_(std::move(segments)) {
    if (segments_.empty()) throw InvalidArgument("a path has at least one step");
    if (order_ > 0) {
      for (std::int64_t v : segments_) {
        if (v < 0) throw InvalidArgument("segments of order >= 1 are nonnegative");
      }
    }
  }

  static Path trivial(const Originator& o) {
    return Path(0, std::vector<std::int64_t>(o.terms().begin(), o.terms().end()));
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t steps() const noexcept { return segments_.size(); }
  std::span<const std::int64_t> segments() const noexcept { return segments_; }

  /// d_j, 1-based.
  std::int64_t segment(std::size_t j) const {
    if (j < 1 || j > segments_.size()) {
      throw RangeError("segment " + std::to_string(j) + " outside [1, " +
                       std::to_string(segments_.size()) + "]");
    }
    return segments_[j - 1];
  }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::size_t order_;
  std::vector<std::int64_t> segments_;
};

namespace detail {

// out[j] = |in[j+1] - in[j]| for j < in.size()-1. Only differences of the
// signed originator row can overflow; later rows are bounded by their
// predecessor's maximum.
inline void abs_forward_difference(std::span<const std::int64_t> in, std::int64_t* out,
                                   bool checked) {
  const std::size_t m = in.size() - 1;
  if (checked) {
    for (std::size_t j = 0; j < m; ++j) out[j] = checked_abs_diff(in[j + 1], in[j], "order-1 segment");
  } else {
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t d = in[j + 1] - in[j];
      out[j] = d < 0 ? -d : d;
    }
  }
}

}  // namespace detail

/// The next-order path: |d_{j+1} - d_j| for j = 1..t-1.
inline Path derive(const Path& p) {
  if (p.steps() < 2) {
    throw InvalidArgument("cannot derive a path with a single step (order " +
                          std::to_string(p.order()) + ")");
  }
  std::vector<std::int64_t> next(p.steps() - 1);
  detail::abs_forward_difference(p.segments(), next.data(), p.order() == 0);
  return Path(p.order() + 1, std::move(next));
}

/// Maximal-step path of order k (n-k segments).
inline Path path_of_order(const Originator& o, std::size_t k) {
  const std::size_t n = o.size();
  if (k < 1 || k + 1 > n) {
    throw RangeError("order " + std::to_string(k) + " outside [1, " +
                     std::to_string(n == 0 ? 0 : n - 1) + "]");
  }
  Path p = Path::trivial(o);
  for (std::size_t i = 0; i < k; ++i) p = derive(p);
  return p;
}

/// n(n-1)/2: segments across all paths of orders 1..n-1.
constexpr std::uint64_t total_maximal_steps(std::uint64_t n) noexcept {
  return n == 0 ? 0 : n * (n - 1) / 2;
}

/// Sum of the values in a span, checked.
inline std::int64_t checked_sum(std::span<const std::int64_t> values, const char* what = "sum") {
  std::int64_t total = 0;
  for (std::int64_t v : values) total = checked_add(total, v, what);
  return total;
}

/// iota: the length of a path, the sum of its segments.
inline std::int64_t path_length(const Path& p) {
  return checked_sum(p.segments(), "path length");
}

/// All maximal-step paths of orders 1..n-1 of one originator, held in one
/// contiguous triangular buffer. Immutable once built.
class Circuit {
 public:
  explicit Circuit(Originator o) : originator_(std::move(o)) {
    const std::size_t n = originator_.size();
    if (n < 2) throw InvalidArgument("a circuit needs an originator with n >= 2 terms");
    cells_.resize(total_maximal_steps(n));
    detail::abs_forward_difference(originator_.terms(), cells_.data(), true);
    for (std::size_t k = 2; k < n; ++k) {
      detail::abs_forward_difference(row(k - 1), cells_.data() + offset(k), false);
    }
  }

  const Originator& originator() const noexcept { return originator_; }
  std::size_t n() const noexcept { return originator_.size(); }
  std::size_t max_order() const noexcept { return n() - 1; }
  std::size_t segment_count() const noexcept { return cells_.size(); }

  /// Row of order k (0 = originator) with n-k entries.
  std::span<const std::int64_t> row(std::size_t k) const {
    if (k == 0) return originator_.terms();
    if (k >= n()) {
      throw RangeError("order " + std::to_string(k) + " outside [0, " + std::to_string(n() - 1) + "]");
    }
    return {cells_.data() + offset(k), n() - k};
  }

  /// d_j^k, both 1-based; k = 0 addresses the originator.
  std::int64_t segment(std::size_t k, std::size_t j) const {
    const auto r = row(k);
    if (j < 1 || j > r.size()) {
      throw RangeError("segment " + std::to_string(j) + " of order " + std::to_string(k) +
                       " outside [1, " + std::to_string(r.size()) + "]");
    }
    return r[j - 1];
  }

  Path path(std::size_t k) const {
    const auto r = row(k);
    return Path(k, std::vector<std::int64_t>(r.begin(), r.end()));
  }

 private:
  // Start of row k >= 1: sum_{i=1}^{k-1} (n - i).
  std::size_t offset(std::size_t k) const noexcept {
    const std::size_t km1 = k - 1;
    return km1 * n() - km1 * k / 2;
  }

  Originator originator_;
  std::vector<std::int64_t> cells_;
};

inline Circuit build_circuit(const Originator& o) { return Circuit(o); }

/// iota_{n-k,k} of the circuit's order-k row.
inline std::int64_t path_length(const Circuit& c, std::size_t k) {
  if (k < 1) throw RangeError("path length needs order k >= 1");
  return checked_sum(c.row(k), "path length");
}

/// kappa(n): total of all path lengths.
inline std::int64_t circuit_length(const Circuit& c) {
  std::int64_t total = 0;
  for (std::size_t k = 1; k < c.n(); ++k) {
    if (__builtin_add_overflow(total, path_length(c, k), &total)) {
      throw OverflowError("circuit length exceeds the signed 64-bit range for n=" + std::to_string(c.n()) +
                          "; kappa grows like n^2/2 times the largest gap, so shorten the originator "
                          "or shrink its terms");
    }
  }
  return total;
}

/// tau_{n,s}: sum of d_s^k over k = 1..n-s.
inline std::int64_t trace(const Circuit& c, std::size_t s) {
  const std::size_t n = c.n();
  if (s < 1 || s > n - 1) {
    throw RangeError("trace index s=" + std::to_string(s) + " outside [1, " + std::to_string(n - 1) + "]");
  }
  std::int64_t total = 0;
  for (std::size_t k = 1; k <= n - s; ++k) {
    total = checked_add(total, c.row(k)[s - 1], "trace");
  }
  return total;
}

}  // namespace gapcircuit
