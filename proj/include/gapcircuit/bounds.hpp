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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gapcircuit/checked.hpp"
#include "gapcircuit/error.hpp"
#include "gapcircuit/triangle.hpp"

// Evaluates both sides of the path, circuit and trace inequalities on a
// concrete circuit. Every comparison is exact integer arithmetic.
//
// Notation used below, for an n-term originator:
//   row k        the order-k path d_1^k..d_{n-k}^k (row 0 is the originator)
//   M_k          max of row k, i.e. max_j |d_{j+1}^{k-1} - d_j^{k-1}|
//   L_k          |d_{n-k}^{k-1} - d_1^{k-1}|
//   I            sum_{u=1}^{n-2} sum_{s=1}^{u} M_s, the exact value of the
//                integral over [1, n-1] of the step function t -> sum_{s<=floor(t)} M_s

namespace gapcircuit {

struct Detail {
  std::string key;
  std::variant<bool, std::int64_t, std::string> value;
};

/// Outcome of one inequality or identity evaluated on a circuit.
///
/// `holds` is always the stated comparison evaluated on the data, even when
/// the hypothesis fails; `precondition_met == false` marks the result as
/// vacuous and aggregates count it separately.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::optional<std::int64_t> middle;
  bool holds = false;
  bool precondition_met = true;
  std::vector<std::pair<std::int64_t, std::int64_t>> witnesses;
  std::vector<Detail> details;

  const Detail* detail(std::string_view key) const {
    for (const auto& d : details) {
      if (d.key == key) return &d;
    }
    return nullptr;
  }

  bool flag(std::string_view key) const {
    const Detail* d = detail(key);
    return d != nullptr && std::holds_alternative<bool>(d->value) && std::get<bool>(d->value);
  }
};

namespace names {
inline constexpr std::string_view kLengthBounds = "length_bounds";
inline constexpr std::string_view kSmallSegment = "small_segment_existence";
inline constexpr std::string_view kMonotoneLength = "monotone_length_decrease";
inline constexpr std::string_view kCircuitBounds = "circuit_bounds";
inline constexpr std::string_view kTraceRecurrence = "trace_recurrence";
inline constexpr std::string_view kAverageTrace = "average_trace_bound";
inline constexpr std::string_view kTraceCircuit = "trace_circuit_theorem";
inline constexpr std::string_view kZeroExistence = "zero_existence";
inline constexpr std::string_view kStrongGilbreath = "strong_gilbreath";
inline constexpr std::string_view kTraceSumIdentity = "trace_sum_identity";
}  // namespace names

namespace detail {

inline void require_order(std::size_t k, std::size_t max_k, std::string_view what) {
  if (k < 1 || k > max_k) {
    throw RangeError(std::string(what) + ": order k=" + std::to_string(k) + " outside [1, " +
                     std::to_string(max_k) + "]");
  }
}

inline void require_size(const Circuit& c, std::size_t min_n, std::string_view what) {
  if (c.n() < min_n) {
    throw RangeError(std::string(what) + " needs n >= " + std::to_string(min_n) + ", got n=" +
                     std::to_string(c.n()));
  }
}

inline std::int64_t row_max(std::span<const std::int64_t> r) { return *std::max_element(r.begin(), r.end()); }

// L_k for 1 <= k <= n-1.
inline std::int64_t telescoped_lower(const Circuit& c, std::size_t k) {
  const auto prev = c.row(k - 1);
  return checked_abs_diff(prev[c.n() - k - 1], prev[0], "length lower bound");
}

// (n-2) * min_{k=1..n-2} L_k
inline std::int64_t circuit_lower(const Circuit& c) {
  std::int64_t best = telescoped_lower(c, 1);
  for (std::size_t k = 2; k + 2 <= c.n(); ++k) best = std::min(best, telescoped_lower(c, k));
  return checked_mul(static_cast<std::int64_t>(c.n() - 2), best, "circuit lower bound");
}

struct MaxTerms {
  std::int64_t sum = 0;       // sum_{k=1}^{n-1} M_k
  std::int64_t largest = 0;   // max_k M_k
  std::int64_t integral = 0;  // I
};

inline MaxTerms max_terms(const Circuit& c) {
  MaxTerms t;
  std::int64_t prefix = 0;
  for (std::size_t k = 1; k < c.n(); ++k) {
    const std::int64_t m = row_max(c.row(k));
    t.sum = checked_add(t.sum, m, "sum of row maxima");
    t.largest = std::max(t.largest, m);
    prefix = checked_add(prefix, m, "sum of row maxima");
    // Panels u = 1..n-2 use the prefix through s = u.
    if (k + 2 <= c.n()) t.integral = checked_add(t.integral, prefix, "integral term");
  }
  return t;
}

}  // namespace detail

/// L_k <= iota_{n-k,k} <= (n-k) M_k for 1 <= k <= n-1.
inline BoundReport check_length_bounds(const Circuit& c, std::size_t k) {
  detail::require_order(k, c.max_order(), names::kLengthBounds);
  const auto steps = static_cast<std::int64_t>(c.n() - k);
  BoundReport r;
  r.name = names::kLengthBounds;
  r.params = {{"k", static_cast<std::int64_t>(k)}};
  r.lhs = detail::telescoped_lower(c, k);
  r.middle = path_length(c, k);
  r.rhs = checked_mul(steps, detail::row_max(c.row(k)), "length upper bound");
  r.holds = r.lhs <= *r.middle && *r.middle <= r.rhs;
  return r;
}

/// If M_k <= cap then some d_m^k <= cap. Witnesses: the smallest such m,
/// then the argmin of the row when it differs.
inline BoundReport check_small_segment_existence(const Circuit& c, std::size_t k, std::int64_t cap) {
  detail::require_order(k, c.max_order(), names::kSmallSegment);
  if (cap <= 0) throw InvalidArgument("small segment cap must be positive");
  const auto row = c.row(k);
  BoundReport r;
  r.name = names::kSmallSegment;
  r.params = {{"k", static_cast<std::int64_t>(k)}, {"cap", cap}};
  const std::int64_t row_max = detail::row_max(row);
  r.precondition_met = row_max <= cap;
  const auto argmin = static_cast<std::size_t>(std::min_element(row.begin(), row.end()) - row.begin());
  r.lhs = row[argmin];
  r.rhs = cap;
  for (std::size_t m = 0; m < row.size(); ++m) {
    if (row[m] <= cap) {
      r.witnesses.emplace_back(static_cast<std::int64_t>(m + 1), row[m]);
      if (m != argmin) r.witnesses.emplace_back(static_cast<std::int64_t>(argmin + 1), row[argmin]);
      break;
    }
  }
  r.holds = !r.witnesses.empty();
  r.details.push_back({"row_max", row_max});
  return r;
}

/// If |d_{j+1}^k - d_j^k| <= d_{j+1}^k for j = 1..t-1 then
/// iota_{t-1,k+1} < iota_{t,k}, t = n-k, 1 <= k <= n-2.
///
/// `holds` is the strict comparison. Details carry the non-strict result and
/// whether the case is an equality. The hypothesis stops at j = t-1 because
/// d_{t+1}^k does not exist.
inline BoundReport check_monotone_length_decrease(const Circuit& c, std::size_t k) {
  detail::require_size(c, 3, names::kMonotoneLength);
  detail::require_order(k, c.n() - 2, names::kMonotoneLength);
  const auto row = c.row(k);
  BoundReport r;
  r.name = names::kMonotoneLength;
  r.params = {{"k", static_cast<std::int64_t>(k)}};
  for (std::size_t j = 0; j + 1 < row.size(); ++j) {
    const std::int64_t diff = row[j + 1] > row[j] ? row[j + 1] - row[j] : row[j] - row[j + 1];
    if (diff > row[j + 1]) {
      r.precondition_met = false;
      r.witnesses.emplace_back(static_cast<std::int64_t>(j + 1), diff);
      break;
    }
  }
  const auto next = c.row(k + 1);
  r.lhs = path_length(c, k + 1);
  r.rhs = path_length(c, k);
  r.holds = r.lhs < r.rhs;
  const bool all_zero = std::all_of(next.begin(), next.end(), [](std::int64_t v) { return v == 0; });
  r.details.push_back({"non_strict_holds", r.lhs <= r.rhs});
  r.details.push_back({"equality_case", r.lhs == r.rhs});
  r.details.push_back({"derived_row_all_zero", all_zero});
  r.details.push_back({"hypothesis_range", std::string("j=1..t-1")});
  return r;
}

/// (n-2) min_{k<=n-2} L_k <= kappa(n) <= sum_k M_k + I, n >= 3.
inline BoundReport check_circuit_bounds(const Circuit& c) {
  detail::require_size(c, 3, names::kCircuitBounds);
  const auto terms = detail::max_terms(c);
  BoundReport r;
  r.name = names::kCircuitBounds;
  r.lhs = detail::circuit_lower(c);
  r.middle = circuit_length(c);
  r.rhs = checked_add(terms.sum, terms.integral, "circuit upper bound");
  r.holds = r.lhs <= *r.middle && *r.middle <= r.rhs;
  r.details.push_back({"sum_row_max", terms.sum});
  r.details.push_back({"integral", terms.integral});
  return r;
}

/// 2 tau_{n,s} >= (a_{s+1} - a_s) + d_s^{n-s} + tau_{n,s+1}, 1 <= s <= n-2.
inline BoundReport check_trace_recurrence(const Circuit& c, std::size_t s) {
  detail::require_size(c, 3, names::kTraceRecurrence);
  if (s < 1 || s > c.n() - 2) {
    throw RangeError("trace_recurrence: s=" + std::to_string(s) + " outside [1, " +
                     std::to_string(c.n() - 2) + "]");
  }
  const auto& o = c.originator();
  BoundReport r;
  r.name = names::kTraceRecurrence;
  r.params = {{"s", static_cast<std::int64_t>(s)}};
  r.lhs = checked_mul(2, trace(c, s), "trace recurrence");
  const std::int64_t gap = checked_sub(o.term(s + 1), o.term(s), "originator gap");
  r.rhs = checked_add(checked_add(gap, c.segment(c.n() - s, s), "trace recurrence"),
                      trace(c, s + 1), "trace recurrence");
  r.holds = r.lhs >= r.rhs;
  return r;
}

/// (n-2) min L_k <= sum_s tau_{n,s} <= (n-1) max_k M_k + I, n >= 3.
/// The witness is the segment index minimizing the trace, with its value;
/// details record max_k M_k and whether that trace is at most it.
inline BoundReport check_average_trace_bound(const Circuit& c) {
  detail::require_size(c, 3, names::kAverageTrace);
  const auto terms = detail::max_terms(c);
  BoundReport r;
  r.name = names::kAverageTrace;
  r.lhs = detail::circuit_lower(c);
  std::int64_t total = 0;
  std::size_t best_s = 1;
  std::int64_t best = trace(c, 1);
  for (std::size_t s = 1; s < c.n(); ++s) {
    const std::int64_t t = trace(c, s);
    total = checked_add(total, t, "trace sum");
    if (t < best) {
      best = t;
      best_s = s;
    }
  }
  r.middle = total;
  r.rhs = checked_add(checked_mul(static_cast<std::int64_t>(c.n() - 1), terms.largest, "average trace bound"),
                      terms.integral, "average trace bound");
  r.holds = r.lhs <= total && total <= r.rhs;
  r.witnesses.emplace_back(static_cast<std::int64_t>(best_s), best);
  r.details.push_back({"max_row_max", terms.largest});
  r.details.push_back({"integral", terms.integral});
  r.details.push_back({"min_trace_within_max", best <= terms.largest});
  return r;
}

/// kappa(n) + tau_{n,1} >= (2a_n - a_{n-1} - a_1) + sum_{j=1}^{n-2} d_j^{n-j}.
/// The precondition records a_n >= a_{n-1}; the comparison is evaluated
/// either way.
inline BoundReport check_trace_circuit_theorem(const Circuit& c) {
  detail::require_size(c, 3, names::kTraceCircuit);
  const auto& o = c.originator();
  const std::size_t n = c.n();
  BoundReport r;
  r.name = names::kTraceCircuit;
  r.precondition_met = o.term(n) >= o.term(n - 1);
  r.lhs = checked_add(circuit_length(c), trace(c, 1), "trace circuit lhs");
  std::int64_t rhs = checked_sub(checked_mul(2, o.term(n)), o.term(n - 1), "trace circuit rhs");
  rhs = checked_sub(rhs, o.term(1), "trace circuit rhs");
  std::int64_t diagonal = 0;
  for (std::size_t j = 1; j + 2 <= n; ++j) diagonal = checked_add(diagonal, c.segment(n - j, j), "diagonal");
  r.rhs = checked_add(rhs, diagonal, "trace circuit rhs");
  r.holds = r.lhs >= r.rhs;
  r.details.push_back({"originator_term_part", rhs});
  r.details.push_back({"diagonal_sum", diagonal});
  return r;
}

/// If tau_{n,s} < n-s then d_s^t = 0 for some 1 <= t <= n-s.
inline BoundReport check_zero_existence(const Circuit& c, std::size_t s) {
  if (s < 1 || s > c.n() - 1) {
    throw RangeError("zero_existence: s=" + std::to_string(s) + " outside [1, " +
                     std::to_string(c.n() - 1) + "]");
  }
  BoundReport r;
  r.name = names::kZeroExistence;
  r.params = {{"s", static_cast<std::int64_t>(s)}};
  r.lhs = trace(c, s);
  r.rhs = static_cast<std::int64_t>(c.n() - s);
  r.precondition_met = r.lhs < r.rhs;
  for (std::size_t t = 1; t <= c.n() - s; ++t) {
    if (c.segment(t, s) == 0) {
      r.witnesses.emplace_back(static_cast<std::int64_t>(t), 0);
      break;
    }
  }
  r.holds = !r.witnesses.empty();
  return r;
}

/// If every d_1^k > 0 and tau_{n,1} = n-1 then every d_1^k = 1. The
/// conclusion is forced arithmetically, so a failure under a met hypothesis
/// is flagged as an internal inconsistency.
inline BoundReport check_strong_gilbreath(const Circuit& c) {
  const std::size_t n = c.n();
  BoundReport r;
  r.name = names::kStrongGilbreath;
  r.lhs = trace(c, 1);
  r.rhs = static_cast<std::int64_t>(n - 1);
  bool all_positive = true;
  bool all_ones = true;
  for (std::size_t k = 1; k < n; ++k) {
    const std::int64_t d = c.segment(k, 1);
    all_positive = all_positive && d > 0;
    if (d != 1 && all_ones) {
      all_ones = false;
      r.witnesses.emplace_back(static_cast<std::int64_t>(k), d);
    }
  }
  r.precondition_met = all_positive && r.lhs == r.rhs;
  r.holds = all_ones;
  r.details.push_back({"internal_inconsistency", r.precondition_met && !r.holds});
  return r;
}

/// kappa(n) = sum_s tau_{n,s}, exactly.
inline BoundReport check_trace_sum_identity(const Circuit& c) {
  BoundReport r;
  r.name = names::kTraceSumIdentity;
  r.lhs = circuit_length(c);
  std::int64_t total = 0;
  for (std::size_t s = 1; s < c.n(); ++s) total = checked_add(total, trace(c, s), "trace sum");
  r.rhs = total;
  r.holds = r.lhs == r.rhs;
  return r;
}

// Suite ------------------------------------------------------------------

enum class Verdict { held, vacuous, equality, failed };

/// A strict-decrease failure whose non-strict form holds is an equality
/// case, not a failure.
inline Verdict classify(const BoundReport& r) {
  if (!r.precondition_met) return Verdict::vacuous;
  if (r.holds) return Verdict::held;
  if (r.name == names::kMonotoneLength && r.flag("non_strict_holds")) return Verdict::equality;
  return Verdict::failed;
}

struct SuiteSummary {
  std::size_t checked = 0;
  std::size_t held = 0;
  std::size_t vacuous = 0;
  std::size_t equality = 0;
  std::size_t failed = 0;

  void add(const BoundReport& r) {
    ++checked;
    switch (classify(r)) {
      case Verdict::held: ++held; break;
      case Verdict::vacuous: ++vacuous; break;
      case Verdict::equality: ++equality; break;
      case Verdict::failed: ++failed; break;
    }
  }
};

struct SuiteResult {
  std::vector<BoundReport> reports;
  SuiteSummary summary;
};

/// Runs every check at every valid index. The small-segment cap for order k
/// is max(M_k, 1), the tightest cap that meets its hypothesis.
inline SuiteResult run_suite(const Circuit& c) {
  SuiteResult out;
  auto push = [&](BoundReport r) {
    out.summary.add(r);
    out.reports.push_back(std::move(r));
  };
  const std::size_t n = c.n();
  for (std::size_t k = 1; k < n; ++k) push(check_length_bounds(c, k));
  for (std::size_t k = 1; k < n; ++k) {
    push(check_small_segment_existence(c, k, std::max<std::int64_t>(detail::row_max(c.row(k)), 1)));
  }
  for (std::size_t k = 1; k + 2 <= n; ++k) push(check_monotone_length_decrease(c, k));
  if (n >= 3) push(check_circuit_bounds(c));
  for (std::size_t s = 1; s + 2 <= n; ++s) push(check_trace_recurrence(c, s));
  if (n >= 3) push(check_average_trace_bound(c));
  if (n >= 3) push(check_trace_circuit_theorem(c));
  for (std::size_t s = 1; s < n; ++s) push(check_zero_existence(c, s));
  push(check_strong_gilbreath(c));
  push(check_trace_sum_identity(c));
  return out;
}

}  // namespace gapcircuit
