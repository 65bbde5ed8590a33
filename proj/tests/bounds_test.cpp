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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "gapcircuit/bounds.hpp"
#include "gapcircuit/sieve.hpp"

namespace gapcircuit {
namespace {

using V = std::vector<std::int64_t>;
using W = std::vector<std::pair<std::int64_t, std::int64_t>>;

Circuit circuit(V a) { return Circuit(Originator(std::move(a))); }

const Circuit& five_primes() {
  static const Circuit c = circuit({2, 3, 5, 7, 11});
  return c;
}

// Expected values below were produced by tests/oracle/oracle.py.

TEST(LengthBoundsTest, HandTriangle) {
  const auto r = check_length_bounds(five_primes(), 2);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_EQ(r.middle, 3);
  EXPECT_EQ(r.rhs, 6);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.precondition_met);

  const auto k1 = check_length_bounds(five_primes(), 1);
  EXPECT_EQ(std::tuple(k1.lhs, *k1.middle, k1.rhs), std::tuple(5, 9, 16));
  const auto k4 = check_length_bounds(five_primes(), 4);
  EXPECT_EQ(std::tuple(k4.lhs, *k4.middle, k4.rhs), std::tuple(0, 1, 1));
}

TEST(LengthBoundsTest, DegenerateCases) {
  const auto flat = check_length_bounds(circuit({4, 4, 4}), 2);
  EXPECT_EQ(std::tuple(flat.lhs, *flat.middle, flat.rhs), std::tuple(0, 0, 0));
  EXPECT_TRUE(flat.holds);
  // n = 2: the lower index n-k and the first index coincide.
  const auto pair = check_length_bounds(circuit({0, 1}), 1);
  EXPECT_EQ(std::tuple(pair.lhs, *pair.middle, pair.rhs), std::tuple(0, 1, 1));
  EXPECT_TRUE(pair.holds);
  EXPECT_THROW(check_length_bounds(five_primes(), 0), RangeError);
  EXPECT_THROW(check_length_bounds(five_primes(), 5), RangeError);
}

TEST(SmallSegmentTest, HandTriangle) {
  const auto r = check_small_segment_existence(five_primes(), 2, 2);
  EXPECT_TRUE(r.precondition_met);
  EXPECT_TRUE(r.holds);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses.front(), (std::pair<std::int64_t, std::int64_t>{1, 1}));
  // The row minimum (d_2^2 = 0) follows as a second witness.
  EXPECT_EQ(r.witnesses, (W{{1, 1}, {2, 0}}));
}

TEST(SmallSegmentTest, LargeCapAndVacuousCap) {
  const auto big = check_small_segment_existence(five_primes(), 1, 100);
  EXPECT_TRUE(big.precondition_met);
  EXPECT_TRUE(big.holds);
  EXPECT_EQ(big.witnesses, (W{{1, 1}}));  // first index is also the argmin
  const auto small = check_small_segment_existence(five_primes(), 1, 3);
  EXPECT_FALSE(small.precondition_met);
  EXPECT_EQ(classify(small), Verdict::vacuous);
  EXPECT_THROW(check_small_segment_existence(five_primes(), 1, 0), InvalidArgument);
  EXPECT_THROW(check_small_segment_existence(five_primes(), 9, 1), RangeError);
}

TEST(MonotoneLengthTest, HandTriangle) {
  const auto r = check_monotone_length_decrease(five_primes(), 1);
  EXPECT_TRUE(r.precondition_met);
  EXPECT_EQ(r.lhs, 3);
  EXPECT_EQ(r.rhs, 9);
  EXPECT_TRUE(r.holds);
  // Row 2 = (1, 0, 2): |0 - 1| > 0 breaks the hypothesis at j = 1.
  const auto r2 = check_monotone_length_decrease(five_primes(), 2);
  EXPECT_FALSE(r2.precondition_met);
  EXPECT_EQ(r2.witnesses, (W{{1, 1}}));
  EXPECT_THROW(check_monotone_length_decrease(five_primes(), 4), RangeError);
  EXPECT_THROW(check_monotone_length_decrease(circuit({1, 2}), 1), RangeError);
}

TEST(MonotoneLengthTest, ConstantRowIsAnEqualityCase) {
  const auto r = check_monotone_length_decrease(circuit({4, 4, 4}), 1);
  EXPECT_TRUE(r.precondition_met);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.flag("non_strict_holds"));
  EXPECT_TRUE(r.flag("equality_case"));
  EXPECT_TRUE(r.flag("derived_row_all_zero"));
  EXPECT_EQ(classify(r), Verdict::equality);
}

TEST(MonotoneLengthTest, EqualityWithNonZeroDerivedRow) {
  // Row 1 = (0, 2, 1) meets the hypothesis and row 2 = (2, 1) has the same
  // length, so equality is not confined to all-zero rows in general.
  const auto r = check_monotone_length_decrease(circuit({0, 0, 2, 3}), 1);
  EXPECT_TRUE(r.precondition_met);
  EXPECT_EQ(r.lhs, 3);
  EXPECT_EQ(r.rhs, 3);
  EXPECT_TRUE(r.flag("equality_case"));
  EXPECT_FALSE(r.flag("derived_row_all_zero"));
}

TEST(MonotoneLengthTest, ZeroAfterLargerValueIsVacuous) {
  const auto r = check_monotone_length_decrease(circuit({0, 3, 3, 5}), 1);  // row 1 = (3, 0, 2)
  EXPECT_FALSE(r.precondition_met);
  EXPECT_EQ(classify(r), Verdict::vacuous);
}

TEST(CircuitBoundsTest, FrozenOracleValues) {
  const auto r = check_circuit_bounds(five_primes());
  EXPECT_EQ(std::tuple(r.lhs, *r.middle, r.rhs), std::tuple(3, 16, 27));
  EXPECT_TRUE(r.holds);
  const auto flat = check_circuit_bounds(circuit({4, 4, 4}));
  EXPECT_EQ(std::tuple(flat.lhs, *flat.middle, flat.rhs), std::tuple(0, 0, 0));
  const auto line = check_circuit_bounds(circuit({0, 1, 2}));
  EXPECT_EQ(std::tuple(line.lhs, *line.middle, line.rhs), std::tuple(1, 2, 2));
  EXPECT_THROW(check_circuit_bounds(circuit({0, 1})), RangeError);
}

TEST(CircuitBoundsTest, IntegralEqualsWeightedMaxima) {
  // sum_k M_k + I collapses to sum_k (n-k) M_k. Checked against the oracle
  // rows for random input.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testing::random_signed(rng, 60, 1000);
    if (a.size() < 3) a.push_back(0);
    const auto rows = testing::brute_triangle(a);
    const std::size_t n = a.size();
    std::int64_t weighted = 0;
    for (std::size_t k = 1; k < n; ++k) {
      weighted += static_cast<std::int64_t>(n - k) * *std::max_element(rows[k].begin(), rows[k].end());
    }
    ASSERT_EQ(check_circuit_bounds(Circuit(Originator(a))).rhs, weighted);
  }
}

TEST(TraceRecurrenceTest, FrozenOracleValues) {
  const auto s1 = check_trace_recurrence(five_primes(), 1);
  EXPECT_EQ(std::tuple(s1.lhs, s1.rhs), std::tuple(8, 6));
  EXPECT_TRUE(s1.holds);
  const auto s3 = check_trace_recurrence(five_primes(), 3);
  EXPECT_EQ(std::tuple(s3.lhs, s3.rhs), std::tuple(8, 8));
  EXPECT_TRUE(s3.holds);
  const auto flat = check_trace_recurrence(circuit({4, 4, 4}), 1);
  EXPECT_EQ(std::tuple(flat.lhs, flat.rhs), std::tuple(0, 0));
  EXPECT_THROW(check_trace_recurrence(five_primes(), 4), RangeError);
  EXPECT_THROW(check_trace_recurrence(five_primes(), 0), RangeError);
}

TEST(AverageTraceTest, FrozenOracleValues) {
  const auto r = check_average_trace_bound(five_primes());
  EXPECT_EQ(std::tuple(r.lhs, *r.middle, r.rhs), std::tuple(3, 16, 34));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.witnesses, (W{{1, 4}}));
  const auto flat = check_average_trace_bound(circuit({4, 4, 4}));
  EXPECT_EQ(std::tuple(flat.lhs, *flat.middle, flat.rhs), std::tuple(0, 0, 0));
  const auto evens = check_average_trace_bound(circuit({0, 2, 4}));
  EXPECT_EQ(std::tuple(evens.lhs, *evens.middle, evens.rhs), std::tuple(2, 4, 6));
}

TEST(TraceCircuitTheoremTest, FrozenOracleValues) {
  const auto r = check_trace_circuit_theorem(five_primes());
  EXPECT_EQ(std::tuple(r.lhs, r.rhs), std::tuple(20, 18));
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.precondition_met);
  const auto flat = check_trace_circuit_theorem(circuit({4, 4, 4}));
  EXPECT_EQ(std::tuple(flat.lhs, flat.rhs), std::tuple(0, 0));
  EXPECT_TRUE(flat.holds);
  const auto r137 = check_trace_circuit_theorem(circuit({1, 3, 7}));
  EXPECT_EQ(std::tuple(r137.lhs, r137.rhs), std::tuple(12, 12));
  EXPECT_TRUE(r137.holds);
}

TEST(TraceCircuitTheoremTest, DecreasingTailIsFlaggedButEvaluated) {
  const auto r = check_trace_circuit_theorem(circuit({1, 9, 4}));
  EXPECT_FALSE(r.precondition_met);
  // kappa = 8 + 5 + 3 = 16, tau_1 = 8 + 3 = 11; rhs = (8 - 9 - 1) + d_1^2 = -2 + 3.
  EXPECT_EQ(std::tuple(r.lhs, r.rhs), std::tuple(27, 1));
  EXPECT_TRUE(r.holds);
}

TEST(ZeroExistenceTest, HandTriangle) {
  const auto r = check_zero_existence(five_primes(), 2);
  EXPECT_FALSE(r.precondition_met);
  EXPECT_EQ(std::tuple(r.lhs, r.rhs), std::tuple(4, 3));

  const auto flat = check_zero_existence(circuit({4, 4, 4}), 1);
  EXPECT_TRUE(flat.precondition_met);
  EXPECT_TRUE(flat.holds);
  EXPECT_EQ(flat.witnesses, (W{{1, 0}}));

  const Circuit c = circuit({0, 1, 1});
  const auto s1 = check_zero_existence(c, 1);
  EXPECT_EQ(std::tuple(s1.lhs, s1.rhs, s1.precondition_met), std::tuple(2, 2, false));
  const auto s2 = check_zero_existence(c, 2);
  EXPECT_TRUE(s2.precondition_met);
  EXPECT_TRUE(s2.holds);
  EXPECT_EQ(s2.witnesses, (W{{1, 0}}));
  EXPECT_THROW(check_zero_existence(c, 3), RangeError);
}

TEST(StrongGilbreathTest, Cases) {
  const auto r = check_strong_gilbreath(five_primes());
  EXPECT_TRUE(r.precondition_met);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.flag("internal_inconsistency"));
  const auto flat = check_strong_gilbreath(circuit({4, 4, 4}));
  EXPECT_FALSE(flat.precondition_met);
  const auto two = check_strong_gilbreath(circuit({0, 2}));
  EXPECT_FALSE(two.precondition_met);
  EXPECT_EQ(std::tuple(two.lhs, two.rhs), std::tuple(2, 1));
  EXPECT_EQ(two.witnesses, (W{{1, 2}}));
}

TEST(TraceSumIdentityTest, Cases) {
  const auto r = check_trace_sum_identity(five_primes());
  EXPECT_EQ(std::tuple(r.lhs, r.rhs, r.holds), std::tuple(16, 16, true));
  EXPECT_TRUE(check_trace_sum_identity(circuit({4, 4, 4})).holds);
  const auto pair = check_trace_sum_identity(circuit({0, 1}));
  EXPECT_EQ(std::tuple(pair.lhs, pair.rhs), std::tuple(1, 1));
}

TEST(SuiteTest, SmallOriginatorsRunOnlyApplicableChecks) {
  const auto suite = run_suite(circuit({0, 1}));
  std::vector<std::string> names;
  for (const auto& r : suite.reports) names.push_back(r.name);
  EXPECT_EQ(names, (std::vector<std::string>{"length_bounds", "small_segment_existence", "zero_existence",
                                             "strong_gilbreath", "trace_sum_identity"}));
  EXPECT_EQ(suite.summary.failed, 0u);
}

TEST(SuiteTest, CountsAreExhaustive) {
  const auto suite = run_suite(five_primes());
  const auto& s = suite.summary;
  EXPECT_EQ(s.checked, suite.reports.size());
  EXPECT_EQ(s.checked, s.held + s.vacuous + s.equality + s.failed);
  EXPECT_EQ(s.failed, 0u);
  EXPECT_EQ(s.checked, 23u);
}

TEST(SuiteTest, ConstantOriginatorHasOneEqualityCase) {
  const auto suite = run_suite(circuit({5, 5, 5, 5}));
  EXPECT_EQ(suite.summary.failed, 0u);
  EXPECT_EQ(suite.summary.equality, 2u);  // k = 1, 2: 0 < 0 fails, 0 <= 0 holds
}

std::string dump_counterexample(const Originator& o, const std::string& tag) {
  const auto path = std::filesystem::temp_directory_path() / ("gapcircuit_counterexample_" + tag + ".txt");
  std::ofstream(path) << render_sequence(o);
  return path.string();
}

void expect_no_nonvacuous_failure(const Originator& o, const std::string& tag) {
  const Circuit c(o);
  for (const auto& r : run_suite(c).reports) {
    const Verdict v = classify(r);
    if (v == Verdict::failed) {
      ADD_FAILURE() << r.name << " failed; replay with " << dump_counterexample(o, tag);
      return;
    }
    if (r.name == names::kSmallSegment && r.precondition_met) {
      const auto [m, value] = r.witnesses.front();
      ASSERT_EQ(c.segment(static_cast<std::size_t>(r.params[0].second), static_cast<std::size_t>(m)), value);
      ASSERT_LE(value, r.params[1].second);
    }
    ASSERT_FALSE(r.flag("internal_inconsistency")) << dump_counterexample(o, tag);
  }
}

TEST(BoundsPropertyTest, PrimePrefixesUpTo500) {
  const auto primes = first_n_primes(500);
  for (std::size_t n = 3; n <= 500; ++n) {
    const Originator o(V(primes.terms().begin(), primes.terms().begin() + static_cast<std::ptrdiff_t>(n)));
    const Circuit c(o);
    for (std::size_t k = 1; k < n; ++k) ASSERT_TRUE(check_length_bounds(c, k).holds) << n << " " << k;
    ASSERT_TRUE(check_trace_sum_identity(c).holds) << n;
    ASSERT_TRUE(check_trace_circuit_theorem(c).holds) << n;
    ASSERT_TRUE(check_circuit_bounds(c).holds) << n;
    ASSERT_TRUE(check_average_trace_bound(c).holds) << n;
    if (n % 50 == 0) expect_no_nonvacuous_failure(o, "prime_" + std::to_string(n));
  }
}

TEST(BoundsPropertyTest, RandomGeneralizedOriginators) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 1000; ++trial) {
    RandomModel m;
    m.n = 2 + rng() % 199;
    m.g_max = 2 * static_cast<std::int64_t>(1 + rng() % 10);
    m.seed = rng();
    m.leading_unit_gap = trial % 2 == 1;
    expect_no_nonvacuous_failure(random_generalized(m), "generalized_" + std::to_string(trial));
  }
}

TEST(BoundsPropertyTest, RandomSignedOriginators) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    expect_no_nonvacuous_failure(Originator(testing::random_signed(rng, 80, 500)),
                                 "signed_" + std::to_string(trial));
  }
}

}  // namespace
}  // namespace gapcircuit
