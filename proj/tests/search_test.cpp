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

#include <set>

#include "gapcircuit/report_json.hpp"
#include "gapcircuit/search.hpp"

namespace gapcircuit {
namespace {

TEST(SearchTest, GapTwoModelAlwaysFailsAtOrderOne) {
  // (1, 3, 5, 7): rows (2,2,2), (0,0), (0).
  const auto r = search_counterexamples({4, 2, 0}, 25, 9);
  EXPECT_EQ(r.failures, 25u);
  EXPECT_EQ(r.failure_orders, (std::map<std::size_t, std::size_t>{{1, 25}}));
  ASSERT_EQ(r.examples.size(), 5u);
  EXPECT_EQ(r.examples[0].failure, (Failure{1, 2}));
  EXPECT_EQ(r.examples[0].sequence, Originator({1, 3, 5, 7}));
}

TEST(SearchTest, EvenGapsFailAtOrderOneForAnyGmax) {
  const auto r = search_counterexamples({100, 6, 0}, 200, 7);
  EXPECT_EQ(r.failures, 200u);
  EXPECT_EQ(r.failure_orders.size(), 1u);
  EXPECT_EQ(r.failure_orders.begin()->first, 1u);
}

TEST(SearchTest, LeadingUnitGapModelIsNotDegenerate) {
  RandomModel m{100, 6, 0, true};
  const auto r = search_counterexamples(m, 300, 7);
  EXPECT_GT(r.stabilized, 0u);
  EXPECT_GT(r.failures, 0u);
  EXPECT_EQ(r.failures + r.stabilized, 300u);
  EXPECT_EQ(r.failure_orders.count(1), 0u);
  for (const auto& e : r.examples) {
    EXPECT_EQ(e.seed, trial_seed(7, e.trial));
    EXPECT_EQ(verify_naive(e.sequence).first_failure, e.failure);
  }
}

TEST(SearchTest, DeterministicAcrossWorkerCounts) {
  RandomModel m{120, 8, 0, true};
  SearchOptions one;
  one.workers = 1;
  SearchOptions many;
  many.workers = 4;
  const auto a = to_json(search_counterexamples(m, 400, 12345, one)).dump();
  const auto b = to_json(search_counterexamples(m, 400, 12345, many)).dump();
  const auto c = to_json(search_counterexamples(m, 400, 12345, one)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_NE(a, to_json(search_counterexamples(m, 400, 12346, one)).dump());
}

TEST(SearchTest, TrialSeedsAreDistinct) {
  std::set<std::uint64_t> seeds;
  for (std::size_t i = 0; i < 10'000; ++i) seeds.insert(trial_seed(42, i));
  EXPECT_EQ(seeds.size(), 10'000u);
}

TEST(SearchTest, Validation) {
  EXPECT_THROW(search_counterexamples({10, 4, 0}, 0, 1), InvalidArgument);
  EXPECT_THROW(search_counterexamples({10, 3, 0}, 5, 1), InvalidArgument);
  EXPECT_THROW(search_counterexamples({1, 4, 0}, 5, 1), InvalidArgument);
}

}  // namespace
}  // namespace gapcircuit
