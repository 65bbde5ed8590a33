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
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "gapcircuit/error.hpp"
#include "gapcircuit/originator.hpp"
#include "gapcircuit/verifier.hpp"

namespace gapcircuit {

struct SearchOptions {
  std::size_t scan_depth = kDefaultScanDepth;
  std::size_t max_examples = 5;
  unsigned workers = 0;  // 0: one per hardware thread
};

struct FailingTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Failure failure{};
  Originator sequence{{0}};
};

struct SearchReport {
  RandomModel model;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t failures = 0;
  std::size_t stabilized = 0;
  std::map<std::size_t, std::size_t> failure_orders;  // k -> count
  std::vector<FailingTrial> examples;                 // lowest trial indices first
};

/// Seed of trial i under search seed `seed`.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) noexcept {
  return mix_seed(mix_seed(seed) + static_cast<std::uint64_t>(trial));
}

/// Runs verify_frontier on `trials` originators drawn from `model`, trial i
/// using seed trial_seed(seed, i) in place of model.seed. Trials are spread
/// over worker threads; the report is independent of scheduling.
inline SearchReport search_counterexamples(const RandomModel& model, std::size_t trials, std::uint64_t seed,
                                           const SearchOptions& opts = {}) {
  model.validate();
  if (trials < 1) throw InvalidArgument("search needs trials >= 1");
  if (model.n < 2) throw InvalidArgument("search needs model n >= 2");

  struct Outcome {
    std::optional<Failure> failure;
    bool stabilized = false;
  };
  std::vector<Outcome> outcomes(trials);

  unsigned workers = opts.workers != 0 ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < trials; i = next++) {
        RandomModel m = model;
        m.seed = trial_seed(seed, i);
        const auto rep = verify_frontier(random_generalized(m), opts.scan_depth);
        outcomes[i] = {rep.first_failure, rep.stabilization_row.has_value()};
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
      next = trials;
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  SearchReport rep;
  rep.model = model;
  rep.trials = trials;
  rep.seed = seed;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto& out = outcomes[i];
    if (out.stabilized) ++rep.stabilized;
    if (!out.failure) continue;
    ++rep.failures;
    ++rep.failure_orders[out.failure->order];
    if (rep.examples.size() < opts.max_examples) {
      RandomModel m = model;
      m.seed = trial_seed(seed, i);
      rep.examples.push_back({i, m.seed, *out.failure, random_generalized(m)});
    }
  }
  return rep;
}

}  // namespace gapcircuit
