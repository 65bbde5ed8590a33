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
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "gapcircuit/error.hpp"
#include "gapcircuit/originator.hpp"

// Odd integers covered by one sieve segment. Override at configure time
// with -DGAPCIRCUIT_SIEVE_WINDOW=<n>.
#ifndef GAPCIRCUIT_SIEVE_WINDOW
#define GAPCIRCUIT_SIEVE_WINDOW (1u << 18)
#endif

namespace gapcircuit {

inline constexpr std::size_t kSieveWindow = GAPCIRCUIT_SIEVE_WINDOW;
static_assert(kSieveWindow >= 64, "sieve window too small");

/// Sieve budget: the largest number of primes a single call may return.
/// Each retained prime costs 8 bytes.
struct SieveBudget {
  static constexpr std::uint64_t kDefaultMaxPrimes = 100'000'000;
  std::uint64_t max_primes = kDefaultMaxPrimes;

  /// Reads GAPCIRCUIT_SIEVE_BUDGET (a positive prime count), falling back
  /// to the default when unset.
  static SieveBudget from_env() {
    SieveBudget b;
    if (const char* v = std::getenv("GAPCIRCUIT_SIEVE_BUDGET"); v != nullptr && *v) {
      char* end = nullptr;
      const unsigned long long parsed = std::strtoull(v, &end, 10);
      if (end == v || *end != '\0' || parsed == 0) {
        throw InvalidArgument(std::string("GAPCIRCUIT_SIEVE_BUDGET must be a positive integer, got '") +
                              v + "'");
      }
      b.max_primes = parsed;
    }
    return b;
  }
};

namespace detail {

// Plain Eratosthenes for the base primes <= limit.
inline std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

inline std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace detail

/// Streams every prime <= limit, in increasing order, to `emit`. `emit`
/// returns false to stop early. Odd-only segmented sieve: base primes up to
/// sqrt(limit) plus one window of kSieveWindow bytes.
template <typename Emit>
void for_each_prime(std::uint64_t limit, Emit&& emit) {
  if (limit < 2) return;
  if (!emit(std::uint64_t{2})) return;
  if (limit < 3) return;
  if (limit > (std::uint64_t{1} << 62)) {
    throw ResourceError("sieve limit " + std::to_string(limit) + " is out of range");
  }

  const std::uint64_t root = detail::isqrt(limit);
  const auto base = detail::small_primes(static_cast<std::uint32_t>(root));

  // Index i in a window stands for the odd number low + 2i.
  std::vector<std::uint8_t> window(kSieveWindow);
  // next[p] = next odd multiple of base prime p that still needs marking.
  std::vector<std::uint64_t> next;
  next.reserve(base.size());
  for (std::uint32_t p : base) {
    if (p == 2) continue;
    next.push_back(std::uint64_t{p} * p);
  }

  for (std::uint64_t low = 3; low <= limit; low += 2 * kSieveWindow) {
    const std::uint64_t high = std::min<std::uint64_t>(low + 2 * (kSieveWindow - 1), limit);
    const std::size_t count = static_cast<std::size_t>((high - low) / 2 + 1);
    std::fill_n(window.begin(), count, std::uint8_t{1});

    std::size_t bi = 0;
    for (std::uint32_t p : base) {
      if (p == 2) continue;
      std::uint64_t m = next[bi];
      const std::uint64_t step = 2 * std::uint64_t{p};
      for (; m <= high; m += step) window[(m - low) / 2] = 0;
      next[bi] = m;
      ++bi;
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (window[i] && !emit(low + 2 * i)) return;
    }
  }
}

/// All primes <= limit.
inline Originator primes_up_to(std::uint64_t limit, SieveBudget budget = {}) {
  if (limit < 2) {
    throw InvalidArgument("primes_up_to needs limit >= 2, got " + std::to_string(limit));
  }
  std::vector<std::int64_t> out;
  for_each_prime(limit, [&](std::uint64_t p) {
    if (out.size() >= budget.max_primes) {
      throw ResourceError("more than " + std::to_string(budget.max_primes) +
                          " primes below " + std::to_string(limit) +
                          "; raise GAPCIRCUIT_SIEVE_BUDGET");
    }
    out.push_back(static_cast<std::int64_t>(p));
    return true;
  });
  return Originator(std::move(out));
}

/// Upper bound on the n-th prime (Rosser-Schoenfeld: p_n < n(ln n + ln ln n)
/// for n >= 6).
inline std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
  if (n < 6) return 13;
  const double x = static_cast<double>(n);
  return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

/// The first n primes, starting at 2.
inline Originator first_n_primes(std::uint64_t n, SieveBudget budget = {}) {
  if (n < 1) throw InvalidArgument("first_n_primes needs n >= 1");
  if (n > budget.max_primes) {
    throw ResourceError("first_n_primes(" + std::to_string(n) + ") exceeds the sieve budget of " +
                        std::to_string(budget.max_primes) + " primes; raise GAPCIRCUIT_SIEVE_BUDGET");
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n));
  for_each_prime(nth_prime_upper_bound(n), [&](std::uint64_t p) {
    out.push_back(static_cast<std::int64_t>(p));
    return out.size() < n;
  });
  return Originator(std::move(out));
}

}  // namespace gapcircuit
