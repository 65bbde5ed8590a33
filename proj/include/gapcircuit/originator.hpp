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

#include <charconv>
#include <cstdint>
#include <istream>
#include <iterator>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "gapcircuit/checked.hpp"
#include "gapcircuit/error.hpp"

namespace gapcircuit {

/// The seed sequence a_1..a_n of every derived path. It doubles as the
/// order-0 path and is the only place negative values may appear.
/// Terms need not be monotone.
class Originator {
 public:
  explicit Originator(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
      throw EmptyInputError("an originator needs at least one term");
    }
  }

  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const std::int64_t> terms() const noexcept { return terms_; }

  /// 1-based access, matching a_i.
  std::int64_t term(std::size_t i) const {
    if (i < 1 || i > terms_.size()) {
      throw RangeError("term index " + std::to_string(i) + " outside [1, " +
                       std::to_string(terms_.size()) + "]");
    }
    return terms_[i - 1];
  }

  friend bool operator==(const Originator&, const Originator&) = default;

 private:
  std::vector<std::int64_t> terms_;
};

/// Generalized originator model: starts at 1 and grows by even gaps drawn
/// uniformly from {2, 4, ..., g_max}.
///
/// With `leading_unit_gap` set the second term is a_1 + 1 and only the
/// later gaps are even, so the first gap row begins with 1 the way prime
/// gaps do (2, 3, 5, ...). Without it every gap row starts with an even
/// value and the Gilbreath property fails at order 1.
struct RandomModel {
  std::size_t n = 1;
  std::int64_t g_max = 2;
  std::uint64_t seed = 0;
  bool leading_unit_gap = false;

  void validate() const {
    if (n < 1) throw InvalidArgument("model n must be >= 1");
    if (g_max < 2 || g_max % 2 != 0) {
      throw InvalidArgument("model g_max must be an even integer >= 2, got " +
                            std::to_string(g_max));
    }
  }

  friend bool operator==(const RandomModel&, const RandomModel&) = default;
};

namespace detail {

// Uniform draw from [0, bound) by rejection. std::uniform_int_distribution is
// not specified bit-for-bit across standard libraries; this is.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

/// splitmix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline Originator random_generalized(const RandomModel& model) {
  model.validate();
  std::mt19937_64 rng(model.seed);
  const auto half = static_cast<std::uint64_t>(model.g_max / 2);

  std::vector<std::int64_t> terms;
  terms.reserve(model.n);
  terms.push_back(1);
  for (std::size_t i = 1; i < model.n; ++i) {
    std::int64_t gap;
    if (i == 1 && model.leading_unit_gap) {
      gap = 1;
    } else {
      gap = 2 * (static_cast<std::int64_t>(detail::uniform_below(rng, half)) + 1);
    }
    terms.push_back(checked_add(terms.back(), gap, "generalized originator term"));
  }
  return Originator(std::move(terms));
}

/// Parses the sequence text format: decimal integers separated by newlines
/// or commas, '#' comments to end of line, whitespace ignored. Blank lines
/// are skipped; an empty field between commas is an error.
inline Originator parse_sequence(std::string_view text) {
  std::vector<std::int64_t> terms;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    bool blank = true;
    for (char c : line) blank = blank && is_space(c);

    if (!blank) {
      std::size_t field_start = 0;
      while (true) {
        std::size_t comma = line.find(',', field_start);
        std::size_t field_end = comma == std::string_view::npos ? line.size() : comma;
        std::size_t b = field_start;
        std::size_t e = field_end;
        while (b < e && is_space(line[b])) ++b;
        while (e > b && is_space(line[e - 1])) --e;
        if (b == e) {
          throw ParseError(line_no, b + 1, "expected an integer");
        }
        const char* first = line.data() + b;
        const char* last = line.data() + e;
        if (*first == '+' && last - first > 1 && first[1] != '-') ++first;
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) {
          throw OverflowError("line " + std::to_string(line_no) + ", column " +
                              std::to_string(b + 1) + ": '" +
                              std::string(line.substr(b, e - b)) +
                              "' does not fit in 64 signed bits");
        }
        if (ec != std::errc() || ptr != last || first == last) {
          const auto col = (ec != std::errc() || first == last)
                               ? b + 1
                               : static_cast<std::size_t>(ptr - line.data()) + 1;
          throw ParseError(line_no, col,
                           "malformed integer '" + std::string(line.substr(b, e - b)) + "'");
        }
        terms.push_back(value);
        if (comma == std::string_view::npos) break;
        field_start = comma + 1;
      }
    }
    pos = eol + 1;
  }
  if (terms.empty()) {
    throw EmptyInputError("sequence input contains no integers");
  }
  return Originator(std::move(terms));
}

inline Originator load_sequence(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_sequence(text);
}

/// One term per line, newline terminated. parse_sequence(render_sequence(x)) == x.
inline std::string render_sequence(const Originator& o) {
  std::string out;
  out.reserve(o.size() * 8);
  for (std::int64_t t : o.terms()) {
    out += std::to_string(t);
    out += '\n';
  }
  return out;
}

}  // namespace gapcircuit
