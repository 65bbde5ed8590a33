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

// JSON views of circuits and reports. Keys are emitted in a fixed order so
// identical inputs always serialize to identical bytes.

#include <variant>

#include <json.hpp>

#include "gapcircuit/bounds.hpp"
#include "gapcircuit/search.hpp"
#include "gapcircuit/triangle.hpp"
#include "gapcircuit/verifier.hpp"

namespace gapcircuit {

using Json = nlohmann::ordered_json;

inline Json to_json(const Circuit& c) {
  Json rows = Json::array();
  for (std::size_t k = 1; k < c.n(); ++k) {
    const auto r = c.row(k);
    rows.push_back(Json(std::vector<std::int64_t>(r.begin(), r.end())));
  }
  Json j;
  j["n"] = c.n();
  j["rows"] = std::move(rows);
  return j;
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  Json params = Json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  j["params"] = std::move(params);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (r.middle) j["middle"] = *r.middle;
  j["holds"] = r.holds;
  j["precondition_met"] = r.precondition_met;
  Json w = Json::array();
  for (const auto& [index, value] : r.witnesses) w.push_back(Json::array({index, value}));
  j["witnesses"] = std::move(w);
  Json details = Json::object();
  for (const auto& d : r.details) {
    std::visit([&](const auto& v) { details[d.key] = v; }, d.value);
  }
  j["details"] = std::move(details);
  return j;
}

inline Json to_json(const SuiteSummary& s) {
  Json j;
  j["checked"] = s.checked;
  j["held"] = s.held;
  j["vacuous"] = s.vacuous;
  j["equality"] = s.equality;
  j["failed"] = s.failed;
  return j;
}

inline Json to_json(const SuiteResult& suite) {
  Json reports = Json::array();
  for (const auto& r : suite.reports) reports.push_back(to_json(r));
  Json j;
  j["reports"] = std::move(reports);
  j["summary"] = to_json(suite.summary);
  return j;
}

/// Wall time is nondeterministic, so it is only filled in on request;
/// otherwise "elapsed_ms" is null.
inline Json to_json(const VerifyReport& r, bool with_elapsed = false) {
  Json j;
  j["n"] = r.n;
  j["method"] = std::string(to_string(r.method));
  j["all_ones"] = r.all_ones;
  j["max_order_checked"] = r.max_order_checked;
  j["first_failure"] = r.first_failure ? Json::array({r.first_failure->order, r.first_failure->value}) : Json(nullptr);
  j["stabilization_row"] = r.stabilization_row ? Json(*r.stabilization_row) : Json(nullptr);
  j["elapsed_ms"] = with_elapsed ? Json(static_cast<double>(r.elapsed.count()) / 1000.0) : Json(nullptr);
  return j;
}

inline Json to_json(const RandomModel& m) {
  Json j;
  j["n"] = m.n;
  j["g_max"] = m.g_max;
  j["gap_distribution"] = "uniform_even";
  j["leading_unit_gap"] = m.leading_unit_gap;
  return j;
}

inline Json to_json(const SearchReport& r) {
  Json j;
  j["model"] = to_json(r.model);
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["failures"] = r.failures;
  j["stabilized"] = r.stabilized;
  Json hist = Json::array();
  for (const auto& [order, count] : r.failure_orders) hist.push_back(Json::array({order, count}));
  j["failure_orders"] = std::move(hist);
  Json ex = Json::array();
  for (const auto& e : r.examples) {
    Json x;
    x["trial"] = e.trial;
    x["seed"] = e.seed;
    x["first_failure"] = Json::array({e.failure.order, e.failure.value});
    const auto t = e.sequence.terms();
    x["sequence"] = std::vector<std::int64_t>(t.begin(), t.end());
    ex.push_back(std::move(x));
  }
  j["examples"] = std::move(ex);
  return j;
}

}  // namespace gapcircuit
