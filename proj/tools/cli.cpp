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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapcircuit/report_json.hpp"

namespace gapcircuit::cli {
namespace {

void require_triangle(const Originator& o, const RunConfig& cfg) {
  if (o.size() < 2) {
    throw InvalidArgument(cfg.command + " needs an originator with at least 2 terms, got " +
                          std::to_string(o.size()));
  }
  if (o.size() > cfg.cap) {
    throw ResourceError(cfg.command + ": originator has " + std::to_string(o.size()) +
                        " terms, above the triangle cap of " + std::to_string(cfg.cap) +
                        "; pass --cap " + std::to_string(o.size()) + " to materialize it anyway");
  }
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join(std::span<const std::int64_t> values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

std::string params_string(const BoundReport& r) {
  std::string s;
  for (const auto& [key, value] : r.params) {
    if (!s.empty()) s += ' ';
    s += key + "=" + std::to_string(value);
  }
  return s;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::held: return "held";
    case Verdict::vacuous: return "vacuous";
    case Verdict::equality: return "equality";
    case Verdict::failed: return "FAILED";
  }
  return "";
}

}  // namespace

Originator resolve_input(const RunConfig& cfg) {
  const auto& in = cfg.input;
  const int sources = int(in.primes.has_value()) + int(in.limit.has_value()) + int(in.file.has_value()) +
                      int(in.n.has_value());
  if (sources != 1) {
    throw InvalidArgument("exactly one input source is required: --primes N, --limit L, --file PATH, or --n N "
                          "(with --gmax/--seed)");
  }
  if (in.primes) return first_n_primes(*in.primes, cfg.budget);
  if (in.limit) return primes_up_to(*in.limit, cfg.budget);
  if (in.file) {
    if (*in.file == "-") return load_sequence(std::cin);
    std::ifstream f(*in.file, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open sequence file '" + *in.file + "'");
    return load_sequence(f);
  }
  RandomModel m{*in.n, in.g_max, cfg.seed, in.leading_unit_gap};
  return random_generalized(m);
}

int cmd_triangle(const RunConfig& cfg, std::ostream& out) {
  const Originator o = resolve_input(cfg);
  require_triangle(o, cfg);
  const Circuit c(o);
  switch (cfg.format) {
    case Format::json:
      out << to_json(c).dump() << '\n';
      break;
    case Format::csv:
      for (std::size_t k = 1; k < c.n(); ++k) out << join(c.row(k), ',') << '\n';
      break;
    case Format::text: {
      // Rows k = 0..n-1, every cell left-aligned in a column as wide as the
      // widest value in the triangle.
      std::size_t width = 1;
      for (std::size_t k = 0; k < c.n(); ++k) {
        for (std::int64_t v : c.row(k)) width = std::max(width, std::to_string(v).size());
      }
      for (std::size_t k = 0; k < c.n(); ++k) {
        const auto r = c.row(k);
        std::string line;
        for (std::size_t j = 0; j < r.size(); ++j) {
          std::string cell = std::to_string(r[j]);
          if (j + 1 < r.size()) cell.resize(width + 1, ' ');
          line += cell;
        }
        out << line << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
  const Originator o = resolve_input(cfg);
  require_triangle(o, cfg);
  const Circuit c(o);
  const std::size_t n = c.n();
  std::vector<std::int64_t> steps, lengths, traces;
  for (std::size_t k = 1; k < n; ++k) {
    steps.push_back(static_cast<std::int64_t>(n - k));
    lengths.push_back(path_length(c, k));
  }
  for (std::size_t s = 1; s < n; ++s) traces.push_back(trace(c, s));
  const std::int64_t kappa = circuit_length(c);
  const std::uint64_t total = total_maximal_steps(n);

  switch (cfg.format) {
    case Format::json: {
      Json j;
      j["n"] = n;
      j["kappa"] = kappa;
      j["total_maximal_steps"] = total;
      j["steps"] = steps;
      j["lengths"] = lengths;
      j["traces"] = traces;
      write_json(out, j);
      break;
    }
    case Format::csv:
      out << "statistic,index,value\n";
      out << "n,," << n << '\n' << "kappa,," << kappa << '\n' << "total_maximal_steps,," << total << '\n';
      for (std::size_t k = 1; k < n; ++k) out << "steps," << k << ',' << steps[k - 1] << '\n';
      for (std::size_t k = 1; k < n; ++k) out << "length," << k << ',' << lengths[k - 1] << '\n';
      for (std::size_t s = 1; s < n; ++s) out << "trace," << s << ',' << traces[s - 1] << '\n';
      break;
    case Format::text:
      out << "n: " << n << '\n'
          << "kappa: " << kappa << '\n'
          << "total_maximal_steps: " << total << '\n'
          << "steps (k=1..n-1): " << join(steps, ' ') << '\n'
          << "lengths (k=1..n-1): " << join(lengths, ' ') << '\n'
          << "traces (s=1..n-1): " << join(traces, ' ') << '\n';
      break;
  }
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const Originator o = resolve_input(cfg);
  require_triangle(o, cfg);
  const Circuit c(o);
  const SuiteResult suite = run_suite(c);
  switch (cfg.format) {
    case Format::json:
      write_json(out, to_json(suite));
      break;
    case Format::csv:
      out << "name,params,lhs,middle,rhs,holds,precondition_met,verdict\n";
      for (const auto& r : suite.reports) {
        out << r.name << ',' << params_string(r) << ',' << r.lhs << ','
            << (r.middle ? std::to_string(*r.middle) : std::string()) << ',' << r.rhs << ','
            << (r.holds ? "true" : "false") << ',' << (r.precondition_met ? "true" : "false") << ','
            << verdict_name(classify(r)) << '\n';
      }
      break;
    case Format::text: {
      for (const auto& r : suite.reports) {
        out << verdict_name(classify(r)) << ' ' << r.name;
        if (!r.params.empty()) out << " [" << params_string(r) << ']';
        out << " lhs=" << r.lhs;
        if (r.middle) out << " middle=" << *r.middle;
        out << " rhs=" << r.rhs << '\n';
      }
      const auto& s = suite.summary;
      out << "summary: checked=" << s.checked << " held=" << s.held << " vacuous=" << s.vacuous
          << " equality=" << s.equality << " failed=" << s.failed << '\n';
      break;
    }
  }
  return suite.summary.failed == 0 ? kExitOk : kExitPropertyFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Originator o = resolve_input(cfg);
  const VerifyReport rep =
      cfg.method == VerifyMethod::naive ? verify_naive(o) : verify_frontier(o, cfg.scan_depth);
  switch (cfg.format) {
    case Format::json:
      write_json(out, to_json(rep, cfg.timing));
      break;
    case Format::csv:
      out << "n,method,all_ones,max_order_checked,failure_order,failure_value,stabilization_row,elapsed_ms\n";
      out << rep.n << ',' << to_string(rep.method) << ',' << (rep.all_ones ? "true" : "false") << ','
          << rep.max_order_checked << ','
          << (rep.first_failure ? std::to_string(rep.first_failure->order) : "") << ','
          << (rep.first_failure ? std::to_string(rep.first_failure->value) : "") << ','
          << (rep.stabilization_row ? std::to_string(*rep.stabilization_row) : "") << ','
          << (cfg.timing ? std::to_string(rep.elapsed.count() / 1000.0) : "") << '\n';
      break;
    case Format::text:
      out << "n: " << rep.n << '\n'
          << "method: " << to_string(rep.method) << '\n'
          << "all_ones: " << (rep.all_ones ? "true" : "false") << '\n'
          << "max_order_checked: " << rep.max_order_checked << '\n';
      if (rep.first_failure) {
        out << "first_failure: k=" << rep.first_failure->order << " d_1^k=" << rep.first_failure->value << '\n';
      }
      if (rep.stabilization_row) out << "stabilization_row: " << *rep.stabilization_row << '\n';
      if (cfg.timing) out << "elapsed_ms: " << rep.elapsed.count() / 1000.0 << '\n';
      break;
  }
  return rep.all_ones ? kExitOk : kExitPropertyFailed;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.input.n) throw InvalidArgument("search needs --n");
  if (cfg.input.primes || cfg.input.limit || cfg.input.file) {
    throw InvalidArgument("search draws its own originators; --primes/--limit/--file do not apply");
  }
  RandomModel model{*cfg.input.n, cfg.input.g_max, cfg.seed, cfg.input.leading_unit_gap};
  SearchOptions opts;
  opts.scan_depth = cfg.scan_depth;
  opts.workers = cfg.workers;
  const SearchReport rep = search_counterexamples(model, cfg.trials, cfg.seed, opts);

  if (cfg.dump_dir) {
    std::filesystem::create_directories(*cfg.dump_dir);
    for (const auto& e : rep.examples) {
      const auto path = std::filesystem::path(*cfg.dump_dir) / (std::to_string(e.seed) + ".txt");
      std::ofstream f(path, std::ios::binary);
      if (!f) throw InvalidArgument("cannot write " + path.string());
      f << "# search trial " << e.trial << ", seed " << e.seed << ", first failure k=" << e.failure.order
        << " d_1^k=" << e.failure.value << '\n'
        << render_sequence(e.sequence);
    }
  }

  switch (cfg.format) {
    case Format::json:
      write_json(out, to_json(rep));
      break;
    case Format::csv:
      out << "field,value\n"
          << "n," << model.n << '\n'
          << "g_max," << model.g_max << '\n'
          << "leading_unit_gap," << (model.leading_unit_gap ? "true" : "false") << '\n'
          << "trials," << rep.trials << '\n'
          << "seed," << rep.seed << '\n'
          << "failures," << rep.failures << '\n'
          << "stabilized," << rep.stabilized << '\n';
      for (const auto& [order, count] : rep.failure_orders) out << "failures_at_order_" << order << ',' << count << '\n';
      break;
    case Format::text:
      out << "model: n=" << model.n << " g_max=" << model.g_max << " gaps=uniform_even"
          << (model.leading_unit_gap ? " leading_unit_gap" : "") << '\n'
          << "trials: " << rep.trials << " seed: " << rep.seed << '\n'
          << "failures: " << rep.failures << " stabilized: " << rep.stabilized << '\n';
      for (const auto& [order, count] : rep.failure_orders) out << "  k=" << order << ": " << count << '\n';
      for (const auto& e : rep.examples) {
        out << "example trial " << e.trial << " seed " << e.seed << ": k=" << e.failure.order
            << " d_1^k=" << e.failure.value << '\n';
      }
      break;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"gapcircuit: iterated absolute difference triangles and Gilbreath verification"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: json, csv or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--seed", cfg.seed, "Seed for generated originators");
    sub->add_option("--n", cfg.input.n, "Generated originator length");
    sub->add_option("--gmax", cfg.input.g_max, "Largest even gap of generated originators");
    sub->add_flag("--lead-one", cfg.input.leading_unit_gap, "Generated originators open with a gap of 1");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--primes", cfg.input.primes, "Use the first N primes");
    sub->add_option("--limit", cfg.input.limit, "Use all primes <= L");
    sub->add_option("--file", cfg.input.file, "Read a sequence file ('-' for stdin)");
    add_common(sub);
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "Largest originator materialized as a full triangle");
  };

  auto* triangle = app.add_subcommand("triangle", "Render the full difference triangle");
  add_input(triangle);
  add_cap(triangle);
  auto* stats = app.add_subcommand("stats", "Path lengths, circuit length and traces");
  add_input(stats);
  add_cap(stats);
  auto* check = app.add_subcommand("check", "Evaluate every inequality on the circuit");
  add_input(check);
  add_cap(check);
  auto* verify = app.add_subcommand("verify", "Check that every prime segment equals 1");
  add_input(verify);
  std::string method_name = "frontier";
  verify->add_option("--method", method_name, "naive or frontier")
      ->check(CLI::IsMember({"naive", "frontier"}, CLI::ignore_case));
  verify->add_option("--scan-depth", cfg.scan_depth, "Rows scanned for the stabilization criterion");
  verify->add_flag("--timing", cfg.timing, "Report wall time (makes output nondeterministic)");
  auto* search = app.add_subcommand("search", "Counterexample search over generated originators");
  add_common(search);
  search->add_option("--trials", cfg.trials, "Number of generated originators");
  search->add_option("--scan-depth", cfg.scan_depth, "Rows scanned for the stabilization criterion");
  search->add_option("--workers", cfg.workers, "Worker threads (0 = hardware)");
  search->add_option("--dump-dir", cfg.dump_dir, "Write failing sequences here, one file per trial seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.budget = SieveBudget::from_env();
    cfg.method = CLI::detail::to_lower(method_name) == "naive" ? VerifyMethod::naive : VerifyMethod::frontier;
    const std::vector<std::pair<CLI::App*, int (*)(const RunConfig&, std::ostream&)>> dispatch{
        {triangle, cmd_triangle}, {stats, cmd_stats}, {check, cmd_check}, {verify, cmd_verify}, {search, cmd_search}};
    for (const auto& [sub, fn] : dispatch) {
      if (sub->parsed()) {
        cfg.command = sub->get_name();
        return fn(cfg, out);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gapcircuit::cli
