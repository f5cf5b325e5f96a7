/* Copyright (C) 2026 The zdspec Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
// zdspec command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zdspec/zdspec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kTableOrderLimit = std::uint64_t{1} << 12;
constexpr std::uint64_t kForceEvaluations = std::uint64_t{1} << 30;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format;
  std::string out;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool force = false;
  std::string cache;
  std::string modulus;
};

void add_common(CLI::App* cmd, Common& c, bool with_field) {
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out, "output path (default: stdout)");
  cmd->add_option("--seed", c.seed, "seed for sampled checks");
  cmd->add_option("--threads", c.threads, "worker threads (0: machine parallelism)");
  cmd->add_flag("--force", c.force, "allow computations above the size thresholds");
  cmd->add_option("--cache", c.cache, "field cache file (overrides ZDSPEC_CACHE)");
  if (with_field) cmd->add_option("--modulus", c.modulus, "explicit modulus coefficients c0,c1,...,cn");
}

std::string cache_path(const Common& c) {
  if (!c.cache.empty()) return c.cache;
  const char* env = std::getenv("ZDSPEC_CACHE");
  return env ? env : "";
}

struct StringDeleter {
  void operator()(char* s) const { zds_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct ApiError : std::runtime_error {
  zds_status status;
  ApiError(zds_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(zds_status s) {
  if (s != ZDS_OK) throw ApiError(s, std::string(zds_status_name(s)) + ": " + zds_last_error());
}

CString take(zds_status s, char*& str) {
  check(s);
  return CString(str);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream os(c.out, std::ios::binary);
  if (!os) throw UsageError("cannot open output file '" + c.out + "'");
  os << text;
  if (!os) throw UsageError("failed writing '" + c.out + "'");
}

std::vector<std::uint32_t> parse_modulus(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError("bad modulus coefficient '" + tok + "'");
    }
  }
  return out;
}

struct FieldHandle {
  zds_field* f = nullptr;
  ~FieldHandle() { zds_field_close(f); }
};

void open_field(const Common& c, std::uint32_t p, std::uint32_t n, unsigned flags, FieldHandle& h) {
  const std::string cache = cache_path(c);
  if (!c.modulus.empty()) {
    const auto m = parse_modulus(c.modulus);
    if (m.size() != std::size_t{n} + 1) throw UsageError("modulus needs n + 1 coefficients");
    check(zds_field_open(p, n, m.data(), nullptr, 0, 0, &h.f));
  } else {
    check(zds_field_open(p, n, nullptr, cache.c_str(), 0, flags, &h.f));
  }
}

void require_budget(const Common& c, std::uint64_t evaluations, const std::string& what) {
  if (evaluations <= kForceEvaluations || c.force) return;
  std::cerr << "estimated evaluations for " << what << ": " << evaluations << "\n";
  throw UsageError("more than 2^30 evaluations; rerun with --force");
}

std::uint64_t order_of(std::uint32_t p, std::uint32_t n) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (q > (std::uint64_t{1} << 40) / p) return UINT64_MAX;
    q *= p;
  }
  return q;
}

std::uint64_t cube(std::uint64_t q) {
  if (q > (std::uint64_t{1} << 21)) return UINT64_MAX;
  return q * q * q;
}

int cmd_field(const Common& c, std::uint32_t p, std::uint32_t n) {
  FieldHandle h;
  open_field(c, p, n, ZDS_FIELD_PERSIST, h);
  if (c.format == "csv") {
    std::vector<std::uint32_t> m(std::size_t{n} + 1);
    check(zds_field_modulus(h.f, m.data(), m.size()));
    std::string line = std::to_string(p) + "," + std::to_string(n);
    for (auto v : m) line += "," + std::to_string(v);
    emit(c, line + "\n");
  } else {
    char* s = nullptr;
    auto json = take(zds_field_describe_json(h.f, &s), s);
    emit(c, json.get());
  }
  return kExitOk;
}

int cmd_table(const Common& c, const std::string& which, std::uint32_t p, std::uint32_t n, std::uint64_t d) {
  zds_table_kind kind;
  check(zds_parse_table_kind(which.c_str(), &kind));
  const std::uint64_t q = order_of(p, n);
  if (q > kTableOrderLimit && !c.force) {
    std::cerr << "p^n = " << q << " exceeds 2^12\n";
    throw UsageError("table refused above p^n = 2^12; rerun with --force");
  }
  require_budget(c, kind == ZDS_TABLE_DDT ? q * q : cube(q), "table");
  FieldHandle h;
  open_field(c, p, n, 0, h);
  zds_table* t = nullptr;
  check(zds_table_compute(h.f, kind, d, c.threads, &t));
  std::unique_ptr<zds_table, void (*)(zds_table*)> guard(t, zds_table_free);
  char* s = nullptr;
  if (c.format == "json") {
    auto summary = take(zds_table_summary_json(t, &s), s);
    std::string text = summary.get();
    if (kind == ZDS_TABLE_FBCT) {
      auto props = take(zds_table_properties_json(t, &s), s);
      text += props.get();
    }
    emit(c, text);
  } else {
    auto csv = take(zds_table_csv(t, &s), s);
    emit(c, csv.get());
  }
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& theorem, std::uint32_t p, std::uint32_t n,
               std::uint64_t samples, bool full) {
  zds_verify_options o;
  zds_verify_options_init(&o);
  o.threads = c.threads;
  o.seed = c.seed;
  o.samples = samples;
  o.force_full = full ? 1 : 0;
  const std::uint64_t q = order_of(p, n);
  const std::uint64_t all = cube(q);
  const bool runs_full = full || all <= o.full_evaluation_limit;
  require_budget(c, runs_full ? all : samples * q, "verify");
  FieldHandle h;
  open_field(c, p, n, 0, h);
  zds_report* r = nullptr;
  check(zds_verify(h.f, theorem.c_str(), &o, &r));
  std::unique_ptr<zds_report, void (*)(zds_report*)> guard(r, zds_report_free);
  char* s = nullptr;
  auto json = take(zds_report_json(r, &s), s);
  emit(c, json.get());
  return zds_report_passed(r) ? kExitOk : kExitMismatch;
}

int cmd_survey(const Common& c, const std::vector<std::string>& rows, std::optional<std::uint32_t> p,
               std::optional<std::uint32_t> n, std::uint32_t param, std::uint64_t limit) {
  if (limit > kForceEvaluations && !c.force) {
    std::cerr << "requested evaluation limit: " << limit << "\n";
    throw UsageError("survey limit above 2^30 evaluations; rerun with --force");
  }
  const std::string cache = cache_path(c);
  zds_survey* sv = nullptr;
  if (p || n) {
    if (!p || !n || rows.size() != 1) throw UsageError("--p and --n select one instance of exactly one row");
    check(zds_survey_run_instance(rows[0].c_str(), *p, *n, param, limit, c.threads, cache.c_str(), &sv));
  } else {
    std::vector<const char*> ids;
    for (const auto& r : rows) ids.push_back(r.c_str());
    check(zds_survey_run(ids.data(), ids.size(), limit, c.threads, cache.c_str(), &sv));
  }
  std::unique_ptr<zds_survey, void (*)(zds_survey*)> guard(sv, zds_survey_free);
  char* s = nullptr;
  auto text = c.format == "csv" ? take(zds_survey_csv(sv, &s), s) : take(zds_survey_json(sv, &s), s);
  emit(c, text.get());
  return zds_survey_all_matched(sv) ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential spectra of power maps over finite fields"};
  app.require_subcommand(1);

  Common fc, tc, vc, sc;
  std::uint32_t fp = 0, fn = 0;
  auto* field = app.add_subcommand("field", "find or load the modulus of F_{p^n}");
  field->add_option("p", fp)->required();
  field->add_option("n", fn)->required();
  add_common(field, fc, true);

  std::string which;
  std::uint32_t tp = 0, tn = 0;
  std::uint64_t td = 0;
  auto* table = app.add_subcommand("table", "full DDT, FBCT or second-order zero differential table of x^d");
  table->add_option("which", which, "ddt, fbct or sozd")->required();
  table->add_option("p", tp)->required();
  table->add_option("n", tn)->required();
  table->add_option("d", td)->required();
  add_common(table, tc, true);

  std::string theorem;
  std::uint32_t vp = 0, vn = 0;
  std::uint64_t samples = 10000;
  bool full = false;
  auto* verify = app.add_subcommand("verify", "check a closed-form spectrum entrywise against brute force");
  verify->add_option("theorem", theorem, "3.1, 3.2, 4.1, 4.2 or x7-bound")->required();
  verify->add_option("p", vp)->required();
  verify->add_option("n", vn)->required();
  verify->add_option("--samples", samples, "pairs drawn when the field is too large for a full check");
  verify->add_flag("--full", full, "check every pair regardless of field size");
  add_common(verify, vc, true);

  std::vector<std::string> rows;
  std::optional<std::uint32_t> sp, sn;
  std::uint32_t sparam = 0;
  std::uint64_t limit = std::uint64_t{1} << 24;
  auto* survey = app.add_subcommand("survey", "brute-force the published uniformity of known power maps");
  survey->add_option("rows", rows, "row ids (default: all)");
  survey->add_option("--p", sp, "characteristic of a single instance");
  survey->add_option("--n", sn, "degree of a single instance");
  survey->add_option("--param", sparam, "row parameter k, m or s of a single instance");
  survey->add_option("--limit", limit, "skip instances above this many evaluations");
  add_common(survey, sc, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*field) {
      if (fc.format.empty()) fc.format = "json";
      return cmd_field(fc, fp, fn);
    }
    if (*table) {
      if (tc.format.empty()) tc.format = "csv";
      return cmd_table(tc, which, tp, tn, td);
    }
    if (*verify) {
      if (vc.format.empty()) vc.format = "json";
      if (vc.format != "json") throw UsageError("verify emits json only");
      return cmd_verify(vc, theorem, vp, vn, samples, full);
    }
    if (*survey) {
      if (sc.format.empty()) sc.format = "json";
      return cmd_survey(sc, rows, sp, sn, sparam, limit);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
