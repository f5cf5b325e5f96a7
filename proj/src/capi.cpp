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
#include "zdspec/zdspec.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "zdspec/closedform.hpp"
#include "zdspec/error.hpp"
#include "zdspec/field_cache.hpp"
#include "zdspec/gf.hpp"
#include "zdspec/spectra.hpp"
#include "zdspec/survey.hpp"

struct zds_field {
  zdspec::gf::Field::Ptr field;
};

struct zds_table {
  zdspec::spectra::Table table;
  std::uint64_t d;
};

struct zds_report {
  zdspec::closedform::VerificationReport report;
  zdspec::gf::Field::Ptr field;
};

struct zds_survey {
  std::vector<zdspec::survey::SurveyRow> rows;
};

namespace {

using namespace zdspec;

thread_local std::string last_error;

zds_status fail(zds_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class Fn>
zds_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return ZDS_OK;
  } catch (const Error& e) {
    return fail(static_cast<zds_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZDS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZDS_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::InvalidArgument, what);
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* zds_last_error(void) { return last_error.c_str(); }

const char* zds_status_name(zds_status s) {
  switch (s) {
    case ZDS_OK: return "ok";
    case ZDS_INVALID_ARGUMENT: return "invalid argument";
    case ZDS_NOT_PRIME: return "not prime";
    case ZDS_NOT_IRREDUCIBLE: return "not irreducible";
    case ZDS_SIZE_BOUND: return "size bound exceeded";
    case ZDS_CHARACTERISTIC: return "wrong characteristic";
    case ZDS_HYPOTHESIS: return "hypothesis violated";
    case ZDS_FIELD_MISMATCH: return "field mismatch";
    case ZDS_DIVISION_BY_ZERO: return "division by zero";
    case ZDS_IO: return "i/o error";
    case ZDS_INTERNAL: return "internal error";
  }
  return "unknown";
}

void zds_string_free(char* s) { std::free(s); }

zds_status zds_find_irreducible(uint32_t p, uint32_t n, uint32_t* out, size_t out_len) {
  return guarded([&] {
    require(out != nullptr, "null output buffer");
    const auto poly = gf::find_irreducible(p, n);
    require(out_len >= poly.size(), "output buffer shorter than n + 1");
    std::copy(poly.begin(), poly.end(), out);
  });
}

zds_status zds_field_open(uint32_t p, uint32_t n, const uint32_t* modulus, const char* cache_path,
                          uint64_t order_bound, unsigned flags, zds_field** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    const std::uint64_t bound = order_bound ? order_bound : gf::kDefaultOrderBound;
    const std::string cache = cache_path ? cache_path : "";
    gf::Field::Ptr field;
    if (modulus) {
      gf::FieldSpec spec{p, n, std::vector<std::uint32_t>(modulus, modulus + n + 1)};
      field = gf::Field::create(spec, bound);
    } else {
      std::optional<gf::FieldSpec> cached;
      if (!cache.empty()) cached = gf::lookup_field_cache(cache, p, n);
      if (cached) {
        field = gf::Field::create(*cached, bound);
      } else {
        field = gf::Field::canonical(p, n, bound);
        if (!cache.empty() && (flags & ZDS_FIELD_PERSIST)) gf::append_field_cache(cache, field->spec());
      }
    }
    *out = new zds_field{std::move(field)};
  });
}

void zds_field_close(zds_field* f) { delete f; }
uint32_t zds_field_p(const zds_field* f) { return f->field->p(); }
uint32_t zds_field_n(const zds_field* f) { return f->field->n(); }
uint64_t zds_field_order(const zds_field* f) { return f->field->order(); }

zds_status zds_field_modulus(const zds_field* f, uint32_t* out, size_t out_len) {
  return guarded([&] {
    const auto& m = f->field->spec().modulus;
    require(out != nullptr && out_len >= m.size(), "output buffer shorter than n + 1");
    std::copy(m.begin(), m.end(), out);
  });
}

zds_status zds_field_describe_json(const zds_field* f, char** out) {
  return guarded([&] {
    const auto& field = *f->field;
    nlohmann::ordered_json j;
    j["p"] = field.p();
    j["n"] = field.n();
    j["order"] = field.order();
    j["modulus"] = field.spec().modulus;
    j["polynomial"] = gf::polynomial_string(field.spec().modulus);
    j["generator"] = field.label(field.generator());
    *out = dup_string(dump(j));
  });
}

zds_status zds_parse_table_kind(const char* s, zds_table_kind* out) {
  return guarded([&] {
    require(s && out, "null argument");
    const auto k = spectra::parse_table_kind(s);
    if (!k) throw Error(Errc::InvalidArgument, std::string("unknown table kind '") + s + "'");
    switch (*k) {
      case spectra::TableKind::Ddt: *out = ZDS_TABLE_DDT; break;
      case spectra::TableKind::Fbct: *out = ZDS_TABLE_FBCT; break;
      case spectra::TableKind::Sozd: *out = ZDS_TABLE_SOZD; break;
    }
  });
}

zds_status zds_table_compute(const zds_field* f, zds_table_kind kind, uint64_t d, unsigned threads, zds_table** out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = nullptr;
    spectra::TableKind k;
    switch (kind) {
      case ZDS_TABLE_DDT: k = spectra::TableKind::Ddt; break;
      case ZDS_TABLE_FBCT: k = spectra::TableKind::Fbct; break;
      case ZDS_TABLE_SOZD: k = spectra::TableKind::Sozd; break;
      default: throw Error(Errc::InvalidArgument, "unknown table kind");
    }
    auto table = spectra::full_table(spectra::Sbox::power(f->field, d), k, threads);
    *out = new zds_table{std::move(table), d};
  });
}

void zds_table_free(zds_table* t) { delete t; }
uint64_t zds_table_dim(const zds_table* t) { return t->table.dim(); }

uint64_t zds_table_entry(const zds_table* t, uint64_t a, uint64_t b) {
  if (a >= t->table.dim() || b >= t->table.dim()) return 0;
  return t->table.at(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
}

zds_status zds_table_csv(const zds_table* t, char** out) {
  return guarded([&] {
    std::ostringstream os;
    spectra::write_csv(t->table, os);
    *out = dup_string(os.str());
  });
}

zds_status zds_table_summary_json(const zds_table* t, char** out) {
  return guarded([&] {
    const auto& field = *t->table.field;
    nlohmann::ordered_json j;
    j["table"] = std::string(spectra::to_string(t->table.kind));
    j["field"] = {{"p", field.p()}, {"n", field.n()}, {"modulus", field.spec().modulus}};
    j["exponent"] = t->d;
    const auto summary = spectra::to_json(spectra::summarize(t->table));
    for (auto it = summary.begin(); it != summary.end(); ++it) j[it.key()] = it.value();
    *out = dup_string(dump(j));
  });
}

zds_status zds_table_properties_json(const zds_table* t, char** out) {
  return guarded([&] {
    if (t->table.kind != spectra::TableKind::Fbct)
      throw Error(Errc::Characteristic, "the property suite applies to FBCT tables");
    *out = dup_string(dump(spectra::to_json(spectra::fbct_property_suite(t->table), *t->table.field)));
  });
}

zds_status zds_table_properties_passed(const zds_table* t, int* passed) {
  return guarded([&] {
    if (t->table.kind != spectra::TableKind::Fbct)
      throw Error(Errc::Characteristic, "the property suite applies to FBCT tables");
    *passed = spectra::fbct_property_suite(t->table).passed() ? 1 : 0;
  });
}

void zds_verify_options_init(zds_verify_options* o) {
  const closedform::VerifyOptions d;
  o->threads = d.threads;
  o->full_evaluation_limit = d.full_evaluation_limit;
  o->force_full = d.force_full ? 1 : 0;
  o->samples = d.samples;
  o->seed = d.seed;
}

zds_status zds_verify(const zds_field* f, const char* theorem, const zds_verify_options* o, zds_report** out) {
  return guarded([&] {
    require(f && theorem && out, "null argument");
    *out = nullptr;
    const auto t = closedform::parse_theorem(theorem);
    if (!t) throw Error(Errc::InvalidArgument, std::string("unknown theorem '") + theorem + "'");
    closedform::VerifyOptions opts;
    if (o) {
      opts.threads = o->threads;
      opts.full_evaluation_limit = o->full_evaluation_limit;
      opts.force_full = o->force_full != 0;
      opts.samples = o->samples;
      opts.seed = o->seed;
    }
    auto report = closedform::verify_theorem(*t, f->field, opts);
    *out = new zds_report{std::move(report), f->field};
  });
}

void zds_report_free(zds_report* r) { delete r; }
int zds_report_passed(const zds_report* r) { return r->report.passed() ? 1 : 0; }
uint64_t zds_report_uniformity(const zds_report* r) { return r->report.uniformity; }
uint64_t zds_report_mismatch_count(const zds_report* r) { return r->report.mismatches.size(); }
uint64_t zds_report_unpredicted_count(const zds_report* r) { return r->report.unpredicted.size(); }

uint64_t zds_report_case_count(const zds_report* r, const char* case_label) {
  if (!case_label) return 0;
  const auto it = r->report.case_counts.find(case_label);
  return it == r->report.case_counts.end() ? 0 : it->second;
}

zds_status zds_report_json(const zds_report* r, char** out) {
  return guarded([&] { *out = dup_string(dump(r->report.to_json(*r->field))); });
}

uint64_t zds_verify_cost(uint32_t p, uint32_t n) {
  const auto q = gf::checked_pow(p, n, std::uint64_t{1} << 21);
  if (!q) return UINT64_MAX;
  return *q * *q * *q;
}

zds_status zds_survey_run(const char* const* row_ids, size_t count, uint64_t eval_limit, unsigned threads,
                          const char* cache_path, zds_survey** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    std::vector<std::string> ids;
    for (size_t i = 0; i < count; ++i) {
      require(row_ids && row_ids[i], "null row id");
      ids.emplace_back(row_ids[i]);
    }
    survey::SurveyOptions opts;
    if (eval_limit) opts.evaluation_limit = eval_limit;
    opts.threads = threads;
    if (cache_path) opts.cache_path = cache_path;
    const auto instances = survey::select_instances(ids);
    *out = new zds_survey{survey::run_survey(instances, opts)};
  });
}

zds_status zds_survey_run_instance(const char* row_id, uint32_t p, uint32_t n, uint32_t param, uint64_t eval_limit,
                                   unsigned threads, const char* cache_path, zds_survey** out) {
  return guarded([&] {
    require(row_id && out, "null argument");
    *out = nullptr;
    survey::SurveyOptions opts;
    if (eval_limit) opts.evaluation_limit = eval_limit;
    opts.threads = threads;
    if (cache_path) opts.cache_path = cache_path;
    const survey::Instance inst{row_id, p, n, param};
    *out = new zds_survey{{survey::run_instance(inst, opts)}};
  });
}

void zds_survey_free(zds_survey* s) { delete s; }
size_t zds_survey_size(const zds_survey* s) { return s->rows.size(); }

uint64_t zds_survey_observed(const zds_survey* s, size_t i, int* have) {
  const bool ok = i < s->rows.size() && s->rows[i].observed.has_value();
  if (have) *have = ok ? 1 : 0;
  return ok ? *s->rows[i].observed : 0;
}

int zds_survey_row_matched(const zds_survey* s, size_t i) { return i < s->rows.size() && s->rows[i].match(); }

int zds_survey_all_matched(const zds_survey* s) { return zds_survey_mismatch_count(s) == 0; }

size_t zds_survey_mismatch_count(const zds_survey* s) {
  size_t k = 0;
  for (const auto& r : s->rows) k += r.status == survey::Status::Mismatch;
  return k;
}

zds_status zds_survey_json(const zds_survey* s, char** out) {
  return guarded([&] { *out = dup_string(dump(survey::to_json(s->rows))); });
}

zds_status zds_survey_csv(const zds_survey* s, char** out) {
  return guarded([&] {
    std::ostringstream os;
    survey::write_csv(s->rows, os);
    *out = dup_string(os.str());
  });
}

}  // extern "C"
