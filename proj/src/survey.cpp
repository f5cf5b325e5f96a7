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
#include "zdspec/survey.hpp"

#include <algorithm>
#include <numeric>

#include "zdspec/error.hpp"
#include "zdspec/field_cache.hpp"
#include "zdspec/gf.hpp"
#include "zdspec/spectra.hpp"

namespace zdspec::survey {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

using Values = std::vector<std::uint64_t>;

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"inverse-char2", "2", "2^n-2", "n odd or n even", "2 or 4",
               [](auto p, auto n, auto) { return p == 2 && n >= 2; },
               [](auto, auto n, auto) { return ipow(2, n) - 2; },
               [](auto, auto n, auto) { return Values{n % 2 ? 2u : 4u}; }});
  c.push_back({"gold", "2", "2^k+1", "gcd(n,k)=e", "2^e",
               [](auto p, auto, auto k) { return p == 2 && k >= 1; },
               [](auto, auto, auto k) { return ipow(2, k) + 1; },
               [](auto, auto n, auto k) { return Values{ipow(2, std::gcd(n, k))}; }});
  c.push_back({"bracken-leander", "2", "2^(2k)+2^k+1", "n=4k", "2^(2k)",
               [](auto p, auto n, auto k) { return p == 2 && k >= 1 && n == 4 * k; },
               [](auto, auto, auto k) { return ipow(2, 2 * k) + ipow(2, k) + 1; },
               [](auto, auto, auto k) { return Values{ipow(2, 2 * k)}; }});
  c.push_back({"2^(m+1)-1", "2", "2^(m+1)-1", "n=2m+1 or n=2m", "2 or 2^m",
               [](auto p, auto n, auto m) { return p == 2 && m >= 1 && (n == 2 * m + 1 || n == 2 * m); },
               [](auto, auto, auto m) { return ipow(2, m + 1) - 1; },
               [](auto, auto n, auto m) { return Values{n == 2 * m + 1 ? 2 : ipow(2, m)}; }});
  c.push_back({"2^m-1", "2", "2^m-1", "n=2m+1 or n=2m", "2^m-4",
               [](auto p, auto n, auto m) { return p == 2 && m >= 2 && (n == 2 * m + 1 || n == 2 * m); },
               [](auto, auto, auto m) { return ipow(2, m) - 1; },
               [](auto, auto, auto m) { return Values{ipow(2, m) - 4}; }});
  c.push_back({"x21-char2", "2", "21", "n odd or n even", "4 or 16",
               [](auto p, auto n, auto) { return p == 2 && n >= 2; },
               [](auto, auto, auto) { return std::uint64_t{21}; },
               [](auto, auto n, auto) { return Values{n % 2 ? 4u : 16u}; }});
  c.push_back({"2^n-2^s", "2", "2^n-2^s", "gcd(n,s+1)=1, n-s=3", "4",
               [](auto p, auto n, auto s) { return p == 2 && n == s + 3 && std::gcd(n, s + 1) == 1; },
               [](auto, auto n, auto s) { return ipow(2, n) - ipow(2, s); },
               [](auto, auto, auto) { return Values{4}; }});
  c.push_back({"cube-odd", ">3", "3", "any", "1",
               [](auto p, auto, auto) { return p > 3; },
               [](auto, auto, auto) { return std::uint64_t{3}; },
               [](auto, auto, auto) { return Values{1}; }});
  c.push_back({"3^n-3", "3", "3^n-3", "n>1 is odd", "2",
               [](auto p, auto n, auto) { return p == 3 && n > 1 && n % 2 == 1; },
               [](auto, auto n, auto) { return ipow(3, n) - 3; },
               [](auto, auto, auto) { return Values{2}; }});
  c.push_back({"inverse-odd-2mod3", ">3", "p^n-2", "p^n = 2 (mod 3)", "1",
               [](auto p, auto n, auto) { return p > 3 && ipow(p, n) % 3 == 2; },
               [](auto p, auto n, auto) { return ipow(p, n) - 2; },
               [](auto, auto, auto) { return Values{1}; }});
  c.push_back({"inverse-odd-1mod3", ">3", "p^n-2", "p^n = 1 (mod 3)", "3",
               [](auto p, auto n, auto) { return p > 3 && ipow(p, n) % 3 == 1; },
               [](auto p, auto n, auto) { return ipow(p, n) - 2; },
               [](auto, auto, auto) { return Values{3}; }});
  c.push_back({"3^n-2", "3", "3^n-2", "any", "3",
               [](auto p, auto, auto) { return p == 3; },
               [](auto, auto n, auto) { return ipow(3, n) - 2; },
               [](auto, auto, auto) { return Values{3}; }});
  c.push_back({"p^m+2", ">3", "p^m+2", "n=2m, p^m = 1 (mod 3)", "1",
               [](auto p, auto n, auto m) { return p > 3 && m >= 1 && n == 2 * m && ipow(p, m) % 3 == 1; },
               [](auto p, auto, auto m) { return ipow(p, m) + 2; },
               [](auto, auto, auto) { return Values{1}; }});
  c.push_back({"x4-odd", ">3", "4", "n>1", "2",
               [](auto p, auto n, auto) { return p > 3 && n > 1; },
               [](auto, auto, auto) { return std::uint64_t{4}; },
               [](auto, auto, auto) { return Values{2}; }});
  c.push_back({"(2p^n-1)/3", "p", "(2p^n-1)/3", "p^n = 2 (mod 3)", "1",
               [](auto p, auto n, auto) { return ipow(p, n) % 3 == 2; },
               [](auto p, auto n, auto) { return (2 * ipow(p, n) - 1) / 3; },
               [](auto, auto, auto) { return Values{1}; }});
  c.push_back({"(p^k+1)/2", ">3", "(p^k+1)/2", "gcd(2n,k)=1", "(p-3)/2",
               [](auto p, auto n, auto k) { return p > 3 && k >= 1 && std::gcd(2 * n, k) == 1; },
               [](auto p, auto, auto k) { return (ipow(p, k) + 1) / 2; },
               [](auto p, auto, auto) { return Values{(std::uint64_t{p} - 3) / 2}; }});
  c.push_back({"(3^n-1)/2+2", "3", "(3^n-1)/2+2", "n odd", "3",
               [](auto p, auto n, auto) { return p == 3 && n % 2 == 1; },
               [](auto, auto n, auto) { return (ipow(3, n) - 1) / 2 + 2; },
               [](auto, auto, auto) { return Values{3}; }});
  c.push_back({"2*3^((n-1)/2)+1", "3", "2*3^((n-1)/2)+1", "any", "3",
               [](auto p, auto n, auto) { return p == 3 && n % 2 == 1; },
               [](auto, auto n, auto) { return 2 * ipow(3, (n - 1) / 2) + 1; },
               [](auto, auto, auto) { return Values{3}; }});
  c.push_back({"(p^n+1)/4+(p^n-1)/2", "p", "(p^n+1)/4+(p^n-1)/2", "p^n = 3 (mod 8)", "8 or 18",
               [](auto p, auto n, auto) { return ipow(p, n) % 8 == 3; },
               [](auto p, auto n, auto) { return (ipow(p, n) + 1) / 4 + (ipow(p, n) - 1) / 2; },
               [](auto, auto, auto) { return Values{8, 18}; }});
  c.push_back({"(p^n+1)/4", "p", "(p^n+1)/4", "p^n = 7 (mod 8)", "8 or 18",
               [](auto p, auto n, auto) { return ipow(p, n) % 8 == 7; },
               [](auto p, auto n, auto) { return (ipow(p, n) + 1) / 4; },
               [](auto, auto, auto) { return Values{8, 18}; }});
  c.push_back({"x7-char2", "2", "7", "any", "4",
               [](auto p, auto, auto) { return p == 2; },
               [](auto, auto, auto) { return std::uint64_t{7}; },
               [](auto, auto, auto) { return Values{4}; }});
  c.push_back({"2^(m+1)+3", "2", "2^(m+1)+3", "n=2m+1 or n=2m", "4 or 2^m",
               [](auto p, auto n, auto m) { return p == 2 && m >= 1 && (n == 2 * m + 1 || n == 2 * m); },
               [](auto, auto, auto m) { return ipow(2, m + 1) + 3; },
               [](auto, auto n, auto m) { return Values{n == 2 * m + 1 ? 4 : ipow(2, m)}; }});
  c.push_back({"x5-odd", ">2", "5", "any (p != 5)", "3",
               [](auto p, auto, auto) { return p > 2 && p != 5; },
               [](auto, auto, auto) { return std::uint64_t{5}; },
               [](auto, auto, auto) { return Values{3}; }});
  c.push_back({"x7-char3", "3", "7", "any", "3",
               [](auto p, auto, auto) { return p == 3; },
               [](auto, auto, auto) { return std::uint64_t{7}; },
               [](auto, auto, auto) { return Values{3}; }});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<Instance> default_instances() {
  return {
      {"inverse-char2", 2, 4}, {"inverse-char2", 2, 5}, {"inverse-char2", 2, 6}, {"inverse-char2", 2, 7},
      {"inverse-char2", 2, 8},
      {"gold", 2, 4, 2}, {"gold", 2, 5, 1}, {"gold", 2, 5, 2}, {"gold", 2, 6, 1}, {"gold", 2, 6, 2},
      {"gold", 2, 6, 3},
      {"bracken-leander", 2, 4, 1}, {"bracken-leander", 2, 8, 2}, {"bracken-leander", 2, 12, 3},
      {"2^(m+1)-1", 2, 5, 2}, {"2^(m+1)-1", 2, 6, 3}, {"2^(m+1)-1", 2, 7, 3}, {"2^(m+1)-1", 2, 8, 4},
      {"2^m-1", 2, 5, 2}, {"2^m-1", 2, 6, 3}, {"2^m-1", 2, 7, 3}, {"2^m-1", 2, 8, 4},
      {"x21-char2", 2, 5}, {"x21-char2", 2, 6}, {"x21-char2", 2, 7}, {"x21-char2", 2, 8},
      {"2^n-2^s", 2, 5, 2}, {"2^n-2^s", 2, 7, 4},
      {"cube-odd", 5, 1}, {"cube-odd", 5, 2}, {"cube-odd", 7, 1}, {"cube-odd", 7, 2}, {"cube-odd", 11, 1},
      {"cube-odd", 11, 2}, {"cube-odd", 13, 1},
      {"3^n-3", 3, 3}, {"3^n-3", 3, 5},
      {"inverse-odd-2mod3", 5, 1}, {"inverse-odd-2mod3", 11, 1}, {"inverse-odd-2mod3", 17, 1},
      {"inverse-odd-2mod3", 5, 3},
      {"inverse-odd-1mod3", 7, 1}, {"inverse-odd-1mod3", 13, 1}, {"inverse-odd-1mod3", 5, 2},
      {"inverse-odd-1mod3", 7, 2}, {"inverse-odd-1mod3", 11, 2},
      {"3^n-2", 3, 2}, {"3^n-2", 3, 3}, {"3^n-2", 3, 4}, {"3^n-2", 3, 5},
      {"p^m+2", 7, 2, 1}, {"p^m+2", 13, 2, 1},
      {"x4-odd", 5, 2}, {"x4-odd", 7, 2}, {"x4-odd", 11, 2}, {"x4-odd", 5, 3},
      {"(2p^n-1)/3", 5, 1}, {"(2p^n-1)/3", 11, 1}, {"(2p^n-1)/3", 17, 1}, {"(2p^n-1)/3", 5, 3},
      {"(p^k+1)/2", 5, 1, 1}, {"(p^k+1)/2", 7, 1, 1}, {"(p^k+1)/2", 7, 2, 1}, {"(p^k+1)/2", 11, 1, 1},
      {"(p^k+1)/2", 5, 2, 3},
      {"(3^n-1)/2+2", 3, 3}, {"(3^n-1)/2+2", 3, 5},
      {"2*3^((n-1)/2)+1", 3, 3}, {"2*3^((n-1)/2)+1", 3, 5},
      {"(p^n+1)/4+(p^n-1)/2", 11, 1}, {"(p^n+1)/4+(p^n-1)/2", 19, 1}, {"(p^n+1)/4+(p^n-1)/2", 3, 3},
      {"(p^n+1)/4+(p^n-1)/2", 43, 1},
      {"(p^n+1)/4", 7, 1}, {"(p^n+1)/4", 23, 1}, {"(p^n+1)/4", 31, 1}, {"(p^n+1)/4", 47, 1},
      {"x7-char2", 2, 4}, {"x7-char2", 2, 5}, {"x7-char2", 2, 6}, {"x7-char2", 2, 7}, {"x7-char2", 2, 8},
      {"2^(m+1)+3", 2, 5, 2}, {"2^(m+1)+3", 2, 6, 3}, {"2^(m+1)+3", 2, 7, 3}, {"2^(m+1)+3", 2, 8, 4},
      {"x5-odd", 3, 2}, {"x5-odd", 3, 3}, {"x5-odd", 3, 4}, {"x5-odd", 7, 1}, {"x5-odd", 7, 2},
      {"x5-odd", 11, 1}, {"x5-odd", 11, 2},
      {"x7-char3", 3, 2}, {"x7-char3", 3, 3}, {"x7-char3", 3, 4},
  };
}

std::vector<Instance> select_instances(std::span<const std::string> ids) {
  for (const auto& id : ids)
    if (!find_entry(id)) throw Error(Errc::InvalidArgument, "unknown survey row '" + id + "'");
  std::vector<Instance> out;
  for (auto& inst : default_instances())
    if (ids.empty() || std::find(ids.begin(), ids.end(), inst.row) != ids.end()) out.push_back(inst);
  return out;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::SkippedScale: return "skipped: scale";
    case Status::SkippedCondition: return "skipped: condition";
  }
  return "?";
}

SurveyRow run_instance(const Instance& inst, const SurveyOptions& opts) {
  const CatalogEntry* e = find_entry(inst.row);
  if (!e) throw Error(Errc::InvalidArgument, "unknown survey row '" + inst.row + "'");
  SurveyRow row;
  row.instance = inst;
  row.condition = e->condition;
  if (!gf::is_prime(inst.p) || inst.n == 0) throw Error(Errc::InvalidArgument, "survey instance needs prime p, n >= 1");
  if (!e->applies(inst.p, inst.n, inst.param)) {
    row.status = Status::SkippedCondition;
    return row;
  }
  row.d = e->exponent(inst.p, inst.n, inst.param);
  row.expected = e->expected(inst.p, inst.n, inst.param);

  const auto q = gf::checked_pow(inst.p, inst.n, gf::kDefaultOrderBound);
  if (!q || (*q) * (*q) * (*q) > opts.evaluation_limit) {
    row.status = Status::SkippedScale;
    return row;
  }
  std::optional<gf::FieldSpec> cached;
  if (!opts.cache_path.empty()) cached = gf::lookup_field_cache(opts.cache_path, inst.p, inst.n);
  const auto field = cached ? gf::Field::create(*cached) : gf::Field::canonical(inst.p, inst.n);
  row.observed = spectra::sozd_uniformity(spectra::Sbox::power(field, row.d), opts.threads).uniformity;
  const bool ok = std::find(row.expected.begin(), row.expected.end(), *row.observed) != row.expected.end();
  row.status = ok ? Status::Match : Status::Mismatch;
  return row;
}

std::vector<SurveyRow> run_survey(std::span<const Instance> instances, const SurveyOptions& opts) {
  std::vector<SurveyRow> rows;
  rows.reserve(instances.size());
  for (const auto& inst : instances) rows.push_back(run_instance(inst, opts));
  return rows;
}

namespace {
std::string expected_string(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " or " : "") + std::to_string(v[i]);
  return s;
}
}  // namespace

nlohmann::ordered_json to_json(std::span<const SurveyRow> rows) {
  using json = nlohmann::ordered_json;
  json arr = json::array();
  std::size_t matched = 0, mismatched = 0, skipped = 0;
  for (const auto& r : rows) {
    json j;
    j["row"] = r.instance.row;
    j["p"] = r.instance.p;
    j["n"] = r.instance.n;
    j["param"] = r.instance.param;
    j["d"] = r.d;
    j["condition"] = r.condition;
    j["expected"] = r.expected;
    j["observed"] = r.observed ? json(*r.observed) : json(nullptr);
    j["match"] = r.match();
    j["status"] = std::string(to_string(r.status));
    arr.push_back(std::move(j));
    if (r.status == Status::Match) ++matched;
    else if (r.status == Status::Mismatch) ++mismatched;
    else ++skipped;
  }
  json out;
  out["rows"] = std::move(arr);
  out["matched"] = matched;
  out["mismatched"] = mismatched;
  out["skipped"] = skipped;
  return out;
}

void write_csv(std::span<const SurveyRow> rows, std::ostream& os) {
  os << "row,p,n,param,d,condition,expected,observed,match,status\n";
  for (const auto& r : rows) {
    os << '"' << r.instance.row << "\"," << r.instance.p << ',' << r.instance.n << ',' << r.instance.param << ','
       << r.d << ",\"" << r.condition << "\"," << expected_string(r.expected) << ','
       << (r.observed ? std::to_string(*r.observed) : std::string()) << ',' << (r.match() ? "true" : "false") << ','
       << to_string(r.status) << '\n';
  }
}

}  // namespace zdspec::survey
