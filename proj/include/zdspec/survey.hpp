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
#ifndef ZDSPEC_SURVEY_HPP
#define ZDSPEC_SURVEY_HPP

// Catalogue of power maps x^d with a published second-order zero
// differential uniformity, and a brute-force check of each entry on small
// fields.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace zdspec::survey {

struct CatalogEntry {
  std::string id;
  std::string p;          // characteristic constraint as published
  std::string d;          // exponent as published
  std::string condition;  // condition column as published
  std::string uniformity; // uniformity column as published
  // Per-instance rules. `param` is the row's free parameter (k, m or s), 0
  // when the row has none.
  std::function<bool(std::uint32_t p, std::uint32_t n, std::uint32_t param)> applies;
  std::function<std::uint64_t(std::uint32_t p, std::uint32_t n, std::uint32_t param)> exponent;
  // Acceptable values; more than one when the published column leaves a
  // choice that the condition does not resolve.
  std::function<std::vector<std::uint64_t>(std::uint32_t p, std::uint32_t n, std::uint32_t param)> expected;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(std::string_view id);

struct Instance {
  std::string row;
  std::uint32_t p;
  std::uint32_t n;
  std::uint32_t param = 0;
};

std::vector<Instance> default_instances();
// Default instances whose row id is listed; all of them when ids is empty.
// Throws InvalidArgument for an unknown id.
std::vector<Instance> select_instances(std::span<const std::string> ids);

enum class Status { Match, Mismatch, SkippedScale, SkippedCondition };
std::string_view to_string(Status s);

struct SurveyRow {
  Instance instance;
  std::uint64_t d = 0;
  std::string condition;
  std::vector<std::uint64_t> expected;
  std::optional<std::uint64_t> observed;
  Status status = Status::SkippedScale;

  bool match() const noexcept { return status == Status::Match; }
};

struct SurveyOptions {
  // Instances with p^{3n} above this are reported as skipped.
  std::uint64_t evaluation_limit = std::uint64_t{1} << 24;
  unsigned threads = 0;
  // Optional field cache consulted for moduli.
  std::string cache_path;
};

SurveyRow run_instance(const Instance& inst, const SurveyOptions& opts = {});
std::vector<SurveyRow> run_survey(std::span<const Instance> instances, const SurveyOptions& opts = {});

nlohmann::ordered_json to_json(std::span<const SurveyRow> rows);
void write_csv(std::span<const SurveyRow> rows, std::ostream& os);

}  // namespace zdspec::survey

#endif  // ZDSPEC_SURVEY_HPP
