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
#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

#include "zdspec/zdspec.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  zds_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, FindIrreducible) {
  uint32_t m[4] = {};
  ASSERT_EQ(zds_find_irreducible(2, 3, m, 4), ZDS_OK);
  EXPECT_EQ(m[0], 1u);
  EXPECT_EQ(m[1], 1u);
  EXPECT_EQ(m[2], 0u);
  EXPECT_EQ(m[3], 1u);
  EXPECT_EQ(zds_find_irreducible(2, 3, m, 3), ZDS_INVALID_ARGUMENT);
  EXPECT_EQ(zds_find_irreducible(4, 2, m, 4), ZDS_NOT_PRIME);
  EXPECT_NE(std::string(zds_last_error()), "");
}

TEST(CApi, FieldOpenAndCache) {
  const auto cache = std::filesystem::temp_directory_path() / "zdspec_capi_cache.txt";
  std::filesystem::remove(cache);
  zds_field* f = nullptr;
  ASSERT_EQ(zds_field_open(3, 2, nullptr, cache.c_str(), 0, ZDS_FIELD_PERSIST, &f), ZDS_OK);
  EXPECT_EQ(zds_field_order(f), 9u);
  EXPECT_EQ(zds_field_p(f), 3u);
  EXPECT_EQ(zds_field_n(f), 2u);
  char* s = nullptr;
  ASSERT_EQ(zds_field_describe_json(f, &s), ZDS_OK);
  EXPECT_NE(take(s).find("\"polynomial\": \"x^2 + 1\""), std::string::npos);
  zds_field_close(f);
  std::ifstream in(cache);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "3,2,1,0,1");

  // A cached modulus wins over the search.
  {
    std::ofstream out(cache);
    out << "2,3,1,0,1,1\n";
  }
  ASSERT_EQ(zds_field_open(2, 3, nullptr, cache.c_str(), 0, 0, &f), ZDS_OK);
  uint32_t m[4];
  ASSERT_EQ(zds_field_modulus(f, m, 4), ZDS_OK);
  EXPECT_EQ(m[1], 0u);
  EXPECT_EQ(m[2], 1u);
  zds_field_close(f);
  std::filesystem::remove(cache);

  const uint32_t reducible[3] = {1, 0, 1};
  EXPECT_EQ(zds_field_open(2, 2, reducible, nullptr, 0, 0, &f), ZDS_NOT_IRREDUCIBLE);
  EXPECT_EQ(f, nullptr);
  EXPECT_EQ(zds_field_open(2, 21, nullptr, nullptr, 0, 0, &f), ZDS_SIZE_BOUND);
}

TEST(CApi, Tables) {
  zds_field* f = nullptr;
  ASSERT_EQ(zds_field_open(2, 4, nullptr, nullptr, 0, 0, &f), ZDS_OK);
  zds_table_kind kind;
  ASSERT_EQ(zds_parse_table_kind("fbct", &kind), ZDS_OK);
  EXPECT_EQ(zds_parse_table_kind("bct", &kind), ZDS_INVALID_ARGUMENT);
  zds_table* t = nullptr;
  ASSERT_EQ(zds_table_compute(f, ZDS_TABLE_FBCT, 3, 0, &t), ZDS_OK);
  EXPECT_EQ(zds_table_dim(t), 16u);
  for (uint64_t a = 0; a < 16; ++a)
    for (uint64_t b = 0; b < 16; ++b) {
      const auto v = zds_table_entry(t, a, b);
      EXPECT_TRUE(v == 0 || v == 4 || v == 16);
      EXPECT_EQ(v % 4, 0u);
    }
  int passed = 0;
  ASSERT_EQ(zds_table_properties_passed(t, &passed), ZDS_OK);
  EXPECT_EQ(passed, 1);
  char* s = nullptr;
  ASSERT_EQ(zds_table_csv(t, &s), ZDS_OK);
  const auto csv = take(s);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 17);
  ASSERT_EQ(zds_table_summary_json(t, &s), ZDS_OK);
  EXPECT_NE(take(s).find("\"admissible\": \"ab(a+b) != 0\""), std::string::npos);
  zds_table_free(t);

  ASSERT_EQ(zds_table_compute(f, ZDS_TABLE_SOZD, 3, 0, &t), ZDS_OK);
  EXPECT_EQ(zds_table_properties_passed(t, &passed), ZDS_CHARACTERISTIC);
  zds_table_free(t);
  zds_field_close(f);

  ASSERT_EQ(zds_field_open(3, 2, nullptr, nullptr, 0, 0, &f), ZDS_OK);
  EXPECT_EQ(zds_table_compute(f, ZDS_TABLE_FBCT, 3, 0, &t), ZDS_CHARACTERISTIC);
  zds_field_close(f);
}

TEST(CApi, Verify) {
  zds_field* f = nullptr;
  ASSERT_EQ(zds_field_open(3, 3, nullptr, nullptr, 0, 0, &f), ZDS_OK);
  zds_verify_options o;
  zds_verify_options_init(&o);
  EXPECT_EQ(o.samples, 10000u);
  zds_report* r = nullptr;
  ASSERT_EQ(zds_verify(f, "4.2", &o, &r), ZDS_OK);
  EXPECT_EQ(zds_report_passed(r), 1);
  EXPECT_EQ(zds_report_uniformity(r), 3u);
  EXPECT_EQ(zds_report_mismatch_count(r), 0u);
  char* s = nullptr;
  ASSERT_EQ(zds_report_json(r, &s), ZDS_OK);
  EXPECT_EQ(take(s).rfind("{\n  \"theorem\": \"4.2\"", 0), 0u);
  zds_report_free(r);
  EXPECT_EQ(zds_verify(f, "3.1", &o, &r), ZDS_HYPOTHESIS);
  EXPECT_EQ(zds_verify(f, "9.9", &o, &r), ZDS_INVALID_ARGUMENT);
  zds_field_close(f);
  EXPECT_EQ(zds_verify_cost(2, 8), 1u << 24);
}

TEST(CApi, Survey) {
  const char* rows[] = {"x4-odd"};
  zds_survey* s = nullptr;
  ASSERT_EQ(zds_survey_run(rows, 1, 0, 0, nullptr, &s), ZDS_OK);
  EXPECT_GT(zds_survey_size(s), 0u);
  EXPECT_EQ(zds_survey_all_matched(s), 1);
  zds_survey_free(s);

  ASSERT_EQ(zds_survey_run_instance("inverse-char2", 2, 5, 0, 0, 0, nullptr, &s), ZDS_OK);
  int have = 0;
  EXPECT_EQ(zds_survey_observed(s, 0, &have), 0u);
  EXPECT_EQ(have, 1);
  EXPECT_EQ(zds_survey_row_matched(s, 0), 0);
  EXPECT_EQ(zds_survey_mismatch_count(s), 1u);
  char* text = nullptr;
  ASSERT_EQ(zds_survey_csv(s, &text), ZDS_OK);
  EXPECT_NE(take(text).find("mismatch"), std::string::npos);
  zds_survey_free(s);

  const char* bad[] = {"unknown-row"};
  EXPECT_EQ(zds_survey_run(bad, 1, 0, 0, nullptr, &s), ZDS_INVALID_ARGUMENT);
}
