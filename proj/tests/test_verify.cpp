// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "basecone/verify.hpp"

using namespace basecone;

namespace {

// Minimal JSON-Schema checker covering the keyword subset used by the
// published schema: type, const, enum, required, properties, items,
// additionalProperties.
bool schema_valid(const Json& schema, const Json& doc) {
  if (schema.contains("const")) return doc == schema["const"];
  if (schema.contains("enum")) {
    for (const Json& v : schema["enum"])
      if (doc == v) return true;
    return false;
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"].get<std::string>();
    if (t == "object" && !doc.is_object()) return false;
    if (t == "array" && !doc.is_array()) return false;
    if (t == "string" && !doc.is_string()) return false;
    if (t == "integer" && !doc.is_number_integer()) return false;
    if (t == "number" && !doc.is_number()) return false;
    if (t == "boolean" && !doc.is_boolean()) return false;
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const Json& key : schema["required"])
        if (!doc.contains(key.get<std::string>())) return false;
    const Json props = schema.value("properties", Json::object());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (props.contains(it.key())) {
        if (!schema_valid(props[it.key()], it.value())) return false;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        return false;
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (const Json& item : doc)
      if (!schema_valid(schema["items"], item)) return false;
  }
  return true;
}

Json load_schema() {
  std::ifstream in(BASECONE_SCHEMA_PATH);
  REQUIRE(in.good());
  return Json::parse(in);
}

RunConfig small_config() {
  RunConfig cfg;
  cfg.n_min = 3;
  cfg.n_max = 4;
  return cfg;
}

}  // namespace

TEST_CASE("case expansion respects bounds and selectors") {
  RunConfig cfg = small_config();
  std::vector<CaseId> all = expand_cases(cfg);
  CHECK(all.size() == 11);  // n=3: 1*3 cases; n=4: 2*4 cases

  cfg.i_select = 1;
  cfg.shift_select = 0;
  std::vector<CaseId> two = expand_cases(cfg);
  REQUIRE(two.size() == 2);
  CHECK(two[0].n == 3);
  CHECK(two[1].n == 4);
}

TEST_CASE("invalid configurations are rejected") {
  RunConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 2;
  CHECK_THROWS_AS(expand_cases(cfg), std::invalid_argument);

  cfg = small_config();
  cfg.n_min = 6;
  cfg.n_max = 3;
  CHECK_THROWS_AS(expand_cases(cfg), std::invalid_argument);

  cfg = small_config();
  cfg.i_select = 5;  // no n in 3..4 admits i=5
  CHECK_THROWS_AS(expand_cases(cfg), std::invalid_argument);

  cfg = small_config();
  cfg.n_max = 9;  // above the desk-scale cap without --unsafe
  CHECK_THROWS_AS(expand_cases(cfg), std::invalid_argument);
  cfg.unsafe = true;
  CHECK_NOTHROW(validate_config(cfg));

  cfg = small_config();
  cfg.degree_bound = 7;  // above the T cap without --unsafe
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  cfg.unsafe = true;
  CHECK_NOTHROW(validate_config(cfg));

  cfg = small_config();
  cfg.composition_guard = kDefaultCompositionGuard + 1;
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
}

TEST_CASE("facets report passes and carries the erratum note at n=4") {
  RunConfig cfg = small_config();
  CommandReport r = run_facets(cfg);
  CHECK(r.overall_pass);
  CHECK(r.cases.size() == 11);
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes[0].find("erratum") != std::string::npos);
}

TEST_CASE("rays report passes on the small sweep") {
  CommandReport r = run_rays(small_config());
  CHECK(r.overall_pass);
  for (const Json& c : r.cases) CHECK(c["match"].get<bool>());
}

TEST_CASE("hilbert report carries pinned values") {
  RunConfig cfg;
  cfg.n_min = cfg.n_max = 3;
  cfg.i_select = 1;
  cfg.shift_select = 0;
  CommandReport r = run_hilbert(cfg);
  REQUIRE(r.cases.size() == 1);
  CHECK(r.cases[0]["h_vector"] == Json::array({1, 6, 1}));
  CHECK(r.cases[0]["a_invariant"] == -1);
  CHECK(r.overall_pass);
}

TEST_CASE("gorenstein report rejects too-small bounds") {
  RunConfig cfg = small_config();
  cfg.degree_bound = 1;
  CHECK_THROWS_AS(run_gorenstein(cfg), std::invalid_argument);
}

TEST_CASE("verify report passes on the small sweep") {
  CommandReport r = run_verify(small_config());
  CHECK(r.overall_pass);
  for (const Json& c : r.cases) {
    CHECK(c["facet_match"].get<bool>());
    CHECK(c["ray_match"].get<bool>());
    CHECK(c["det_ok"].get<bool>());
    CHECK(c["ehrhart_ok"].get<bool>());
    CHECK(c["a_invariant_series"].get<long long>() == -1);
    CHECK(c["a_invariant_canonical"].get<long long>() == -1);
    CHECK(c["gorenstein"].get<bool>());
    CHECK(c["normality"].get<bool>());
  }
}

TEST_CASE("reports are byte-identical across runs") {
  RunConfig cfg = small_config();
  CommandReport a = run_verify(cfg);
  CommandReport b = run_verify(cfg);
  for (OutputFormat fmt : {OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv})
    CHECK(render(a, fmt) == render(b, fmt));
}

TEST_CASE("json reports validate against the published schema") {
  Json schema = load_schema();
  RunConfig cfg = small_config();
  CHECK(schema_valid(schema, run_facets(cfg).to_json()));
  CHECK(schema_valid(schema, run_rays(cfg).to_json()));
  CHECK(schema_valid(schema, run_verify(cfg).to_json()));
  RunConfig one;
  one.n_min = one.n_max = 3;
  CHECK(schema_valid(schema, run_hilbert(one).to_json()));
  CHECK(schema_valid(schema, run_gorenstein(one).to_json()));

  // The checker itself rejects broken documents.
  Json bad = run_facets(cfg).to_json();
  bad["command"] = "unknown";
  CHECK_FALSE(schema_valid(schema, bad));
  bad = run_facets(cfg).to_json();
  bad.erase("overall_pass");
  CHECK_FALSE(schema_valid(schema, bad));
}

TEST_CASE("csv and text renderings are well-formed") {
  CommandReport r = run_facets(small_config());
  std::string csv = render(r, OutputFormat::Csv);
  CHECK(csv.rfind("command,n,i,shift", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.cases.size()) + 1);
  std::string text = render(r, OutputFormat::Text);
  CHECK(text.find("overall: pass") != std::string::npos);
  CHECK(text.find("reference table, n=4") != std::string::npos);
}

TEST_CASE("output path resolution honors the environment directory") {
  CHECK(resolve_output_path("/abs/path.json") == "/abs/path.json");
  ::setenv("BASECONE_OUT_DIR", "/tmp/basecone_out", 1);
  CHECK(resolve_output_path("r.json") == "/tmp/basecone_out/r.json");
  ::unsetenv("BASECONE_OUT_DIR");
  CHECK(resolve_output_path("r.json") == "r.json");
}
