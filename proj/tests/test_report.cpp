/** Copyright 2026 The Signet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "signet/report.hpp"
#include "signet/synth.hpp"

using namespace signet;

namespace {

Dataset synthetic(std::uint64_t seed, std::uint32_t users = 400,
                  double theta = 0.0) {
  GeneratorConfig g;
  g.num_users = users;
  g.seed = seed;
  g.theta_emo = g.theta_diff = g.theta_pers = theta;
  if (users < 2000) g.link_density = g.emotion_density = 0.03;
  return dataset_from_synthetic(generate(g));
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(INFINITY) == "inf");
  CHECK(format_double(-INFINITY) == "-inf");
  CHECK(format_double(NAN) == "nan");
  CHECK(dump(Json{{"a", 1}}) == "{\n  \"a\": 1\n}\n");
}

TEST_CASE("report layout") {
  const auto ds = synthetic(3, 400, 0.2);
  RunAllConfig cfg;
  const auto res = run_all(ds, cfg);
  const auto& r = res.report;
  CHECK(r["schema"] == kReportSchema);
  for (const char* key : {"numUsers", "numPositiveLinks", "numNegativeLinks",
                          "numPositiveEmotions", "numNegativeEmotions"})
    CHECK(r["stats"].contains(key));
  CHECK(r["stats"]["numUsers"] == 400);
  // 2 + 2*3 + 2 + 2*3*2 (rating and emotion scores).
  CHECK(r["tests"].size() == 22);
  CHECK(res.tasks.size() == 22);
  for (const auto& t : r["tests"]) {
    CHECK(t["status"] == "ok");
    CHECK(t["result"].contains("pValue"));
    CHECK(t["result"].contains("log10PValue"));
  }
  CHECK(r["triads"]["counts"].contains("+--"));
  CHECK(r["personality"].contains("rating"));
  // Header plus one row per task.
  CHECK(std::count(res.table.begin(), res.table.end(), '\n') == 23);
}

TEST_CASE("one failing analysis does not abort the others") {
  auto ds = synthetic(4);
  ds.emotions = EmotionMatrices{CountMatrix(ds.network.num_users(), {}),
                                CountMatrix(ds.network.num_users(), {})};
  ds.ratings.reset();
  const auto res = run_all(ds, {});
  int errors = 0, ok = 0;
  for (const auto& t : res.report["tests"]) {
    if (t["status"] == "error") {
      ++errors;
      CHECK(t["error"]["category"] == "insufficient_data");
    } else {
      ++ok;
    }
  }
  CHECK(ok == 2);  // diffusion, both signs
  CHECK(errors == 14);
}

TEST_CASE("thread count never changes the report") {
  const auto ds = synthetic(5, 400, 0.1);
  RunAllConfig one, eight;
  one.threads = 1;
  eight.threads = 8;
  const auto a = run_all(ds, one), b = run_all(ds, eight);
  CHECK(dump(a.report) == dump(b.report));
  CHECK(a.table == b.table);
  CHECK(dump(run_all(ds, one).report) == dump(a.report));
}

TEST_CASE("invalid K values are rejected up front") {
  RunAllConfig cfg;
  cfg.strength_ks = {1};
  CHECK_THROWS_AS(run_all(synthetic(1), cfg), Error);
}

TEST_CASE("null data: every analysis is not rejected for seed 7") {
  const auto ds = synthetic(7, 2000);
  RunAllConfig cfg;
  cfg.seed = 7;
  const auto res = run_all(ds, cfg);
  REQUIRE(res.tasks.size() == 22);
  for (const auto& t : res.tasks) {
    REQUIRE(t.report.has_value());
    INFO(pipeline_name(t.pipeline) << " sign " << to_int(t.sign) << " k " << t.k);
    CHECK_FALSE(t.report->result.rejected);
    CHECK(t.report->conclusion.rfind("not supported", 0) == 0);
  }
}

TEST_CASE("non-finite statistics serialize as strings") {
  HypothesisReport h;
  h.result.t_statistic = INFINITY;
  h.result.p_value = 0;
  h.result.log10_p_value = -INFINITY;
  const auto j = to_json(h);
  CHECK(j["result"]["tStatistic"] == "inf");
  CHECK(j["result"]["log10PValue"] == "-inf");
}
