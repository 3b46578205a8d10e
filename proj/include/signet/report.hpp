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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "signet/error.hpp"
#include "signet/io.hpp"
#include "signet/pipelines.hpp"
#include "signet/triads.hpp"

namespace signet {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "signet";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "signet-report/1";

struct RunAllConfig {
  std::vector<int> strength_ks{10, 30, 50};
  std::vector<int> personality_ks{20, 30, 50};
  double alpha = 0.01;
  std::uint64_t seed = 0;
  int sampling_attempts = 100;
  unsigned threads = 1;  // never changes the output
};

enum class ScoreSource { kNone, kRating, kEmotion };
std::string_view score_source_name(ScoreSource s);

/// One analysis of the run-all plan and its outcome. Errors are captured
/// per task so one failing analysis never aborts its siblings.
struct AnalysisTask {
  Pipeline pipeline = Pipeline::kEmotionExistence;
  Sign sign = Sign::kPositive;
  int k = 0;  // 0 for the unranked pipelines
  ScoreSource source = ScoreSource::kNone;

  std::optional<HypothesisReport> report;
  std::optional<ErrorCategory> error_category;
  std::string error_message;
};

struct RunAllResult {
  Json report;
  std::string table;  // tab-separated, one row per task
  std::vector<AnalysisTask> tasks;
};

/// Stats, personality scoring, every pipeline in both sign variants over
/// the configured K values, and the triad census. Output is a function of
/// (dataset, config minus threads) only.
RunAllResult run_all(const Dataset& data, const RunAllConfig& cfg);

Json to_json(const DatasetStats& s);
Json to_json(const IngestReport& r);
Json to_json(const stats::TestResult& r);
Json to_json(const HypothesisReport& r);
Json to_json(const TriadCensus& c);
Json personality_summary(const PersonalityScores& s);

/// Report serialization used by every writer: 2-space indent plus a
/// trailing newline.
std::string dump(const Json& j);

/// Shortest round-trip decimal form; "nan", "inf", "-inf" for non-finite.
std::string format_double(double v);

}  // namespace signet
