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

#include "signet/report.hpp"

#include <charconv>
#include <cmath>

#include "signet/error.hpp"
#include "signet/parallel.hpp"

namespace signet {

namespace {

// Non-finite values become strings; JSON has no literal for them.
Json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

Json optional_number(std::optional<double> v) {
  if (!v) return nullptr;
  return number(*v);
}

const char* sign_token(Sign s) { return s == Sign::kPositive ? "+1" : "-1"; }

Json task_json(const AnalysisTask& t) {
  Json j;
  j["pipeline"] = pipeline_name(t.pipeline);
  j["sign"] = to_int(t.sign);
  j["k"] = t.k == 0 ? Json(nullptr) : Json(t.k);
  j["scoreSource"] = t.source == ScoreSource::kNone
                         ? Json(nullptr)
                         : Json(score_source_name(t.source));
  if (t.report) {
    j["status"] = "ok";
    const Json r = to_json(*t.report);
    for (auto it = r.begin(); it != r.end(); ++it)
      if (it.key() != "pipeline" && it.key() != "config") j[it.key()] = *it;
  } else {
    j["status"] = "error";
    j["error"] = {{"category", category_name(*t.error_category)},
                  {"message", t.error_message}};
  }
  return j;
}

std::string table_of(const std::vector<AnalysisTask>& tasks) {
  std::string out =
      "pipeline\tsign\tk\tscore_source\tstatus\tn1\tn2\tmean1\tmean2\tt\tdf\t"
      "p_value\tlog10_p\trejected\tskipped\n";
  for (const auto& t : tasks) {
    out += std::string(pipeline_name(t.pipeline)) + '\t' + sign_token(t.sign) +
           '\t' + (t.k ? std::to_string(t.k) : "-") + '\t' +
           (t.source == ScoreSource::kNone
                ? std::string("-")
                : std::string(score_source_name(t.source))) +
           '\t';
    if (!t.report) {
      out += "error:" + std::string(category_name(*t.error_category)) +
             "\t-\t-\t-\t-\t-\t-\t-\t-\t-\t-\n";
      continue;
    }
    const auto& r = *t.report;
    out += "ok\t" + std::to_string(r.result.n1) + '\t' +
           std::to_string(r.result.n2) + '\t' + format_double(r.first.mean) +
           '\t' + format_double(r.second.mean) + '\t' +
           format_double(r.result.t_statistic) + '\t' +
           format_double(r.result.degrees_of_freedom) + '\t' +
           format_double(r.result.p_value) + '\t' +
           format_double(r.result.log10_p_value) + '\t' +
           (r.result.rejected ? "1" : "0") + '\t' +
           std::to_string(r.skipped) + '\n';
  }
  return out;
}

}  // namespace

std::string_view score_source_name(ScoreSource s) {
  switch (s) {
    case ScoreSource::kNone:
      return "none";
    case ScoreSource::kRating:
      return "rating";
    case ScoreSource::kEmotion:
      return "emotion";
  }
  return "none";
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const DatasetStats& s) {
  return {{"numUsers", s.num_users},
          {"numPositiveLinks", s.num_positive_links},
          {"numNegativeLinks", s.num_negative_links},
          {"numPositiveEmotions", s.num_positive_emotions},
          {"numNegativeEmotions", s.num_negative_emotions}};
}

Json to_json(const IngestReport& r) {
  Json files = Json::array();
  for (const auto& f : r.files)
    files.push_back({{"path", f.path},
                     {"sha256", f.sha256},
                     {"lines", f.lines},
                     {"records", f.records},
                     {"skippedLines", f.skipped_lines}});
  return {{"files", files},
          {"numUsers", r.num_users},
          {"numItems", r.num_items},
          {"linkConflicts", r.link_conflicts},
          {"linkDuplicates", r.link_duplicates},
          {"scoreEvents", r.score_events},
          {"polarityEvents", r.polarity_events},
          {"neutralEventsDropped", r.neutral_events},
          {"ratingOverwrites", r.rating_overwrites},
          {"warnings", r.warnings}};
}

Json to_json(const stats::TestResult& r) {
  return {{"tStatistic", number(r.t_statistic)},
          {"degreesOfFreedom", number(r.degrees_of_freedom)},
          {"pValue", number(r.p_value)},
          {"log10PValue", number(r.log10_p_value)},
          {"alpha", r.alpha},
          {"rejected", r.rejected},
          {"n1", r.n1},
          {"n2", r.n2}};
}

Json to_json(const HypothesisReport& r) {
  Json summary = Json::array();
  for (const auto* s : {&r.first, &r.second})
    summary.push_back(
        {{"label", s->label}, {"size", s->size}, {"mean", number(s->mean)}});
  return {{"pipeline", pipeline_name(r.pipeline)},
          {"config",
           {{"sign", to_int(r.config.sign)},
            {"k", r.config.k},
            {"alpha", r.config.alpha},
            {"seed", r.config.seed},
            {"samplingAttempts", r.config.sampling_attempts}}},
          {"result", to_json(r.result)},
          {"samples", summary},
          {"candidates", r.candidates},
          {"skipped", r.skipped},
          {"conclusion", r.conclusion}};
}

Json to_json(const TriadCensus& c) {
  Json counts;
  for (int t = 0; t < 4; ++t)
    counts[std::string(triad_name(static_cast<TriadType>(t)))] = c.counts[t];
  return {{"counts", counts},
          {"inconsistent", c.inconsistent},
          {"closedTriples", c.closed_triples()},
          {"balanced", c.balanced()},
          {"balancedFraction", optional_number(c.balanced_fraction())}};
}

Json personality_summary(const PersonalityScores& s) {
  auto side = [&](Sign sign) {
    double sum = 0;
    std::size_t n = 0;
    for (UserId i = 0; i < s.size(); ++i)
      if (auto v = s.score(i, sign)) sum += *v, ++n;
    return Json{{"defined", n},
                {"mean", n ? Json(sum / static_cast<double>(n)) : Json(nullptr)}};
  };
  return {{"optimism", side(Sign::kPositive)},
          {"pessimism", side(Sign::kNegative)}};
}

RunAllResult run_all(const Dataset& data, const RunAllConfig& cfg) {
  for (int k : cfg.strength_ks)
    if (k < 2) throw Error(ErrorCategory::kInvalidArgument, "K must be >= 2");
  for (int k : cfg.personality_ks)
    if (k < 2) throw Error(ErrorCategory::kInvalidArgument, "K must be >= 2");

  std::optional<PersonalityScores> rating_scores;
  if (data.ratings) rating_scores = rating_based_scores(*data.ratings);
  const PersonalityScores emotion_scores = emotion_based_scores(data.emotions);

  std::vector<AnalysisTask> tasks;
  auto plan = [&](Pipeline p, Sign s, int k = 0,
                  ScoreSource src = ScoreSource::kNone) {
    AnalysisTask t;
    t.pipeline = p;
    t.sign = s;
    t.k = k;
    t.source = src;
    tasks.push_back(std::move(t));
  };
  const Sign signs[] = {Sign::kPositive, Sign::kNegative};
  for (Sign s : signs) plan(Pipeline::kEmotionExistence, s);
  for (int k : cfg.strength_ks)
    for (Sign s : signs) plan(Pipeline::kEmotionStrength, s, k);
  for (Sign s : signs) plan(Pipeline::kDiffusion, s);
  for (ScoreSource src : {ScoreSource::kRating, ScoreSource::kEmotion}) {
    if (src == ScoreSource::kRating && !rating_scores) continue;
    for (int k : cfg.personality_ks)
      for (Sign s : signs)
        plan(Pipeline::kPersonality, s, k, src);
  }

  parallel_for(tasks.size(), cfg.threads, [&](std::size_t idx) {
    auto& t = tasks[idx];
    PipelineConfig pc;
    pc.sign = t.sign;
    pc.k = t.k ? t.k : 10;
    pc.alpha = cfg.alpha;
    pc.seed = cfg.seed;
    pc.sampling_attempts = cfg.sampling_attempts;
    try {
      switch (t.pipeline) {
        case Pipeline::kEmotionExistence:
          t.report = emotion_existence_test(data.network, data.emotions, pc);
          break;
        case Pipeline::kEmotionStrength:
          t.report = emotion_strength_test(data.network, data.emotions, pc);
          break;
        case Pipeline::kDiffusion:
          t.report = diffusion_test(data.network, pc);
          break;
        case Pipeline::kPersonality:
          t.report = personality_test(
              data.network,
              t.source == ScoreSource::kRating ? *rating_scores
                                               : emotion_scores,
              pc);
          break;
      }
    } catch (const Error& e) {
      t.error_category = e.category();
      t.error_message = e.what();
    }
  });

  RunAllResult out;
  Json& rep = out.report;
  rep["schema"] = kReportSchema;
  rep["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  rep["config"] = {{"seed", cfg.seed},
                   {"alpha", cfg.alpha},
                   {"samplingAttempts", cfg.sampling_attempts},
                   {"strengthK", cfg.strength_ks},
                   {"personalityK", cfg.personality_ks}};
  rep["stats"] = to_json(compute_stats(data.network, data.emotions));
  rep["ingest"] = to_json(data.report);
  Json pers;
  if (rating_scores) pers["rating"] = personality_summary(*rating_scores);
  pers["emotion"] = personality_summary(emotion_scores);
  rep["personality"] = pers;
  Json tests = Json::array();
  for (const auto& t : tasks) tests.push_back(task_json(t));
  rep["tests"] = tests;
  rep["triads"] = to_json(triad_census(data.network));

  out.table = table_of(tasks);
  out.tasks = std::move(tasks);
  return out;
}

}  // namespace signet
