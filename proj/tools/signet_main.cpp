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

// signet: command-line front end for signed-network link analysis.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "signet/error.hpp"
#include "signet/io.hpp"
#include "signet/personality.hpp"
#include "signet/pipelines.hpp"
#include "signet/report.hpp"
#include "signet/synth.hpp"
#include "signet/triads.hpp"

namespace fs = std::filesystem;
using namespace signet;

namespace {

struct DataOptions {
  std::string dir;
  std::string links;
  std::string emotions;
  std::string ratings;
  std::string users;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--data", dir,
                    "directory holding links.tsv [emotions.tsv ratings.tsv "
                    "users.tsv]");
    cmd->add_option("--links", links, "link file: source target sign");
    cmd->add_option("--emotions", emotions,
                    "emotion file: source target score|P|N");
    cmd->add_option("--ratings", ratings, "rating file: user item score");
    cmd->add_option("--users", users, "user id file fixing index order");
  }

  InputPaths paths() const {
    InputPaths p;
    if (!dir.empty()) p = InputPaths::from_directory(dir);
    if (!links.empty()) p.links = links;
    if (!emotions.empty()) p.emotions = emotions;
    if (!ratings.empty()) p.ratings = ratings;
    if (!users.empty()) p.users = users;
    if (p.links.empty())
      throw Error(ErrorCategory::kInvalidArgument,
                  "no link file: pass --links or --data");
    return p;
  }
};

Sign parse_sign(const std::string& s) {
  if (s == "+1" || s == "1" || s == "+" || s == "pos" || s == "positive")
    return Sign::kPositive;
  if (s == "-1" || s == "-" || s == "neg" || s == "negative")
    return Sign::kNegative;
  throw Error(ErrorCategory::kInvalidArgument,
              "sign must be +1 or -1, got '" + s + "'");
}

ScoreSource parse_source(const std::string& s) {
  if (s == "rating") return ScoreSource::kRating;
  if (s == "emotion") return ScoreSource::kEmotion;
  throw Error(ErrorCategory::kInvalidArgument,
              "score source must be 'rating' or 'emotion', got '" + s + "'");
}

PersonalityScores scores_for(const Dataset& ds, ScoreSource src) {
  if (src == ScoreSource::kRating) {
    if (!ds.ratings)
      throw Error(ErrorCategory::kInvalidArgument,
                  "rating-based scores need a rating file");
    return rating_based_scores(*ds.ratings);
  }
  return emotion_based_scores(ds.emotions);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCategory::kIo, "cannot write " + path);
  out << text;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json truth_json(const GeneratorConfig& c, const GroundTruth& t) {
  return {{"config",
           {{"numUsers", c.num_users},
            {"linkDensity", c.link_density},
            {"positiveLinkFraction", c.positive_link_fraction},
            {"emotionDensity", c.emotion_density},
            {"controversialFraction", c.controversial_fraction},
            {"positiveEmotionShare", c.positive_emotion_share},
            {"controversialPositiveShare", c.controversial_positive_share},
            {"meanExtraStrength", c.mean_extra_strength},
            {"strengthCap", c.strength_cap},
            {"thetaEmo", c.theta_emo},
            {"thetaDiff", c.theta_diff},
            {"thetaPers", c.theta_pers},
            {"optimismRange", {c.optimism_low, c.optimism_high}},
            {"pessimismRange", {c.pessimism_low, c.pessimism_high}},
            {"numItems", c.num_items},
            {"ratingsPerUser", c.ratings_per_user},
            {"seed", c.seed}}},
          {"tallies",
           {{"positiveLinks", t.positive_links},
            {"negativeLinks", t.negative_links},
            {"positiveEmotions", t.positive_emotions},
            {"negativeEmotions", t.negative_emotions},
            {"baseLinks", t.base_links},
            {"expectedBaseLinks", t.expected_base_links},
            {"baseLinkVariance", t.base_link_variance},
            {"emotionBoostedPairs", t.emotion_boosted_pairs},
            {"diffusionCandidates", t.diffusion_candidates},
            {"diffusionLinks", t.diffusion_links},
            {"clippedPairs", t.clipped_pairs},
            {"clipRate", t.clip_rate}}},
          {"optimism", t.optimism},
          {"pessimism", t.pessimism},
          {"controversial", t.controversial},
          {"itemLow", t.item_low}};
}

std::vector<int> parse_k_list(const std::string& s) {
  std::vector<int> ks;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      ks.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCategory::kInvalidArgument, "bad K list '" + s + "'");
    }
  }
  return ks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signet: signed-network link analysis toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  DataOptions data;

  auto* ingest_cmd = app.add_subcommand(
      "ingest-check", "validate input files and print the ingestion report");
  data.add_to(ingest_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "print dataset statistics");
  data.add_to(stats_cmd);

  std::string pers_source = "rating", pers_out;
  auto* pers_cmd = app.add_subcommand(
      "personality", "write per-user optimism/pessimism scores as TSV");
  data.add_to(pers_cmd);
  pers_cmd->add_option("--source", pers_source, "rating | emotion")
      ->capture_default_str();
  pers_cmd->add_option("--out", pers_out, "output file (default stdout)");

  std::string test_pipeline, test_sign = "+1", test_source = "rating";
  PipelineConfig test_cfg;
  bool test_k_set = false;
  auto* test_cmd = app.add_subcommand("test", "run one hypothesis pipeline");
  data.add_to(test_cmd);
  test_cmd
      ->add_option("--pipeline", test_pipeline,
                   "emo-exist | emo-strength | diffusion | personality")
      ->required();
  test_cmd->add_option("--sign", test_sign, "+1 or -1")->capture_default_str();
  test_cmd
      ->add_option_function<int>(
          "--k",
          [&](int k) {
            test_cfg.k = k;
            test_k_set = true;
          },
          "group count (default 10 for emo-strength, 20 for personality)");
  test_cmd->add_option("--alpha", test_cfg.alpha, "significance level")
      ->capture_default_str();
  test_cmd->add_option("--seed", test_cfg.seed, "control-sampling seed")
      ->capture_default_str();
  test_cmd
      ->add_option("--attempts", test_cfg.sampling_attempts,
                   "rejection-sampling retries per control")
      ->capture_default_str();
  test_cmd->add_option("--source", test_source,
                       "personality score source: rating | emotion")
      ->capture_default_str();

  auto* triads_cmd =
      app.add_subcommand("triads", "balance-theory triad census");
  data.add_to(triads_cmd);

  GeneratorConfig gen;
  std::string synth_out;
  auto* synth_cmd =
      app.add_subcommand("synth", "generate a planted-effect synthetic dataset");
  synth_cmd->add_option("--out", synth_out, "output directory")->required();
  synth_cmd->add_option("--users", gen.num_users)->capture_default_str();
  synth_cmd->add_option("--link-density", gen.link_density)
      ->capture_default_str();
  synth_cmd->add_option("--positive-link-fraction", gen.positive_link_fraction)
      ->capture_default_str();
  synth_cmd->add_option("--emotion-density", gen.emotion_density)
      ->capture_default_str();
  synth_cmd->add_option("--theta-emo", gen.theta_emo)->capture_default_str();
  synth_cmd->add_option("--theta-diff", gen.theta_diff)->capture_default_str();
  synth_cmd->add_option("--theta-pers", gen.theta_pers)->capture_default_str();
  synth_cmd->add_option("--strength-cap", gen.strength_cap)
      ->capture_default_str();
  synth_cmd->add_option("--items", gen.num_items)->capture_default_str();
  synth_cmd->add_option("--ratings-per-user", gen.ratings_per_user)
      ->capture_default_str();
  synth_cmd->add_option("--seed", gen.seed)->capture_default_str();

  RunAllConfig run_cfg;
  std::string run_out, run_table, run_manifest, strength_ks = "10,30,50",
                                                 personality_ks = "20,30,50";
  auto* run_cmd =
      app.add_subcommand("run-all", "run every analysis and write a report");
  data.add_to(run_cmd);
  run_cmd->add_option("--out", run_out, "report JSON (default stdout)");
  run_cmd->add_option("--table", run_table, "flat TSV table for plotting");
  run_cmd->add_option("--manifest", run_manifest,
                      "run manifest JSON (checksums, timestamp)");
  run_cmd->add_option("--seed", run_cfg.seed)->capture_default_str();
  run_cmd->add_option("--alpha", run_cfg.alpha)->capture_default_str();
  run_cmd->add_option("--attempts", run_cfg.sampling_attempts)
      ->capture_default_str();
  run_cmd->add_option("--threads", run_cfg.threads, "worker threads")
      ->capture_default_str();
  run_cmd->add_option("--strength-k", strength_ks, "comma-separated K values")
      ->capture_default_str();
  run_cmd->add_option("--personality-k", personality_ks,
                      "comma-separated K values")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(ErrorCategory::kInvalidArgument);
  }

  try {
    if (*ingest_cmd) {
      const auto ds = ingest(data.paths());
      std::cout << dump(to_json(ds.report));
      for (const auto& w : ds.report.warnings)
        std::cerr << "warning: " << w << '\n';
    } else if (*stats_cmd) {
      const auto ds = ingest(data.paths());
      std::cout << dump(to_json(compute_stats(ds.network, ds.emotions)));
    } else if (*pers_cmd) {
      const auto ds = ingest(data.paths());
      const auto scores = scores_for(ds, parse_source(pers_source));
      std::string out = "user\toptimism\tpessimism\toh\tol\tpl\tph\n";
      for (UserId i = 0; i < scores.size(); ++i) {
        auto o = scores.optimism(i);
        auto p = scores.pessimism(i);
        out += ds.users.name(i) + '\t' + (o ? format_double(*o) : "NA") +
               '\t' + (p ? format_double(*p) : "NA") + '\t' +
               std::to_string(scores.oh[i]) + '\t' +
               std::to_string(scores.ol[i]) + '\t' +
               std::to_string(scores.pl[i]) + '\t' +
               std::to_string(scores.ph[i]) + '\n';
      }
      write_text(pers_out, out);
    } else if (*test_cmd) {
      const auto pipeline = pipeline_from_name(test_pipeline);
      test_cfg.sign = parse_sign(test_sign);
      if (!test_k_set)
        test_cfg.k = pipeline == Pipeline::kPersonality ? 20 : 10;
      const auto ds = ingest(data.paths());
      HypothesisReport rep;
      switch (pipeline) {
        case Pipeline::kEmotionExistence:
          rep = emotion_existence_test(ds.network, ds.emotions, test_cfg);
          break;
        case Pipeline::kEmotionStrength:
          rep = emotion_strength_test(ds.network, ds.emotions, test_cfg);
          break;
        case Pipeline::kDiffusion:
          rep = diffusion_test(ds.network, test_cfg);
          break;
        case Pipeline::kPersonality:
          rep = personality_test(
              ds.network, scores_for(ds, parse_source(test_source)), test_cfg);
          break;
      }
      std::cout << dump(to_json(rep));
    } else if (*triads_cmd) {
      const auto ds = ingest(data.paths());
      std::cout << dump(to_json(triad_census(ds.network)));
    } else if (*synth_cmd) {
      const auto synth = generate(gen);
      write_dataset(dataset_from_synthetic(synth), synth_out);
      write_text((fs::path(synth_out) / "truth.json").string(),
                 dump(truth_json(gen, synth.truth)));
      std::cout << dump(to_json(compute_stats(synth.network, synth.emotions)));
    } else if (*run_cmd) {
      run_cfg.strength_ks = parse_k_list(strength_ks);
      run_cfg.personality_ks = parse_k_list(personality_ks);
      const auto paths = data.paths();
      const auto ds = ingest(paths);
      const auto result = run_all(ds, run_cfg);
      const std::string report = dump(result.report);
      write_text(run_out, report);
      if (!run_table.empty()) write_text(run_table, result.table);
      if (!run_manifest.empty()) {
        Json inputs = Json::array();
        for (const auto& f : ds.report.files)
          inputs.push_back({{"path", f.path}, {"sha256", f.sha256}});
        Json args = Json::array();
        for (int a = 1; a < argc; ++a) args.push_back(argv[a]);
        Json manifest = {
            {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
            {"createdUtc", utc_now()},
            {"arguments", args},
            {"seed", run_cfg.seed},
            {"threads", run_cfg.threads},
            {"inputs", inputs},
            {"reportSha256", sha256_hex(report)}};
        write_text(run_manifest, dump(manifest));
      }
    }
  } catch (const Error& e) {
    std::cerr << Json{{"error",
                       {{"category", category_name(e.category())},
                        {"message", e.what()}}}}
                     .dump()
              << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", {{"category", "internal"}, {"message", e.what()}}}}
                     .dump()
              << '\n';
    return 1;
  }
  return 0;
}
