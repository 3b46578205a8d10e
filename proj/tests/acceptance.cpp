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

// Acceptance suite. Prints one PASS/FAIL line per criterion (indented lines
// are detail) and exits nonzero if any criterion fails.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "signet/io.hpp"
#include "signet/parallel.hpp"
#include "signet/pipelines.hpp"
#include "signet/report.hpp"
#include "signet/synth.hpp"
#include "signet/triads.hpp"
#include "signet/ttest.hpp"

using namespace signet;

namespace {

// Pinned thresholds.
constexpr int kPowerSeeds = 100;
constexpr int kPowerMinRejections = 95;
constexpr double kPowerAlpha = 0.01;
constexpr double kPlantedTheta = 0.3;
constexpr double kPowerBudgetSeconds = 300.0;

constexpr int kNullSeeds = 200;
constexpr double kNullAlpha = 0.05;
constexpr double kNullLow = 0.02;
constexpr double kNullHigh = 0.09;

constexpr double kTailRelTol = 1e-9;
constexpr double kExtremeDf = 1e5;
constexpr double kExtremeT = 50.0;
// log10 P(T > 50) at df = 1e5, from 40-digit arithmetic.
constexpr double kExtremeLog10 = -538.2861422211641800414640970297279731882;
constexpr double kExtremeRelTol = 1e-10;

constexpr int kPersonalityFixtures = 1000;
constexpr int kTriadGraphs = 100;
constexpr int kDeterminismUsers = 2000;

constexpr int kStrengthK = 10;
constexpr int kPersonalityK = 20;
const int kRobustKs[] = {20, 30, 50};

unsigned g_threads = 1;
int g_failures = 0;

void verdict(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s  %-22s %s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

void note(const std::string& s) {
  std::printf("      %s\n", s.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

enum class Mechanism { kEmotion, kDiffusion, kPersonality, kNone };

SyntheticData world(Mechanism m, std::uint64_t seed) {
  GeneratorConfig g;  // n = 2000, link density 0.005, emotion density 0.01
  g.seed = seed;
  if (m == Mechanism::kEmotion) g.theta_emo = kPlantedTheta;
  if (m == Mechanism::kDiffusion) g.theta_diff = kPlantedTheta;
  if (m == Mechanism::kPersonality) g.theta_pers = kPlantedTheta;
  return generate(g);
}

// One tested variant: pipeline, sign, K and score source.
struct Variant {
  std::string name;
  Pipeline pipeline;
  Sign sign;
  int k = 0;
  bool emotion_scores = false;
};

bool rejects(const SyntheticData& d, const Variant& v, double alpha,
             std::uint64_t seed) {
  PipelineConfig c;
  c.sign = v.sign;
  c.alpha = alpha;
  c.seed = seed;
  if (v.k) c.k = v.k;
  try {
    switch (v.pipeline) {
      case Pipeline::kEmotionExistence:
        return emotion_existence_test(d.network, d.emotions, c).result.rejected;
      case Pipeline::kEmotionStrength:
        return emotion_strength_test(d.network, d.emotions, c).result.rejected;
      case Pipeline::kDiffusion:
        return diffusion_test(d.network, c).result.rejected;
      case Pipeline::kPersonality:
        return personality_test(d.network,
                                v.emotion_scores
                                    ? emotion_based_scores(d.emotions)
                                    : rating_based_scores(d.ratings),
                                c)
            .result.rejected;
    }
  } catch (const Error& e) {
    note(fmt("%s seed %llu: %s", v.name.c_str(),
             static_cast<unsigned long long>(seed), e.what()));
  }
  return false;
}

std::vector<Variant> variants(bool with_emotion_scores) {
  std::vector<Variant> out;
  for (Sign s : {Sign::kPositive, Sign::kNegative}) {
    const char* sg = s == Sign::kPositive ? "+1" : "-1";
    out.push_back({fmt("EMO_EXIST %s", sg), Pipeline::kEmotionExistence, s});
    out.push_back({fmt("EMO_STRENGTH %s K=%d", sg, kStrengthK),
                   Pipeline::kEmotionStrength, s, kStrengthK});
    out.push_back({fmt("DIFFUSION %s", sg), Pipeline::kDiffusion, s});
    out.push_back({fmt("PERSONALITY %s K=%d rating", sg, kPersonalityK),
                   Pipeline::kPersonality, s, kPersonalityK});
    if (with_emotion_scores)
      out.push_back({fmt("PERSONALITY %s K=%d emotion", sg, kPersonalityK),
                     Pipeline::kPersonality, s, kPersonalityK, true});
  }
  return out;
}

Mechanism mechanism_of(Pipeline p) {
  switch (p) {
    case Pipeline::kEmotionExistence:
    case Pipeline::kEmotionStrength:
      return Mechanism::kEmotion;
    case Pipeline::kDiffusion:
      return Mechanism::kDiffusion;
    case Pipeline::kPersonality:
      return Mechanism::kPersonality;
  }
  return Mechanism::kNone;
}

void power_and_k_robustness() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto vs = variants(false);
  std::vector<Variant> robust;
  for (int k : kRobustKs)
    for (Sign s : {Sign::kPositive, Sign::kNegative})
      robust.push_back({fmt("PERSONALITY %s K=%d rating",
                            s == Sign::kPositive ? "+1" : "-1", k),
                        Pipeline::kPersonality, s, k});

  std::vector<std::atomic<int>> hits(vs.size());
  std::vector<std::atomic<int>> robust_hits(robust.size());
  const Mechanism mechs[] = {Mechanism::kEmotion, Mechanism::kDiffusion,
                             Mechanism::kPersonality};
  parallel_for(3 * kPowerSeeds, g_threads, [&](std::size_t job) {
    const Mechanism m = mechs[job / kPowerSeeds];
    const auto seed = 1 + job % kPowerSeeds;
    const auto d = world(m, seed);
    for (std::size_t v = 0; v < vs.size(); ++v)
      if (mechanism_of(vs[v].pipeline) == m)
        hits[v] += rejects(d, vs[v], kPowerAlpha, seed);
    if (m == Mechanism::kPersonality)
      for (std::size_t v = 0; v < robust.size(); ++v)
        robust_hits[v] += rejects(d, robust[v], kPowerAlpha, seed);
  });
  const double elapsed = seconds_since(t0);

  bool ok = true;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    note(fmt("%-28s %3d/%d rejected at alpha %.2f", vs[v].name.c_str(),
             hits[v].load(), kPowerSeeds, kPowerAlpha));
    ok = ok && hits[v] >= kPowerMinRejections;
  }
  verdict(ok, "power",
          fmt("each variant >= %d/%d at theta %.1f, n 2000",
              kPowerMinRejections, kPowerSeeds, kPlantedTheta));
  verdict(elapsed < kPowerBudgetSeconds, "power-runtime",
          fmt("%.1f s for %d generated datasets (budget %.0f s, %u threads)",
              elapsed, 3 * kPowerSeeds, kPowerBudgetSeconds, g_threads));

  bool robust_ok = true;
  for (std::size_t v = 0; v < robust.size(); ++v) {
    note(fmt("%-28s %3d/%d rejected at alpha %.2f", robust[v].name.c_str(),
             robust_hits[v].load(), kPowerSeeds, kPowerAlpha));
    robust_ok = robust_ok && robust_hits[v] >= kPowerMinRejections;
  }
  verdict(robust_ok, "k-robustness",
          fmt("planted personality effect detected for K in {20, 30, 50} in "
              ">= %d/%d runs",
              kPowerMinRejections, kPowerSeeds));
}

void calibration() {
  const auto vs = variants(true);
  std::vector<std::atomic<int>> hits(vs.size());
  parallel_for(kNullSeeds, g_threads, [&](std::size_t job) {
    const auto seed = 1 + job;
    const auto d = world(Mechanism::kNone, seed);
    for (std::size_t v = 0; v < vs.size(); ++v)
      hits[v] += rejects(d, vs[v], kNullAlpha, seed);
  });
  bool ok = true;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const double rate = static_cast<double>(hits[v]) / kNullSeeds;
    const bool in = rate >= kNullLow && rate <= kNullHigh;
    note(fmt("%-28s rate %.3f %s", vs[v].name.c_str(), rate,
             in ? "" : "(outside band)"));
    ok = ok && in;
  }
  verdict(ok, "calibration",
          fmt("null rejection rate at alpha %.2f over %d seeds in [%.2f, %.2f]",
              kNullAlpha, kNullSeeds, kNullLow, kNullHigh));
}

void t_numerics() {
  double worst = 0;
  for (double df : {1.0, 2.0, 5.0, 10.0, 30.0, 100.0})
    for (int k = -20; k <= 20; ++k) {
      const double t = 0.5 * k;
      const double q = static_cast<double>(std::exp(oracle::log_t_tail(t, df)));
      worst = std::max(worst,
                       std::fabs(stats::student_t_upper_tail(t, df) - q) / q);
    }
  verdict(worst <= kTailRelTol, "t-numerics-grid",
          fmt("max relative error %.3g vs quadrature (tolerance %.0e)", worst,
              kTailRelTol));

  bool finite = true;
  for (int k = -100; k <= 100; ++k)
    finite = finite &&
             std::isfinite(stats::log_student_t_upper_tail(0.5 * k, kExtremeDf));
  const double l10 =
      stats::log_student_t_upper_tail(kExtremeT, kExtremeDf) / std::log(10.0);
  const double q10 = static_cast<double>(
      oracle::log_t_tail(kExtremeT, kExtremeDf) / std::log(10.0L));
  const double err = std::fabs(l10 - kExtremeLog10) / std::fabs(kExtremeLog10);
  const double qerr = std::fabs(l10 - q10) / std::fabs(q10);
  verdict(finite && err <= kExtremeRelTol && qerr <= kTailRelTol,
          "t-numerics-log-space",
          fmt("log10 P(T > 50 | df 1e5) = %.10f (reference %.10f); all "
              "|t| <= 50 finite: %s",
              l10, kExtremeLog10, finite ? "yes" : "no"));
}

void personality_exactness() {
  int mismatches = 0;
  for (int s = 1; s <= kPersonalityFixtures; ++s) {
    const auto rf = oracle::rating_fixture(static_cast<std::uint64_t>(s));
    mismatches += !oracle::same_scores(
        rating_based_scores(rf.table), oracle::rating_sets(rf.grid, rf.num_items));
    const auto ef = oracle::emotion_fixture(static_cast<std::uint64_t>(s));
    mismatches += !oracle::same_scores(emotion_based_scores(ef.emo),
                                       oracle::emotion_sets(ef.p, ef.n));
  }
  // Hand fixture: user 0 rates three low-average items 4, 5, 2.
  RatingTableBuilder b;
  const int rows[][3] = {{0, 0, 4}, {0, 1, 5}, {0, 2, 2}, {1, 0, 1}, {1, 1, 1},
                         {1, 2, 1}, {2, 0, 1}, {2, 1, 1}, {2, 2, 3}};
  for (const auto& r : rows)
    b.set(static_cast<UserId>(r[0]), static_cast<ItemId>(r[1]), r[2]);
  const auto o = rating_based_scores(b.freeze(3, 3)).optimism(0);
  const bool hand = o && *o == 2.0 / 3.0;
  verdict(mismatches == 0 && hand, "personality-exactness",
          fmt("%d mismatches over %d rating + %d emotion fixtures; hand "
              "fixture o = %s",
              mismatches, kPersonalityFixtures, kPersonalityFixtures,
              o ? fmt("%.17g", *o).c_str() : "undefined"));
}

void triads() {
  int mismatches = 0;
  for (int g = 1; g <= kTriadGraphs; ++g) {
    RandomStream rng(static_cast<std::uint64_t>(g) * 7919);
    const auto n = static_cast<UserId>(3 + rng.below(48));  // 3..50
    const double p = 0.02 + 0.5 * rng.uniform();
    const auto net = oracle::random_network(static_cast<std::uint64_t>(g), n, p);
    mismatches += !(triad_census(net) == oracle::triads(net));
  }
  int rule = 0;
  const Sign P = Sign::kPositive, N = Sign::kNegative;
  for (Sign a : {P, N})
    for (Sign b : {P, N})
      for (Sign c : {P, N})
        rule += classify_triad(a, b, c).balanced ==
                (to_int(a) * to_int(b) * to_int(c) == 1);
  const bool figure = classify_triad(P, P, P).balanced &&
                      classify_triad(P, N, N).balanced;
  verdict(mismatches == 0 && rule == 8 && figure, "triad-census",
          fmt("%d/%d graphs match the cubic oracle; %d/8 sign combinations "
              "follow the product rule; +++ and +-- balanced: %s",
              kTriadGraphs - mismatches, kTriadGraphs, rule,
              figure ? "yes" : "no"));
}

void determinism() {
  GeneratorConfig g;
  g.num_users = kDeterminismUsers;
  g.theta_emo = g.theta_diff = g.theta_pers = 0.1;
  g.seed = 2024;
  const auto ds = dataset_from_synthetic(generate(g));
  RunAllConfig cfg;
  cfg.seed = 99;
  cfg.threads = 1;
  const auto a = dump(run_all(ds, cfg).report);
  const auto b = dump(run_all(ds, cfg).report);
  cfg.threads = 8;
  const auto c = dump(run_all(ds, cfg).report);
  verdict(a == b && a == c, "determinism",
          fmt("report sha256 %s; rerun %s, 8 threads %s",
              sha256_hex(a).substr(0, 16).c_str(),
              a == b ? "identical" : "DIFFERS",
              a == c ? "identical" : "DIFFERS"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signet acceptance suite"};
  g_threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--threads", g_threads, "worker threads for seed sweeps");
  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  t_numerics();
  personality_exactness();
  triads();
  determinism();
  power_and_k_robustness();
  calibration();
  std::printf("%d criterion line(s) failed; total %.1f s\n", g_failures,
              seconds_since(t0));
  return g_failures ? 1 : 0;
}
