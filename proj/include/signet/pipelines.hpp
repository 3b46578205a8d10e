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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signet/emotion.hpp"
#include "signet/personality.hpp"
#include "signet/signed_network.hpp"
#include "signet/ttest.hpp"

namespace signet {

enum class Pipeline {
  kEmotionExistence,
  kEmotionStrength,
  kDiffusion,
  kPersonality,
};

/// EMO_EXIST, EMO_STRENGTH, DIFFUSION, PERSONALITY.
std::string_view pipeline_name(Pipeline p);
Pipeline pipeline_from_name(std::string_view name);

struct PipelineConfig {
  Sign sign = Sign::kPositive;
  int k = 10;  // group count for the ranked tests
  double alpha = 0.01;
  std::uint64_t seed = 0;
  int sampling_attempts = 100;  // rejection-sampling retries per control

  /// Throws kInvalidArgument unless k >= 2, 0 < alpha < 1, attempts >= 1.
  void validate() const;
  bool operator==(const PipelineConfig&) const = default;
};

/// The two vectors handed to the t-test plus sampling bookkeeping.
struct Samples {
  std::vector<double> first;   // observed / higher-ranked side
  std::vector<double> second;  // control / lower-ranked side
  std::size_t candidates = 0;  // pairs, triples or groups examined
  std::size_t skipped = 0;     // observations dropped on sampling exhaustion
};

struct SampleSummary {
  std::string label;
  std::size_t size = 0;
  double mean = 0;
};

struct HypothesisReport {
  Pipeline pipeline = Pipeline::kEmotionExistence;
  PipelineConfig config;
  stats::TestResult result;
  SampleSummary first;
  SampleSummary second;
  std::size_t candidates = 0;
  std::size_t skipped = 0;
  std::string conclusion;
};

/// Pairs with an emotion of the configured sign versus random controls
/// without one. Each observed (i, j) contributes [F_ij = sign]; a control k
/// drawn uniformly with no same-sign emotion from i contributes
/// [F_ik = sign]. An exhausted draw drops the pair from both vectors.
Samples emotion_existence_samples(const SignedNetwork& net,
                                  const EmotionMatrices& emo,
                                  const PipelineConfig& cfg);
HypothesisReport emotion_existence_test(const SignedNetwork& net,
                                        const EmotionMatrices& emo,
                                        const PipelineConfig& cfg);

/// Same-sign emotion pairs ranked by strength into K equal groups; h and l
/// hold the linked-pair counts of the stronger and weaker group of every
/// group pair.
Samples emotion_strength_samples(const SignedNetwork& net,
                                 const EmotionMatrices& emo,
                                 const PipelineConfig& cfg);
HypothesisReport emotion_strength_test(const SignedNetwork& net,
                                       const EmotionMatrices& emo,
                                       const PipelineConfig& cfg);

/// Triples i ->(+) k ->(sign) j, j != i, contribute [F_ij = sign]; a
/// control r not in {i, k} with F_kr != sign contributes [F_ir = sign].
Samples diffusion_samples(const SignedNetwork& net, const PipelineConfig& cfg);
HypothesisReport diffusion_test(const SignedNetwork& net,
                                const PipelineConfig& cfg);

/// Users with a defined optimism (sign +1) or pessimism (sign -1) score,
/// ranked into K equal levels; h and l hold the outgoing same-sign link
/// counts of the higher and lower level of every level pair.
Samples personality_samples(const SignedNetwork& net,
                            const PersonalityScores& scores,
                            const PipelineConfig& cfg);
HypothesisReport personality_test(const SignedNetwork& net,
                                  const PersonalityScores& scores,
                                  const PipelineConfig& cfg);

/// Ranking key: larger value first, then smaller index.
struct RankedItem {
  double value;
  std::uint64_t index;
};

/// Sorts descending and cuts the first K * floor(m / K) items into K
/// consecutive equal groups; the remainder is dropped. Returns the indices
/// per group. Throws kInsufficientData when m < K.
std::vector<std::vector<std::uint64_t>> rank_into_groups(
    std::vector<RankedItem> items, int k);

/// For every group pair a < b, appends group_values[a] to first and
/// group_values[b] to second.
void append_group_pairs(std::span<const double> group_values, Samples& out);

}  // namespace signet
