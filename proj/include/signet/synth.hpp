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
#include <vector>

#include "signet/emotion.hpp"
#include "signet/personality.hpp"
#include "signet/signed_network.hpp"

namespace signet {

/// Parameters of the planted-effect generator. With every theta at zero the
/// links are independent of emotions, of other links and of personality.
struct GeneratorConfig {
  std::uint32_t num_users = 2000;
  double link_density = 0.005;           // baseline P(link) per ordered pair
  double positive_link_fraction = 0.85;  // baseline share of positive links
  double emotion_density = 0.01;         // P(emotion) per ordered pair
  double controversial_fraction = 0.2;   // users who attract mixed emotions
  double positive_emotion_share = 0.85;  // P vs N toward ordinary users
  double controversial_positive_share = 0.5;
  double mean_extra_strength = 1.0;  // mean emotion count - 1 at trait 0.5
  std::uint32_t strength_cap = 4;    // emotion boost saturates at this count

  double theta_emo = 0.0;   // same-sign link boost, scaled by strength
  double theta_diff = 0.0;  // imitation of a friend's link
  double theta_pers = 0.0;  // relative link boost per unit of latent trait

  double optimism_low = 0.0, optimism_high = 1.0;
  double pessimism_low = 0.0, pessimism_high = 1.0;

  std::uint32_t num_items = 200;
  std::uint32_t ratings_per_user = 20;

  std::uint64_t seed = 1;

  /// Throws kInvalidArgument on an invalid setting.
  void validate() const;
};

/// Latent variables and realized tallies of one generator run.
struct GroundTruth {
  std::vector<double> optimism;
  std::vector<double> pessimism;
  std::vector<char> controversial;
  std::vector<char> item_low;  // item drawn as a low-quality item

  // Tallied while generating, independently of the frozen structures.
  std::uint64_t positive_links = 0;
  std::uint64_t negative_links = 0;
  std::uint64_t positive_emotions = 0;
  std::uint64_t negative_emotions = 0;

  // First pass (emotion and personality boosts, before imitation).
  std::uint64_t base_links = 0;
  double expected_base_links = 0;  // sum of per-pair link probabilities
  double base_link_variance = 0;   // sum of p (1 - p)

  std::uint64_t emotion_boosted_pairs = 0;
  std::uint64_t diffusion_candidates = 0;
  std::uint64_t diffusion_links = 0;

  std::uint64_t clipped_pairs = 0;  // pairs whose probabilities were rescaled
  double clip_rate = 0;             // clipped_pairs / (n (n - 1))
};

struct SyntheticData {
  SignedNetwork network;
  EmotionMatrices emotions;
  RatingTable ratings;
  GroundTruth truth;
};

/// Draws latent traits, emotions, links and ratings.
///
/// Link probabilities for an ordered pair (i, j):
///   P(+1) = d * (f + theta_pers * o_i) + theta_emo * w(P_ij)
///   P(-1) = d * (1 - f + theta_pers * p_i) + theta_emo * w(N_ij)
/// with w(c) = min(c, cap) / cap, rescaled when they sum above 1. A second
/// pass gives every still-unlinked pair reached through a positive friend k
/// an extra link of k's sign with probability theta_diff. Optimists rate
/// low-quality items high and pessimists rate high-quality items low.
///
/// Every random decision reads a stream keyed by (seed, purpose, user), so
/// output is identical across runs and platforms for a fixed seed.
SyntheticData generate(const GeneratorConfig& cfg);

}  // namespace signet
