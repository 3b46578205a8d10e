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

#include "signet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "signet/error.hpp"
#include "signet/rng.hpp"

namespace signet {

namespace {

enum StreamPurpose : std::uint64_t {
  kLatent = 0x10,
  kEmotions = 0x20,
  kBaseLinks = 0x30,
  kEmotionLinks = 0x40,
  kImitation = 0x50,
  kItems = 0x60,
  kRatings = 0x70,
};

// Share of ratings that go against the item's quality at full trait.
// At 0.4 a low item averages at most 3.0 and a high item at least 3.5.
constexpr double kAgainstTheGrain = 0.4;

bool in_unit_open(double v) { return v > 0.0 && v < 1.0; }
bool in_unit_closed(double v) { return v >= 0.0 && v <= 1.0; }

struct PairProbs {
  double pos;
  double neg;
};

// Rescales so pos + neg <= 1; reports whether it had to.
bool clip(PairProbs& p) {
  const double sum = p.pos + p.neg;
  if (sum <= 1.0) return false;
  p.pos /= sum;
  p.neg /= sum;
  return true;
}

int draw_sign(RandomStream& rng, const PairProbs& p) {
  const double u = rng.uniform();
  if (u < p.pos) return 1;
  if (u < p.pos + p.neg) return -1;
  return 0;
}

// Emotion count: 1 + Geometric with mean `extra`.
std::uint32_t draw_strength(RandomStream& rng, double extra) {
  if (extra <= 0.0) return 1;
  const auto g = rng.geometric(1.0 / (1.0 + extra));
  return 1 + static_cast<std::uint32_t>(std::min<std::uint64_t>(g, 1u << 20));
}

struct EmotionRow {
  std::vector<std::pair<UserId, std::uint32_t>> p, n;
};

}  // namespace

void GeneratorConfig::validate() const {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCategory::kInvalidArgument, "generator config: " + msg);
  };
  if (num_users < 2) fail("num_users must be at least 2");
  if (!in_unit_open(link_density)) fail("link_density must be in (0, 1)");
  if (!in_unit_open(emotion_density)) fail("emotion_density must be in (0, 1)");
  for (double v : {positive_link_fraction, controversial_fraction,
                   positive_emotion_share, controversial_positive_share})
    if (!in_unit_closed(v)) fail("fractions and shares must be in [0, 1]");
  if (!(mean_extra_strength >= 0.0)) fail("mean_extra_strength must be >= 0");
  if (strength_cap < 1) fail("strength_cap must be at least 1");
  for (double t : {theta_emo, theta_diff, theta_pers})
    if (!(t >= 0.0) || !std::isfinite(t)) fail("theta values must be >= 0");
  if (!in_unit_closed(optimism_low) || !in_unit_closed(optimism_high) ||
      optimism_low > optimism_high)
    fail("optimism range must satisfy 0 <= low <= high <= 1");
  if (!in_unit_closed(pessimism_low) || !in_unit_closed(pessimism_high) ||
      pessimism_low > pessimism_high)
    fail("pessimism range must satisfy 0 <= low <= high <= 1");
  if (num_items < 1) fail("num_items must be at least 1");
  if (ratings_per_user > num_items)
    fail("ratings_per_user cannot exceed num_items");
}

SyntheticData generate(const GeneratorConfig& cfg) {
  cfg.validate();
  const UserId n = cfg.num_users;
  SyntheticData out;
  GroundTruth& truth = out.truth;

  // Latent traits.
  truth.optimism.resize(n);
  truth.pessimism.resize(n);
  truth.controversial.resize(n);
  {
    RandomStream rng(cfg.seed, kLatent, 0);
    for (UserId i = 0; i < n; ++i) {
      truth.optimism[i] =
          cfg.optimism_low + (cfg.optimism_high - cfg.optimism_low) * rng.uniform();
      truth.pessimism[i] = cfg.pessimism_low +
                           (cfg.pessimism_high - cfg.pessimism_low) * rng.uniform();
      truth.controversial[i] = rng.bernoulli(cfg.controversial_fraction);
    }
  }
  std::vector<UserId> ordinary, controversial;
  for (UserId j = 0; j < n; ++j)
    (truth.controversial[j] ? controversial : ordinary).push_back(j);

  // Emotions. Controversial targets draw more and stronger negative
  // emotions and weaker positive ones.
  std::vector<EmotionRow> emo(n);
  std::vector<std::pair<std::uint64_t, std::uint32_t>> p_entries, n_entries;
  for (UserId i = 0; i < n; ++i) {
    RandomStream rng(cfg.seed, kEmotions, i);
    auto sweep = [&](const std::vector<UserId>& targets, double prob,
                     double extra,
                     std::vector<std::pair<UserId, std::uint32_t>>& row) {
      std::uint64_t pos = rng.geometric(prob);
      while (pos < targets.size()) {
        const UserId j = targets[pos];
        if (j != i) row.emplace_back(j, draw_strength(rng, extra));
        pos += 1 + rng.geometric(prob);
      }
    };
    const double d = cfg.emotion_density;
    const double xp = cfg.mean_extra_strength * 2.0 * truth.optimism[i];
    const double xn = cfg.mean_extra_strength * 2.0 * truth.pessimism[i];
    auto& row = emo[i];
    sweep(ordinary, d * cfg.positive_emotion_share, xp, row.p);
    sweep(controversial, d * cfg.controversial_positive_share, 0.5 * xp,
          row.p);
    sweep(ordinary, d * (1.0 - cfg.positive_emotion_share), xn, row.n);
    sweep(controversial, d * (1.0 - cfg.controversial_positive_share),
          2.0 * xn, row.n);
    std::sort(row.p.begin(), row.p.end());
    std::sort(row.n.begin(), row.n.end());
    for (auto [j, c] : row.p) {
      p_entries.emplace_back((static_cast<std::uint64_t>(i) << 32) | j, c);
      truth.positive_emotions += c;
    }
    for (auto [j, c] : row.n) {
      n_entries.emplace_back((static_cast<std::uint64_t>(i) << 32) | j, c);
      truth.negative_emotions += c;
    }
  }
  out.emotions.positive = CountMatrix(n, std::move(p_entries));
  out.emotions.negative = CountMatrix(n, std::move(n_entries));

  // First link pass. Pairs without emotions share the per-row probability
  // and are drawn by geometric skipping; emotion pairs get one coupled
  // uniform each from their own stream, so raising theta_emo only ever
  // adds same-sign co-occurrences.
  const double cap = static_cast<double>(cfg.strength_cap);
  auto weight = [&](std::uint32_t c) {
    return std::min<double>(c, cap) / cap;
  };
  std::vector<std::vector<UserId>> pos(n), neg(n);
  for (UserId i = 0; i < n; ++i) {
    PairProbs row_p{cfg.link_density * cfg.positive_link_fraction +
                        cfg.link_density * cfg.theta_pers * truth.optimism[i],
                    cfg.link_density * (1.0 - cfg.positive_link_fraction) +
                        cfg.link_density * cfg.theta_pers * truth.pessimism[i]};
    const bool row_clipped = clip(row_p);

    // Union of emotion targets in row i, sorted, with both counts.
    struct Target {
      UserId j;
      std::uint32_t p, n;
    };
    std::vector<Target> targets;
    {
      const auto& rp = emo[i].p;
      const auto& rn = emo[i].n;
      std::size_t a = 0, b = 0;
      while (a < rp.size() || b < rn.size()) {
        if (b == rn.size() || (a < rp.size() && rp[a].first < rn[b].first)) {
          targets.push_back({rp[a].first, rp[a].second, 0});
          ++a;
        } else if (a == rp.size() || rn[b].first < rp[a].first) {
          targets.push_back({rn[b].first, 0, rn[b].second});
          ++b;
        } else {
          targets.push_back({rp[a].first, rp[a].second, rn[b].second});
          ++a;
          ++b;
        }
      }
    }

    const std::size_t plain = (n - 1) - targets.size();
    const double q = row_p.pos + row_p.neg;
    truth.expected_base_links += q * static_cast<double>(plain);
    truth.base_link_variance += q * (1.0 - q) * static_cast<double>(plain);
    if (row_clipped) truth.clipped_pairs += plain;

    if (q > 0.0) {
      RandomStream rng(cfg.seed, kBaseLinks, i);
      const double pos_share = row_p.pos / q;
      std::size_t t = 0;
      std::uint64_t j = rng.geometric(q);
      while (j < n) {
        while (t < targets.size() && targets[t].j < j) ++t;
        const bool skip =
            j == i || (t < targets.size() && targets[t].j == j);
        const bool positive = rng.uniform() < pos_share;
        if (!skip)
          (positive ? pos[i] : neg[i]).push_back(static_cast<UserId>(j));
        j += 1 + rng.geometric(q);
      }
    }

    RandomStream rng(cfg.seed, kEmotionLinks, i);
    for (const auto& tg : targets) {
      PairProbs pp{cfg.link_density * cfg.positive_link_fraction +
                       cfg.link_density * cfg.theta_pers * truth.optimism[i] +
                       cfg.theta_emo * (tg.p ? weight(tg.p) : 0.0),
                   cfg.link_density * (1.0 - cfg.positive_link_fraction) +
                       cfg.link_density * cfg.theta_pers * truth.pessimism[i] +
                       cfg.theta_emo * (tg.n ? weight(tg.n) : 0.0)};
      if (clip(pp)) ++truth.clipped_pairs;
      if (cfg.theta_emo > 0.0) ++truth.emotion_boosted_pairs;
      const double pq = pp.pos + pp.neg;
      truth.expected_base_links += pq;
      truth.base_link_variance += pq * (1.0 - pq);
      const int s = draw_sign(rng, pp);
      if (s > 0) pos[i].push_back(tg.j);
      if (s < 0) neg[i].push_back(tg.j);
    }
    std::sort(pos[i].begin(), pos[i].end());
    std::sort(neg[i].begin(), neg[i].end());
    truth.base_links += pos[i].size() + neg[i].size();
  }

  // Imitation pass over the first-pass links.
  if (cfg.theta_diff > 0.0) {
    std::vector<std::vector<UserId>> add_pos(n), add_neg(n);
    std::vector<std::int8_t> mark(n, 0);  // bit 1: via +, bit 2: via -
    std::vector<UserId> touched;
    for (UserId i = 0; i < n; ++i) {
      touched.clear();
      for (UserId k : pos[i]) {
        for (UserId j : pos[k]) {
          if (!mark[j]) touched.push_back(j);
          mark[j] |= 1;
        }
        for (UserId j : neg[k]) {
          if (!mark[j]) touched.push_back(j);
          mark[j] |= 2;
        }
      }
      std::sort(touched.begin(), touched.end());
      RandomStream rng(cfg.seed, kImitation, i);
      for (UserId j : touched) {
        const int m = mark[j];
        mark[j] = 0;
        if (j == i || std::binary_search(pos[i].begin(), pos[i].end(), j) ||
            std::binary_search(neg[i].begin(), neg[i].end(), j))
          continue;
        ++truth.diffusion_candidates;
        PairProbs pp{(m & 1) ? cfg.theta_diff : 0.0,
                     (m & 2) ? cfg.theta_diff : 0.0};
        if (clip(pp)) ++truth.clipped_pairs;
        const int s = draw_sign(rng, pp);
        if (s > 0) add_pos[i].push_back(j);
        if (s < 0) add_neg[i].push_back(j);
        if (s != 0) ++truth.diffusion_links;
      }
    }
    for (UserId i = 0; i < n; ++i) {
      pos[i].insert(pos[i].end(), add_pos[i].begin(), add_pos[i].end());
      neg[i].insert(neg[i].end(), add_neg[i].begin(), add_neg[i].end());
    }
  }

  std::vector<std::pair<UserId, UserId>> pos_pairs, neg_pairs;
  for (UserId i = 0; i < n; ++i) {
    for (UserId j : pos[i]) pos_pairs.emplace_back(i, j);
    for (UserId j : neg[i]) neg_pairs.emplace_back(i, j);
  }
  truth.positive_links = pos_pairs.size();
  truth.negative_links = neg_pairs.size();
  out.network = SignedNetwork(make_adjacency(n, std::move(pos_pairs)),
                              make_adjacency(n, std::move(neg_pairs)));
  truth.clip_rate = static_cast<double>(truth.clipped_pairs) /
                    (static_cast<double>(n) * (n - 1));

  // Ratings.
  truth.item_low.resize(cfg.num_items);
  {
    RandomStream rng(cfg.seed, kItems, 0);
    for (auto& low : truth.item_low) low = rng.bernoulli(0.5);
  }
  RatingTableBuilder ratings;
  std::unordered_set<ItemId> chosen;
  for (UserId i = 0; i < n; ++i) {
    RandomStream rng(cfg.seed, kRatings, i);
    // Floyd's sampling of ratings_per_user distinct items.
    chosen.clear();
    std::vector<ItemId> items;
    for (std::uint32_t r = cfg.num_items - cfg.ratings_per_user;
         r < cfg.num_items; ++r) {
      const auto v = static_cast<ItemId>(rng.below(r + 1));
      const ItemId pick = chosen.count(v) ? r : v;
      chosen.insert(pick);
      items.push_back(pick);
    }
    std::sort(items.begin(), items.end());
    for (ItemId k : items) {
      const bool low = truth.item_low[k];
      const double against =
          kAgainstTheGrain * (low ? truth.optimism[i] : truth.pessimism[i]);
      const bool rate_high = low == rng.bernoulli(against);
      const int score = rate_high ? 4 + static_cast<int>(rng.below(2))
                                  : 1 + static_cast<int>(rng.below(3));
      ratings.set(i, k, score);
    }
  }
  out.ratings = ratings.freeze(n, cfg.num_items);
  return out;
}

}  // namespace signet
