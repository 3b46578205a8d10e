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

#include "signet/pipelines.hpp"

#include <algorithm>
#include <numeric>

#include "signet/error.hpp"
#include "signet/rng.hpp"

namespace signet {

namespace {

// Stream purposes for control sampling. Independent of the sign so that
// the sign-flipped mirror of a dataset draws the same controls.
constexpr std::uint64_t kExistenceStream = 0x454d4f2d45584953ull;
constexpr std::uint64_t kDiffusionStream = 0x444946462d435452ull;

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

const char* sign_word(Sign s) {
  return s == Sign::kPositive ? "positive" : "negative";
}

std::string claim(Pipeline p, Sign s) {
  const std::string w = sign_word(s);
  switch (p) {
    case Pipeline::kEmotionExistence:
      return "users who express " + w + " emotions toward someone are more "
             "likely to create a " + w + " link to them than to users they "
             "show no such emotion";
    case Pipeline::kEmotionStrength:
      return "pairs with stronger " + w + " emotions carry " + w +
             " links more often than pairs with weaker " + w + " emotions";
    case Pipeline::kDiffusion:
      return "users tend to copy a friend's " + w +
             " link toward a third user";
    case Pipeline::kPersonality:
      return s == Sign::kPositive
                 ? "more optimistic users create more positive links than "
                   "less optimistic users"
                 : "more pessimistic users create more negative links than "
                   "less pessimistic users";
  }
  return {};
}

HypothesisReport finish(Pipeline p, const PipelineConfig& cfg, Samples s,
                        const char* first_label, const char* second_label) {
  HypothesisReport rep;
  rep.pipeline = p;
  rep.config = cfg;
  rep.candidates = s.candidates;
  rep.skipped = s.skipped;
  rep.first = {first_label, s.first.size(), mean_of(s.first)};
  rep.second = {second_label, s.second.size(), mean_of(s.second)};
  rep.result = stats::one_sided_test(s.first, s.second, cfg.alpha);
  rep.conclusion = (rep.result.rejected ? "supported: " : "not supported: ") +
                   claim(p, cfg.sign);
  return rep;
}

}  // namespace

std::string_view pipeline_name(Pipeline p) {
  switch (p) {
    case Pipeline::kEmotionExistence:
      return "EMO_EXIST";
    case Pipeline::kEmotionStrength:
      return "EMO_STRENGTH";
    case Pipeline::kDiffusion:
      return "DIFFUSION";
    case Pipeline::kPersonality:
      return "PERSONALITY";
  }
  return "UNKNOWN";
}

Pipeline pipeline_from_name(std::string_view name) {
  for (auto p : {Pipeline::kEmotionExistence, Pipeline::kEmotionStrength,
                 Pipeline::kDiffusion, Pipeline::kPersonality})
    if (pipeline_name(p) == name) return p;
  if (name == "emo-exist") return Pipeline::kEmotionExistence;
  if (name == "emo-strength") return Pipeline::kEmotionStrength;
  if (name == "diffusion") return Pipeline::kDiffusion;
  if (name == "personality") return Pipeline::kPersonality;
  throw Error(ErrorCategory::kInvalidArgument,
              "unknown pipeline '" + std::string(name) + "'");
}

void PipelineConfig::validate() const {
  if (k < 2)
    throw Error(ErrorCategory::kInvalidArgument, "K must be at least 2");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorCategory::kInvalidArgument, "alpha must be in (0, 1)");
  if (sampling_attempts < 1)
    throw Error(ErrorCategory::kInvalidArgument,
                "sampling attempts must be at least 1");
}

std::vector<std::vector<std::uint64_t>> rank_into_groups(
    std::vector<RankedItem> items, int k) {
  if (k < 2)
    throw Error(ErrorCategory::kInvalidArgument, "K must be at least 2");
  const std::size_t groups = static_cast<std::size_t>(k);
  if (items.size() < groups)
    throw Error(ErrorCategory::kInsufficientData,
                "insufficient pairs: " + std::to_string(items.size()) +
                    " ranked elements for K = " + std::to_string(k));
  std::sort(items.begin(), items.end(),
            [](const RankedItem& a, const RankedItem& b) {
              if (a.value != b.value) return a.value > b.value;
              return a.index < b.index;
            });
  const std::size_t size = items.size() / groups;
  std::vector<std::vector<std::uint64_t>> out(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    out[g].reserve(size);
    for (std::size_t e = g * size; e < (g + 1) * size; ++e)
      out[g].push_back(items[e].index);
  }
  return out;
}

void append_group_pairs(std::span<const double> group_values, Samples& out) {
  for (std::size_t a = 0; a < group_values.size(); ++a)
    for (std::size_t b = a + 1; b < group_values.size(); ++b) {
      out.first.push_back(group_values[a]);
      out.second.push_back(group_values[b]);
    }
}

Samples emotion_existence_samples(const SignedNetwork& net,
                                  const EmotionMatrices& emo,
                                  const PipelineConfig& cfg) {
  cfg.validate();
  const auto& m = emo.of(cfg.sign);
  if (m.dim() != net.num_users())
    throw Error(ErrorCategory::kInvalidArgument,
                "network and emotion matrices disagree on user count");
  if (m.nnz() < 2)
    throw Error(ErrorCategory::kInsufficientData,
                std::string("insufficient pairs: fewer than 2 ") +
                    sign_word(cfg.sign) + " emotion pairs");

  const std::size_t n = net.num_users();
  Samples s;
  s.first.reserve(m.nnz());
  s.second.reserve(m.nnz());
  for (UserId i = 0; i < n; ++i) {
    auto targets = m.row_cols(i);
    if (targets.empty()) continue;
    RandomStream rng(cfg.seed, kExistenceStream, i);
    for (UserId j : targets) {
      ++s.candidates;
      bool found = false;
      UserId control = 0;
      for (int a = 0; a < cfg.sampling_attempts; ++a) {
        const auto k = static_cast<UserId>(rng.below(n));
        if (k == i || m.at(i, k) != 0) continue;
        control = k;
        found = true;
        break;
      }
      if (!found) {
        ++s.skipped;
        continue;
      }
      s.first.push_back(net.has(i, j, cfg.sign) ? 1.0 : 0.0);
      s.second.push_back(net.has(i, control, cfg.sign) ? 1.0 : 0.0);
    }
  }
  if (s.first.empty())
    throw Error(ErrorCategory::kInsufficientData,
                "every observed pair was skipped: control sampling exhausted");
  return s;
}

HypothesisReport emotion_existence_test(const SignedNetwork& net,
                                        const EmotionMatrices& emo,
                                        const PipelineConfig& cfg) {
  return finish(Pipeline::kEmotionExistence, cfg,
                emotion_existence_samples(net, emo, cfg), "v_p", "v_r");
}

Samples emotion_strength_samples(const SignedNetwork& net,
                                 const EmotionMatrices& emo,
                                 const PipelineConfig& cfg) {
  cfg.validate();
  const auto& m = emo.of(cfg.sign);
  if (m.dim() != net.num_users())
    throw Error(ErrorCategory::kInvalidArgument,
                "network and emotion matrices disagree on user count");

  const std::uint64_t n = net.num_users();
  std::vector<RankedItem> items;
  items.reserve(m.nnz());
  for (UserId i = 0; i < n; ++i) {
    auto cols = m.row_cols(i);
    auto counts = m.row_counts(i);
    for (std::size_t e = 0; e < cols.size(); ++e)
      items.push_back({static_cast<double>(counts[e]), i * n + cols[e]});
  }
  const auto groups = rank_into_groups(std::move(items), cfg.k);

  Samples s;
  std::vector<double> linked(groups.size(), 0.0);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (auto key : groups[g]) {
      const auto i = static_cast<UserId>(key / n);
      const auto j = static_cast<UserId>(key % n);
      if (net.has(i, j, cfg.sign)) linked[g] += 1.0;
    }
    s.candidates += groups[g].size();
  }
  append_group_pairs(linked, s);
  return s;
}

HypothesisReport emotion_strength_test(const SignedNetwork& net,
                                       const EmotionMatrices& emo,
                                       const PipelineConfig& cfg) {
  return finish(Pipeline::kEmotionStrength, cfg,
                emotion_strength_samples(net, emo, cfg), "h", "l");
}

Samples diffusion_samples(const SignedNetwork& net, const PipelineConfig& cfg) {
  cfg.validate();
  const std::size_t n = net.num_users();
  Samples s;
  for (UserId i = 0; i < n; ++i) {
    auto friends = net.out(i, Sign::kPositive);
    if (friends.empty()) continue;
    RandomStream rng(cfg.seed, kDiffusionStream, i);
    for (UserId k : friends) {
      for (UserId j : net.out(k, cfg.sign)) {
        if (j == i) continue;
        ++s.candidates;
        bool found = false;
        UserId control = 0;
        for (int a = 0; a < cfg.sampling_attempts; ++a) {
          const auto r = static_cast<UserId>(rng.below(n));
          if (r == i || r == k || net.has(k, r, cfg.sign)) continue;
          control = r;
          found = true;
          break;
        }
        if (!found) {
          ++s.skipped;
          continue;
        }
        s.first.push_back(net.has(i, j, cfg.sign) ? 1.0 : 0.0);
        s.second.push_back(net.has(i, control, cfg.sign) ? 1.0 : 0.0);
      }
    }
  }
  if (s.candidates == 0)
    throw Error(ErrorCategory::kInsufficientData,
                std::string("no valid triples: no path i ->(+) k ->(") +
                    (cfg.sign == Sign::kPositive ? "+" : "-") + ") j");
  if (s.first.empty())
    throw Error(ErrorCategory::kInsufficientData,
                "every triple was skipped: control sampling exhausted");
  return s;
}

HypothesisReport diffusion_test(const SignedNetwork& net,
                                const PipelineConfig& cfg) {
  return finish(Pipeline::kDiffusion, cfg, diffusion_samples(net, cfg), "f_p",
                "f_r");
}

Samples personality_samples(const SignedNetwork& net,
                            const PersonalityScores& scores,
                            const PipelineConfig& cfg) {
  cfg.validate();
  if (scores.size() != net.num_users())
    throw Error(ErrorCategory::kInvalidArgument,
                "personality scores and network disagree on user count");
  std::vector<RankedItem> items;
  for (UserId i = 0; i < net.num_users(); ++i)
    if (auto v = scores.score(i, cfg.sign)) items.push_back({*v, i});
  const auto groups = rank_into_groups(std::move(items), cfg.k);

  Samples s;
  std::vector<double> links(groups.size(), 0.0);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (auto u : groups[g])
      links[g] += static_cast<double>(
          net.out_degree(static_cast<UserId>(u), cfg.sign));
    s.candidates += groups[g].size();
  }
  append_group_pairs(links, s);
  return s;
}

HypothesisReport personality_test(const SignedNetwork& net,
                                  const PersonalityScores& scores,
                                  const PipelineConfig& cfg) {
  return finish(Pipeline::kPersonality, cfg,
                personality_samples(net, scores, cfg), "h", "l");
}

}  // namespace signet
