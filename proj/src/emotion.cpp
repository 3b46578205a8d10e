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

#include "signet/emotion.hpp"

#include <algorithm>
#include <string>

#include "signet/error.hpp"

namespace signet {

CountMatrix::CountMatrix(
    std::size_t dim,
    std::vector<std::pair<std::uint64_t, std::uint32_t>> entries)
    : offsets_(dim + 1, 0), col_total_(dim, 0), col_nnz_(dim, 0) {
  std::sort(entries.begin(), entries.end());
  cols_.reserve(entries.size());
  counts_.reserve(entries.size());
  for (const auto& [key, count] : entries) {
    const auto i = static_cast<UserId>(key >> 32);
    const auto j = static_cast<UserId>(key & 0xffffffffu);
    if (i >= dim || j >= dim)
      throw Error(ErrorCategory::kInvalidArgument,
                  "count entry outside matrix dimension");
    if (count == 0) continue;
    ++offsets_[i + 1];
    cols_.push_back(j);
    counts_.push_back(count);
    col_total_[j] += count;
    ++col_nnz_[j];
    total_ += count;
  }
  for (std::size_t r = 0; r < dim; ++r) offsets_[r + 1] += offsets_[r];
}

std::uint32_t CountMatrix::at(UserId i, UserId j) const {
  auto cols = row_cols(i);
  auto it = std::lower_bound(cols.begin(), cols.end(), j);
  if (it == cols.end() || *it != j) return 0;
  return row_counts(i)[static_cast<std::size_t>(it - cols.begin())];
}

CountMatrix CountMatrix::scaled(std::uint32_t factor) const {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
  entries.reserve(nnz());
  for (UserId i = 0; i < dim(); ++i) {
    auto cols = row_cols(i);
    auto counts = row_counts(i);
    for (std::size_t e = 0; e < cols.size(); ++e)
      entries.emplace_back((static_cast<std::uint64_t>(i) << 32) | cols[e],
                           counts[e] * factor);
  }
  return CountMatrix(dim(), std::move(entries));
}

void CountMatrixBuilder::add(UserId i, UserId j, std::uint32_t count) {
  if (count == 0) return;
  counts_[(static_cast<std::uint64_t>(i) << 32) | j] += count;
}

CountMatrix CountMatrixBuilder::freeze(std::size_t dim) const {
  return CountMatrix(dim, {counts_.begin(), counts_.end()});
}

int helpfulness_polarity(int score) {
  if (score < 1 || score > 6)
    throw Error(ErrorCategory::kInvalidArgument,
                "helpfulness score must be in [1, 6], got " +
                    std::to_string(score));
  if (score <= 2) return -1;
  if (score == 3) return 0;
  return 1;
}

EmotionBuild build_emotion_matrices(std::span<const EmotionEvent> events,
                                    std::size_t num_users) {
  EmotionBuild out;
  CountMatrixBuilder pos, neg;
  for (std::size_t idx = 0; idx < events.size(); ++idx) {
    const auto& ev = events[idx];
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorCategory::kInvalidArgument,
                  "emotion event " + std::to_string(idx) + ": " + msg);
    };
    if (ev.rater >= num_users || ev.ratee >= num_users)
      fail("user id out of range");
    if (ev.rater == ev.ratee) fail("self-directed emotion");

    int polarity = 0;
    if (const auto* score = std::get_if<HelpfulnessScore>(&ev.value)) {
      if (score->value < 1 || score->value > 6)
        fail("score " + std::to_string(score->value) + " outside [1, 6]");
      polarity = helpfulness_polarity(score->value);
      ++out.score_events;
    } else {
      polarity = to_int(std::get<Sign>(ev.value));
      ++out.polarity_events;
    }
    if (polarity > 0)
      pos.add(ev.rater, ev.ratee);
    else if (polarity < 0)
      neg.add(ev.rater, ev.ratee);
    else
      ++out.neutral_events;
  }
  out.matrices.positive = pos.freeze(num_users);
  out.matrices.negative = neg.freeze(num_users);
  return out;
}

DatasetStats compute_stats(const SignedNetwork& net,
                           const EmotionMatrices& emo) {
  if (net.num_users() != emo.positive.dim() ||
      net.num_users() != emo.negative.dim())
    throw Error(ErrorCategory::kInvalidArgument,
                "network and emotion matrices disagree on user count (" +
                    std::to_string(net.num_users()) + " vs " +
                    std::to_string(emo.positive.dim()) + "/" +
                    std::to_string(emo.negative.dim()) + ")");
  DatasetStats s;
  s.num_users = net.num_users();
  s.num_positive_links = net.num_positive_links();
  s.num_negative_links = net.num_negative_links();
  s.num_positive_emotions = emo.positive.total();
  s.num_negative_emotions = emo.negative.total();
  return s;
}

}  // namespace signet
