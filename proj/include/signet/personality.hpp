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
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "signet/emotion.hpp"
#include "signet/signed_network.hpp"

namespace signet {

using ItemId = std::uint32_t;

/// Frozen user x item ratings on the 1..5 scale; absence means unrated.
class RatingTable {
 public:
  struct Entry {
    ItemId item;
    std::uint8_t score;
    bool operator==(const Entry&) const = default;
  };

  RatingTable() : offsets_(1, 0) {}
  RatingTable(std::size_t num_users, std::size_t num_items,
              std::vector<std::uint64_t> offsets, std::vector<Entry> entries);

  std::size_t num_users() const { return offsets_.size() - 1; }
  std::size_t num_items() const { return num_items_; }
  std::size_t num_ratings() const { return entries_.size(); }

  /// Ratings by user i, sorted by item.
  std::span<const Entry> row(UserId i) const {
    return {entries_.data() + offsets_[i],
            static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }
  /// 0 when unrated.
  int at(UserId i, ItemId k) const;

  bool operator==(const RatingTable&) const = default;

 private:
  std::size_t num_items_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<Entry> entries_;
};

/// At most one rating per (user, item); a repeat overwrites and is tallied.
class RatingTableBuilder {
 public:
  void set(UserId user, ItemId item, int score);
  std::size_t overwrite_count() const { return overwrites_; }
  RatingTable freeze(std::size_t num_users, std::size_t num_items) const;

 private:
  std::unordered_map<std::uint64_t, std::uint8_t> ratings_;
  std::size_t overwrites_ = 0;
};

/// Per-item rating sums and rater counts. Averages are kept as exact
/// rationals so the "<= 3" / "> 3" split never depends on rounding.
struct ItemAverages {
  std::vector<std::uint64_t> sum;
  std::vector<std::uint32_t> raters;

  bool defined(ItemId k) const { return raters[k] > 0; }
  std::optional<double> average(ItemId k) const;
  bool low(ItemId k) const { return defined(k) && sum[k] <= 3ull * raters[k]; }
  bool high(ItemId k) const { return defined(k) && sum[k] > 3ull * raters[k]; }
};

ItemAverages item_averages(const RatingTable& r);

/// Optimism o_i = |OH_i| / |OL_i| and pessimism p_i = |PL_i| / |PH_i|.
/// A score is undefined when its denominator is zero.
struct PersonalityScores {
  std::vector<std::uint32_t> oh, ol, pl, ph;

  std::size_t size() const { return ol.size(); }
  std::optional<double> optimism(UserId i) const;
  std::optional<double> pessimism(UserId i) const;
  /// Optimism for kPositive, pessimism for kNegative.
  std::optional<double> score(UserId i, Sign s) const {
    return s == Sign::kPositive ? optimism(i) : pessimism(i);
  }
  std::size_t num_defined(Sign s) const;

  bool operator==(const PersonalityScores&) const = default;
};

/// Rating-based scores. OL_i holds items rated by i with average <= 3, OH_i
/// those of OL_i that i rated > 3; PH_i holds items rated by i with average
/// > 3, PL_i those of PH_i that i rated <= 3.
PersonalityScores rating_based_scores(const RatingTable& r);

/// Means over stored (nonzero) emotion entries, globally and per recipient.
struct EmotionAverages {
  std::uint64_t total_p = 0, nnz_p = 0;
  std::uint64_t total_n = 0, nnz_n = 0;

  std::optional<double> global_p() const;
  std::optional<double> global_n() const;
};

EmotionAverages emotion_averages(const EmotionMatrices& emo);

/// Emotion-based scores. OL_i = { j : P_ij > 0 and mean N received by j
/// exceeds the global N mean }; OH_i = { k in OL_i : P_ik > mean P received
/// by k }. PH_i / PL_i mirror this with P and N exchanged. All comparisons
/// are exact integer cross-multiplications.
PersonalityScores emotion_based_scores(const EmotionMatrices& emo);

}  // namespace signet
