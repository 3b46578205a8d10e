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

#include "signet/personality.hpp"

#include <algorithm>
#include <string>

#include "signet/error.hpp"

namespace signet {

RatingTable::RatingTable(std::size_t num_users, std::size_t num_items,
                         std::vector<std::uint64_t> offsets,
                         std::vector<Entry> entries)
    : num_items_(num_items),
      offsets_(std::move(offsets)),
      entries_(std::move(entries)) {
  if (offsets_.size() != num_users + 1)
    throw Error(ErrorCategory::kInvalidArgument, "bad rating offsets");
}

int RatingTable::at(UserId i, ItemId k) const {
  auto r = row(i);
  auto it = std::lower_bound(
      r.begin(), r.end(), k,
      [](const Entry& e, ItemId item) { return e.item < item; });
  if (it == r.end() || it->item != k) return 0;
  return it->score;
}

void RatingTableBuilder::set(UserId user, ItemId item, int score) {
  if (score < 1 || score > 5)
    throw Error(ErrorCategory::kInvalidArgument,
                "rating score must be in [1, 5], got " +
                    std::to_string(score));
  auto key = (static_cast<std::uint64_t>(user) << 32) | item;
  auto [it, inserted] =
      ratings_.try_emplace(key, static_cast<std::uint8_t>(score));
  if (!inserted) {
    ++overwrites_;
    it->second = static_cast<std::uint8_t>(score);
  }
}

RatingTable RatingTableBuilder::freeze(std::size_t num_users,
                                       std::size_t num_items) const {
  std::vector<std::pair<std::uint64_t, std::uint8_t>> sorted(ratings_.begin(),
                                                             ratings_.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint64_t> offsets(num_users + 1, 0);
  std::vector<RatingTable::Entry> entries;
  entries.reserve(sorted.size());
  for (const auto& [key, score] : sorted) {
    const auto user = static_cast<UserId>(key >> 32);
    const auto item = static_cast<ItemId>(key & 0xffffffffu);
    if (user >= num_users || item >= num_items)
      throw Error(ErrorCategory::kInvalidArgument,
                  "rating references user/item outside the table");
    ++offsets[user + 1];
    entries.push_back({item, score});
  }
  for (std::size_t u = 0; u < num_users; ++u) offsets[u + 1] += offsets[u];
  return RatingTable(num_users, num_items, std::move(offsets),
                     std::move(entries));
}

std::optional<double> ItemAverages::average(ItemId k) const {
  if (!defined(k)) return std::nullopt;
  return static_cast<double>(sum[k]) / raters[k];
}

ItemAverages item_averages(const RatingTable& r) {
  ItemAverages avg;
  avg.sum.assign(r.num_items(), 0);
  avg.raters.assign(r.num_items(), 0);
  for (UserId i = 0; i < r.num_users(); ++i) {
    for (const auto& e : r.row(i)) {
      avg.sum[e.item] += e.score;
      ++avg.raters[e.item];
    }
  }
  return avg;
}

namespace {

std::optional<double> ratio(std::uint32_t num, std::uint32_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / den;
}

PersonalityScores empty_scores(std::size_t n) {
  PersonalityScores s;
  s.oh.assign(n, 0);
  s.ol.assign(n, 0);
  s.pl.assign(n, 0);
  s.ph.assign(n, 0);
  return s;
}

}  // namespace

std::optional<double> PersonalityScores::optimism(UserId i) const {
  return ratio(oh[i], ol[i]);
}

std::optional<double> PersonalityScores::pessimism(UserId i) const {
  return ratio(pl[i], ph[i]);
}

std::size_t PersonalityScores::num_defined(Sign s) const {
  const auto& den = s == Sign::kPositive ? ol : ph;
  return static_cast<std::size_t>(
      std::count_if(den.begin(), den.end(), [](auto d) { return d > 0; }));
}

PersonalityScores rating_based_scores(const RatingTable& r) {
  const auto avg = item_averages(r);
  auto s = empty_scores(r.num_users());
  for (UserId i = 0; i < r.num_users(); ++i) {
    for (const auto& e : r.row(i)) {
      if (avg.low(e.item)) {
        ++s.ol[i];
        if (e.score > 3) ++s.oh[i];
      } else if (avg.high(e.item)) {
        ++s.ph[i];
        if (e.score <= 3) ++s.pl[i];
      }
    }
  }
  return s;
}

std::optional<double> EmotionAverages::global_p() const {
  if (nnz_p == 0) return std::nullopt;
  return static_cast<double>(total_p) / static_cast<double>(nnz_p);
}

std::optional<double> EmotionAverages::global_n() const {
  if (nnz_n == 0) return std::nullopt;
  return static_cast<double>(total_n) / static_cast<double>(nnz_n);
}

EmotionAverages emotion_averages(const EmotionMatrices& emo) {
  return {emo.positive.total(), emo.positive.nnz(), emo.negative.total(),
          emo.negative.nnz()};
}

namespace {

// col_total(j) / col_nnz(j) > total / nnz, undefined column mean -> false.
bool column_mean_exceeds(const CountMatrix& m, UserId j) {
  if (m.col_nnz(j) == 0) return false;
  return static_cast<unsigned __int128>(m.col_total(j)) * m.nnz() >
         static_cast<unsigned __int128>(m.total()) * m.col_nnz(j);
}

// value > col_total(k) / col_nnz(k); undefined column mean -> false.
bool exceeds_column_mean(std::uint64_t value, const CountMatrix& m, UserId k) {
  if (m.col_nnz(k) == 0) return false;
  return static_cast<unsigned __int128>(value) * m.col_nnz(k) >
         m.col_total(k);
}

}  // namespace

PersonalityScores emotion_based_scores(const EmotionMatrices& emo) {
  const auto& P = emo.positive;
  const auto& N = emo.negative;
  const std::size_t n = emo.num_users();
  auto s = empty_scores(n);

  std::vector<char> worse_than_avg(n), better_than_avg(n);
  for (UserId j = 0; j < n; ++j) {
    worse_than_avg[j] = column_mean_exceeds(N, j);
    better_than_avg[j] = column_mean_exceeds(P, j);
  }

  for (UserId i = 0; i < n; ++i) {
    auto pc = P.row_cols(i);
    auto pv = P.row_counts(i);
    for (std::size_t e = 0; e < pc.size(); ++e) {
      if (!worse_than_avg[pc[e]]) continue;
      ++s.ol[i];
      if (exceeds_column_mean(pv[e], P, pc[e])) ++s.oh[i];
    }
    auto nc = N.row_cols(i);
    auto nv = N.row_counts(i);
    for (std::size_t e = 0; e < nc.size(); ++e) {
      if (!better_than_avg[nc[e]]) continue;
      ++s.ph[i];
      if (exceeds_column_mean(nv[e], N, nc[e])) ++s.pl[i];
    }
  }
  return s;
}

}  // namespace signet
