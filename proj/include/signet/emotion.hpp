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
#include <unordered_map>
#include <variant>
#include <vector>

#include "signet/signed_network.hpp"

namespace signet {

/// Frozen sparse user x user matrix of strictly positive counts (CSR).
/// Column totals and column nonzero counts are precomputed since the
/// personality scores need per-recipient averages.
class CountMatrix {
 public:
  CountMatrix() : offsets_(1, 0) {}
  CountMatrix(std::size_t dim,
              std::vector<std::pair<std::uint64_t, std::uint32_t>> entries);

  std::size_t dim() const { return offsets_.size() - 1; }
  std::size_t nnz() const { return cols_.size(); }
  std::uint64_t total() const { return total_; }

  std::span<const UserId> row_cols(UserId i) const {
    return {cols_.data() + offsets_[i], row_size(i)};
  }
  std::span<const std::uint32_t> row_counts(UserId i) const {
    return {counts_.data() + offsets_[i], row_size(i)};
  }
  std::uint32_t at(UserId i, UserId j) const;

  std::uint64_t col_total(UserId j) const { return col_total_[j]; }
  std::uint32_t col_nnz(UserId j) const { return col_nnz_[j]; }

  CountMatrix scaled(std::uint32_t factor) const;

  bool operator==(const CountMatrix& o) const {
    return offsets_ == o.offsets_ && cols_ == o.cols_ && counts_ == o.counts_;
  }

 private:
  std::size_t row_size(UserId i) const {
    return static_cast<std::size_t>(offsets_[i + 1] - offsets_[i]);
  }

  std::vector<std::uint64_t> offsets_;
  std::vector<UserId> cols_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint64_t> col_total_;
  std::vector<std::uint32_t> col_nnz_;
  std::uint64_t total_ = 0;
};

/// Accumulates counts; zero is never stored.
class CountMatrixBuilder {
 public:
  void add(UserId i, UserId j, std::uint32_t count = 1);
  CountMatrix freeze(std::size_t dim) const;

 private:
  std::unordered_map<std::uint64_t, std::uint32_t> counts_;
};

/// Positive (P) and negative (N) emotion count matrices.
struct EmotionMatrices {
  CountMatrix positive;
  CountMatrix negative;

  std::size_t num_users() const { return positive.dim(); }
  const CountMatrix& of(Sign s) const {
    return s == Sign::kPositive ? positive : negative;
  }
  /// P and N exchanged; the mirror image used for sign-symmetry checks.
  EmotionMatrices swapped() const { return {negative, positive}; }

  bool operator==(const EmotionMatrices&) const = default;
};

/// Helpfulness rating on the 1..6 scale.
struct HelpfulnessScore {
  int value;
};

/// One emotional expression from rater to ratee: either a helpfulness
/// score or a pre-labeled polarity.
struct EmotionEvent {
  UserId rater;
  UserId ratee;
  std::variant<HelpfulnessScore, Sign> value;
};

/// Maps a helpfulness score to an emotion: {1,2} negative, {4,5,6}
/// positive, 3 neutral (returns 0). Throws outside [1, 6].
int helpfulness_polarity(int score);

struct EmotionBuild {
  EmotionMatrices matrices;
  std::size_t score_events = 0;
  std::size_t polarity_events = 0;
  std::size_t neutral_events = 0;
};

/// Counts every event into P or N. Order-invariant. Errors name the
/// offending event index.
EmotionBuild build_emotion_matrices(std::span<const EmotionEvent> events,
                                    std::size_t num_users);

/// Raw-data statistics in the shape of the usual signed-network summary
/// table (users, links by sign, emotions by sign).
struct DatasetStats {
  std::uint64_t num_users = 0;
  std::uint64_t num_positive_links = 0;
  std::uint64_t num_negative_links = 0;
  std::uint64_t num_positive_emotions = 0;
  std::uint64_t num_negative_emotions = 0;

  bool operator==(const DatasetStats&) const = default;
};

DatasetStats compute_stats(const SignedNetwork& net,
                           const EmotionMatrices& emo);

}  // namespace signet
