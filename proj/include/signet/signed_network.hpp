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

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace signet {

/// Dense user index in [0, num_users).
using UserId = std::uint32_t;

enum class Sign : std::int8_t { kNegative = -1, kPositive = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}
/// Accepts -1 or +1; anything else throws kInvalidArgument.
Sign sign_from_int(int v);

/// Compressed sparse rows of sorted target ids.
class Adjacency {
 public:
  Adjacency() : offsets_(1, 0) {}
  Adjacency(std::vector<std::uint64_t> offsets, std::vector<UserId> targets)
      : offsets_(std::move(offsets)), targets_(std::move(targets)) {}

  std::size_t num_rows() const { return offsets_.size() - 1; }
  std::size_t num_entries() const { return targets_.size(); }

  std::span<const UserId> row(UserId i) const {
    return {targets_.data() + offsets_[i],
            static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }
  bool contains(UserId i, UserId j) const;

  bool operator==(const Adjacency&) const = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<UserId> targets_;
};

/// Frozen signed adjacency F. Absent pairs are 0; no self-loops.
/// Immutable after construction, so concurrent readers need no locking.
class SignedNetwork {
 public:
  SignedNetwork() = default;
  SignedNetwork(Adjacency positive, Adjacency negative,
                std::size_t conflict_count = 0);

  std::size_t num_users() const { return positive_.num_rows(); }
  std::size_t num_links() const {
    return positive_.num_entries() + negative_.num_entries();
  }
  std::size_t num_positive_links() const { return positive_.num_entries(); }
  std::size_t num_negative_links() const { return negative_.num_entries(); }
  /// Opposite-sign overwrites seen while building.
  std::size_t conflict_count() const { return conflicts_; }

  /// F_ij in {-1, 0, +1}. Ids must be in range (unchecked).
  int sign(UserId i, UserId j) const;
  bool has(UserId i, UserId j, Sign s) const {
    return out_adjacency(s).contains(i, j);
  }

  std::span<const UserId> out(UserId i, Sign s) const {
    return out_adjacency(s).row(i);
  }
  std::size_t out_degree(UserId i, Sign s) const { return out(i, s).size(); }

  /// { j : F_ij = +1 }, sorted. Throws on an out-of-range id.
  std::vector<UserId> positive_out_neighbors(UserId i) const;

  const Adjacency& out_adjacency(Sign s) const {
    return s == Sign::kPositive ? positive_ : negative_;
  }

  /// Same topology with every sign negated.
  SignedNetwork flipped() const;

  bool operator==(const SignedNetwork& o) const {
    return positive_ == o.positive_ && negative_ == o.negative_;
  }

 private:
  Adjacency positive_;
  Adjacency negative_;
  std::size_t conflicts_ = 0;
};

/// Single-writer construction of a SignedNetwork.
///
/// Repeated links on an ordered pair follow last-write-wins; an overwrite
/// with the opposite sign bumps conflict_count(), a repeat of the same sign
/// bumps duplicate_count().
class SignedNetworkBuilder {
 public:
  explicit SignedNetworkBuilder(std::size_t num_users = 0)
      : num_users_(num_users) {}

  /// Grows the user universe; never shrinks it.
  void ensure_users(std::size_t n) {
    if (n > num_users_) num_users_ = n;
  }

  void add_link(UserId i, UserId j, Sign s);

  std::size_t num_users() const { return num_users_; }
  std::size_t num_links() const { return links_.size(); }
  std::size_t conflict_count() const { return conflicts_; }
  std::size_t duplicate_count() const { return duplicates_; }
  /// Current value of F_ij while building.
  int sign(UserId i, UserId j) const;

  SignedNetwork freeze() const;

 private:
  std::size_t num_users_;
  std::unordered_map<std::uint64_t, Sign> links_;
  std::size_t conflicts_ = 0;
  std::size_t duplicates_ = 0;
};

/// Helper for building CSR rows from unsorted (row, col) pairs.
Adjacency make_adjacency(std::size_t num_rows,
                         std::vector<std::pair<UserId, UserId>> pairs);

}  // namespace signet
