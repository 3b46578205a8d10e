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

#include "signet/signed_network.hpp"

#include <algorithm>
#include <string>

#include "signet/error.hpp"

namespace signet {

namespace {

constexpr std::uint64_t pair_key(UserId i, UserId j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace

Sign sign_from_int(int v) {
  if (v == 1) return Sign::kPositive;
  if (v == -1) return Sign::kNegative;
  throw Error(ErrorCategory::kInvalidArgument,
              "sign must be -1 or +1, got " + std::to_string(v));
}

bool Adjacency::contains(UserId i, UserId j) const {
  auto r = row(i);
  return std::binary_search(r.begin(), r.end(), j);
}

Adjacency make_adjacency(std::size_t num_rows,
                         std::vector<std::pair<UserId, UserId>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::uint64_t> offsets(num_rows + 1, 0);
  std::vector<UserId> targets;
  targets.reserve(pairs.size());
  for (const auto& [i, j] : pairs) {
    ++offsets[i + 1];
    targets.push_back(j);
  }
  for (std::size_t r = 0; r < num_rows; ++r) offsets[r + 1] += offsets[r];
  return Adjacency(std::move(offsets), std::move(targets));
}

SignedNetwork::SignedNetwork(Adjacency positive, Adjacency negative,
                             std::size_t conflict_count)
    : positive_(std::move(positive)),
      negative_(std::move(negative)),
      conflicts_(conflict_count) {
  if (positive_.num_rows() != negative_.num_rows())
    throw Error(ErrorCategory::kInvalidArgument,
                "positive and negative adjacency disagree on user count");
}

int SignedNetwork::sign(UserId i, UserId j) const {
  if (positive_.contains(i, j)) return 1;
  if (negative_.contains(i, j)) return -1;
  return 0;
}

std::vector<UserId> SignedNetwork::positive_out_neighbors(UserId i) const {
  if (i >= num_users())
    throw Error(ErrorCategory::kInvalidArgument,
                "user id " + std::to_string(i) + " out of range [0, " +
                    std::to_string(num_users()) + ")");
  auto r = positive_.row(i);
  return {r.begin(), r.end()};
}

SignedNetwork SignedNetwork::flipped() const {
  return SignedNetwork(negative_, positive_, conflicts_);
}

void SignedNetworkBuilder::add_link(UserId i, UserId j, Sign s) {
  if (i >= num_users_ || j >= num_users_)
    throw Error(ErrorCategory::kInvalidArgument,
                "link (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") references a user outside [0, " +
                    std::to_string(num_users_) + ")");
  if (i == j)
    throw Error(ErrorCategory::kInvalidArgument,
                "self-loop on user " + std::to_string(i));
  auto [it, inserted] = links_.try_emplace(pair_key(i, j), s);
  if (!inserted) {
    if (it->second != s)
      ++conflicts_;
    else
      ++duplicates_;
    it->second = s;
  }
}

int SignedNetworkBuilder::sign(UserId i, UserId j) const {
  auto it = links_.find(pair_key(i, j));
  return it == links_.end() ? 0 : to_int(it->second);
}

SignedNetwork SignedNetworkBuilder::freeze() const {
  std::vector<std::pair<UserId, UserId>> pos, neg;
  for (const auto& [key, s] : links_) {
    auto p = std::make_pair(static_cast<UserId>(key >> 32),
                            static_cast<UserId>(key & 0xffffffffu));
    (s == Sign::kPositive ? pos : neg).push_back(p);
  }
  return SignedNetwork(make_adjacency(num_users_, std::move(pos)),
                       make_adjacency(num_users_, std::move(neg)),
                       conflicts_);
}

}  // namespace signet
