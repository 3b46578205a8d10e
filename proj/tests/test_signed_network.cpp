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

#include "doctest.h"
#include "oracles.hpp"
#include "signet/emotion.hpp"
#include "signet/error.hpp"
#include "signet/signed_network.hpp"

using namespace signet;

TEST_CASE("single link") {
  SignedNetworkBuilder b(2);
  b.add_link(0, 1, Sign::kPositive);
  const auto net = b.freeze();
  CHECK(net.sign(0, 1) == 1);
  CHECK(net.sign(1, 0) == 0);
  const auto st = compute_stats(net, EmotionMatrices{CountMatrix(2, {}),
                                                     CountMatrix(2, {})});
  CHECK(st.num_positive_links == 1);
  CHECK(st.num_negative_links == 0);
}

TEST_CASE("opposite-sign overwrite is a conflict, last write wins") {
  SignedNetworkBuilder b(2);
  b.add_link(0, 1, Sign::kPositive);
  b.add_link(0, 1, Sign::kNegative);
  CHECK(b.conflict_count() == 1);
  CHECK(b.duplicate_count() == 0);
  const auto net = b.freeze();
  CHECK(net.sign(0, 1) == -1);
  CHECK(net.conflict_count() == 1);
  CHECK(net.num_links() == 1);
}

TEST_CASE("same-sign repeat is a duplicate") {
  SignedNetworkBuilder b(3);
  b.add_link(2, 1, Sign::kNegative);
  b.add_link(2, 1, Sign::kNegative);
  CHECK(b.duplicate_count() == 1);
  CHECK(b.conflict_count() == 0);
  CHECK(b.freeze().num_negative_links() == 1);
}

TEST_CASE("builder rejects self-loops and out-of-range ids") {
  SignedNetworkBuilder b(3);
  CHECK_THROWS_AS(b.add_link(1, 1, Sign::kPositive), Error);
  CHECK_THROWS_AS(b.add_link(0, 3, Sign::kPositive), Error);
  b.ensure_users(4);
  CHECK_NOTHROW(b.add_link(0, 3, Sign::kPositive));
}

TEST_CASE("positive out-neighbors") {
  SignedNetworkBuilder b(4);
  b.add_link(0, 1, Sign::kPositive);
  b.add_link(0, 2, Sign::kNegative);
  const auto net = b.freeze();
  CHECK(net.positive_out_neighbors(0) == std::vector<UserId>{1});
  CHECK(net.positive_out_neighbors(3).empty());
  CHECK_THROWS_AS(net.positive_out_neighbors(4), Error);
}

TEST_CASE("positive out-neighbors match a full pair scan") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto net = oracle::random_network(seed, 50, 0.08);
    const auto f = oracle::dense(net);
    for (UserId i = 0; i < 50; ++i)
      REQUIRE(net.positive_out_neighbors(i) ==
              oracle::positive_neighbors(f, 50, i));
    for (UserId i = 0; i < 50; ++i)
      for (UserId j = 0; j < 50; ++j) REQUIRE(net.sign(i, j) == f[i * 50 + j]);
  }
}

TEST_CASE("at most one sign per ordered pair and no self-loops") {
  const auto net = oracle::random_network(99, 40, 0.2, 0.9);
  for (UserId i = 0; i < 40; ++i) {
    CHECK_FALSE(net.has(i, i, Sign::kPositive));
    CHECK_FALSE(net.has(i, i, Sign::kNegative));
    for (UserId j = 0; j < 40; ++j)
      CHECK_FALSE((net.has(i, j, Sign::kPositive) &&
                   net.has(i, j, Sign::kNegative)));
  }
}

TEST_CASE("flipping twice is the identity and swaps tallies") {
  const auto net = oracle::random_network(7, 30, 0.1);
  const auto f = net.flipped();
  CHECK(f.num_positive_links() == net.num_negative_links());
  CHECK(f.num_negative_links() == net.num_positive_links());
  CHECK(f.flipped() == net);
  for (UserId i = 0; i < 30; ++i)
    for (UserId j = 0; j < 30; ++j) CHECK(f.sign(i, j) == -net.sign(i, j));
}

TEST_CASE("sign_from_int") {
  CHECK(sign_from_int(1) == Sign::kPositive);
  CHECK(sign_from_int(-1) == Sign::kNegative);
  CHECK_THROWS_AS(sign_from_int(0), Error);
  CHECK_THROWS_AS(sign_from_int(2), Error);
}

TEST_CASE("empty network") {
  const auto net = SignedNetworkBuilder(0).freeze();
  CHECK(net.num_users() == 0);
  CHECK(net.num_links() == 0);
}
