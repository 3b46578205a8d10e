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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "signet/signed_network.hpp"

namespace signet {

/// Sign multiset of a closed triple, by number of negative edges.
enum class TriadType { kPPP = 0, kPPN = 1, kPNN = 2, kNNN = 3 };

std::string_view triad_name(TriadType t);  // "+++", "++-", "+--", "---"

struct TriadClass {
  TriadType type;
  bool balanced;  // product of the three signs is +1
};

TriadClass classify_triad(Sign s1, Sign s2, Sign s3);

struct TriadCensus {
  std::array<std::uint64_t, 4> counts{};  // indexed by TriadType
  std::uint64_t inconsistent = 0;  // some pair has disagreeing reciprocal links

  std::uint64_t count(TriadType t) const {
    return counts[static_cast<int>(t)];
  }
  std::uint64_t classified() const {
    return counts[0] + counts[1] + counts[2] + counts[3];
  }
  std::uint64_t closed_triples() const { return classified() + inconsistent; }
  std::uint64_t balanced() const { return counts[0] + counts[2]; }
  /// Share of classified triples that are balanced; empty when none.
  std::optional<double> balanced_fraction() const;

  bool operator==(const TriadCensus&) const = default;
};

/// Census of unordered triples {i, j, k} whose three pairs are all
/// connected in at least one direction. A pair's undirected sign is the
/// common sign of its directed links; if i->j and j->i disagree, the pair
/// is conflicting and every triple through it counts as inconsistent.
/// Triangles are listed by merging sorted neighbor lists (u < v < w).
TriadCensus triad_census(const SignedNetwork& net);

}  // namespace signet
