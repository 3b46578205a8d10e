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

#include "signet/triads.hpp"

#include <algorithm>
#include <vector>

namespace signet {

std::string_view triad_name(TriadType t) {
  switch (t) {
    case TriadType::kPPP:
      return "+++";
    case TriadType::kPPN:
      return "++-";
    case TriadType::kPNN:
      return "+--";
    case TriadType::kNNN:
      return "---";
  }
  return "?";
}

TriadClass classify_triad(Sign s1, Sign s2, Sign s3) {
  const int negatives = (s1 == Sign::kNegative) + (s2 == Sign::kNegative) +
                        (s3 == Sign::kNegative);
  return {static_cast<TriadType>(negatives), negatives % 2 == 0};
}

std::optional<double> TriadCensus::balanced_fraction() const {
  if (classified() == 0) return std::nullopt;
  return static_cast<double>(balanced()) / static_cast<double>(classified());
}

namespace {

// Undirected signed neighbor: sign is +1, -1, or 0 for a conflicting pair.
struct Neighbor {
  UserId id;
  std::int8_t sign;
};

std::vector<std::vector<Neighbor>> undirected_view(const SignedNetwork& net) {
  const std::size_t n = net.num_users();
  // Only the higher-id endpoint is stored per pair (forward adjacency),
  // which is all the u < v < w enumeration needs.
  std::vector<std::vector<Neighbor>> fwd(n);
  for (UserId i = 0; i < n; ++i) {
    for (Sign s : {Sign::kPositive, Sign::kNegative}) {
      for (UserId j : net.out(i, s)) {
        const UserId lo = std::min(i, j), hi = std::max(i, j);
        fwd[lo].push_back({hi, static_cast<std::int8_t>(to_int(s))});
      }
    }
  }
  for (auto& row : fwd) {
    std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) {
      return a.id < b.id;
    });
    std::vector<Neighbor> merged;
    merged.reserve(row.size());
    for (const auto& nb : row) {
      if (!merged.empty() && merged.back().id == nb.id) {
        if (merged.back().sign != nb.sign) merged.back().sign = 0;
      } else {
        merged.push_back(nb);
      }
    }
    row = std::move(merged);
  }
  return fwd;
}

}  // namespace

TriadCensus triad_census(const SignedNetwork& net) {
  const auto fwd = undirected_view(net);
  TriadCensus census;
  for (UserId u = 0; u < fwd.size(); ++u) {
    const auto& nu = fwd[u];
    for (std::size_t a = 0; a < nu.size(); ++a) {
      const Neighbor uv = nu[a];
      const auto& nv = fwd[uv.id];
      // Intersect the tail of N+(u) past v with N+(v).
      auto p = nu.begin() + static_cast<std::ptrdiff_t>(a) + 1;
      auto q = nv.begin();
      while (p != nu.end() && q != nv.end()) {
        if (p->id < q->id) {
          ++p;
        } else if (q->id < p->id) {
          ++q;
        } else {
          const Neighbor uw = *p, vw = *q;
          if (uv.sign == 0 || uw.sign == 0 || vw.sign == 0) {
            ++census.inconsistent;
          } else {
            const auto cls = classify_triad(sign_from_int(uv.sign),
                                            sign_from_int(uw.sign),
                                            sign_from_int(vw.sign));
            ++census.counts[static_cast<int>(cls.type)];
          }
          ++p;
          ++q;
        }
      }
    }
  }
  return census;
}

}  // namespace signet
