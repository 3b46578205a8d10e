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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "signet/emotion.hpp"
#include "signet/personality.hpp"
#include "signet/signed_network.hpp"
#include "signet/synth.hpp"

namespace signet {

/// Bijection between external string ids and dense indices, in order of
/// first appearance (or of the users file when one is given).
class IdDictionary {
 public:
  std::uint32_t intern(std::string_view name);
  std::optional<std::uint32_t> find(std::string_view name) const;
  const std::string& name(std::uint32_t id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const IdDictionary& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

struct InputPaths {
  std::filesystem::path links;
  std::optional<std::filesystem::path> emotions;
  std::optional<std::filesystem::path> ratings;
  std::optional<std::filesystem::path> users;

  /// links.tsv plus whichever of emotions.tsv, ratings.tsv, users.tsv exist.
  static InputPaths from_directory(const std::filesystem::path& dir);
};

struct FileReport {
  std::string path;
  std::string sha256;
  std::uint64_t lines = 0;          // physical lines
  std::uint64_t records = 0;        // data lines
  std::uint64_t skipped_lines = 0;  // blank or '#' comment
};

struct IngestReport {
  std::vector<FileReport> files;  // links, then emotions, ratings, users
  std::uint64_t link_conflicts = 0;   // opposite-sign overwrites
  std::uint64_t link_duplicates = 0;  // same-sign repeats
  std::uint64_t score_events = 0;
  std::uint64_t polarity_events = 0;
  std::uint64_t neutral_events = 0;  // helpfulness 3, tallied then dropped
  std::uint64_t rating_overwrites = 0;
  std::uint64_t num_users = 0;
  std::uint64_t num_items = 0;
  std::vector<std::string> warnings;
};

/// Frozen dataset. Immutable after ingestion.
struct Dataset {
  IdDictionary users;
  IdDictionary items;
  SignedNetwork network;
  EmotionMatrices emotions;
  std::optional<RatingTable> ratings;
  IngestReport report;
};

/// Reads and validates the input files.
///
/// Formats (whitespace-separated, '#' comments and blank lines ignored):
///   links     source target sign      sign in {-1, 1, +1}
///   emotions  source target score|P|N score in 1..6
///   ratings   user item score         score in 1..5
///   users     one external id per line, fixing the index order
///
/// Without a users file the universe is every id seen in the link and
/// emotion files; rating users must belong to it. With one, every id in
/// every file must be listed. Violations raise kUniverse naming offenders.
Dataset ingest(const InputPaths& paths);

/// Writes links.tsv, emotions.tsv, users.tsv and (when present)
/// ratings.tsv so that ingest(from_directory(dir)) reproduces `data`.
void write_dataset(const Dataset& data, const std::filesystem::path& dir);

/// Names users "u<index>" and items "i<index>".
Dataset dataset_from_synthetic(const SyntheticData& synth);

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_hex(std::string_view bytes);

}  // namespace signet
