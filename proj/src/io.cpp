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

#include "signet/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <unordered_set>

#include "signet/error.hpp"

namespace signet {

namespace fs = std::filesystem;

std::uint32_t IdDictionary::intern(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<std::uint32_t> IdDictionary::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

InputPaths InputPaths::from_directory(const fs::path& dir) {
  InputPaths p;
  p.links = dir / "links.tsv";
  if (fs::exists(dir / "emotions.tsv")) p.emotions = dir / "emotions.tsv";
  if (fs::exists(dir / "ratings.tsv")) p.ratings = dir / "ratings.tsv";
  if (fs::exists(dir / "users.tsv")) p.users = dir / "users.tsv";
  return p;
}

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw Error(ErrorCategory::kIo, "sha256 failed");
  std::ostringstream os;
  for (unsigned int b = 0; b < len; ++b)
    os << std::hex << std::setw(2) << std::setfill('0')
       << static_cast<int>(digest[b]);
  return os.str();
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCategory::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Splits on runs of spaces and tabs.
std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct Line {
  std::uint64_t number;
  std::vector<std::string_view> cols;
};

// Owns the file bytes on the heap so the string_views in `lines` survive a
// move (a short std::string keeps its characters inline).
struct ParsedFile {
  std::string path;
  std::unique_ptr<const std::string> bytes;
  std::vector<Line> lines;
  FileReport report;
};

ParsedFile parse_file(const fs::path& path, std::size_t expected_cols) {
  ParsedFile f;
  f.path = path.string();
  f.bytes = std::make_unique<const std::string>(read_file(path));
  f.report.path = f.path;
  f.report.sha256 = sha256_hex(*f.bytes);
  std::string_view all(*f.bytes);
  std::uint64_t number = 0;
  std::size_t pos = 0;
  while (pos < all.size()) {
    std::size_t end = all.find('\n', pos);
    if (end == std::string_view::npos) end = all.size();
    std::string_view line = all.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto cols = fields(line);
    if (cols.empty() || cols.front().front() == '#') {
      ++f.report.skipped_lines;
      continue;
    }
    if (cols.size() != expected_cols)
      throw ParseError(f.path, number,
                       "expected " + std::to_string(expected_cols) +
                           " fields, found " + std::to_string(cols.size()));
    f.lines.push_back({number, std::move(cols)});
  }
  f.report.lines = number;
  f.report.records = f.lines.size();
  return f;
}

constexpr std::size_t kMaxListed = 20;

[[noreturn]] void universe_error(const std::vector<std::string>& offenders,
                                 const std::string& context) {
  std::string msg = context + ": " + std::to_string(offenders.size()) +
                    " unknown user id(s): ";
  for (std::size_t e = 0; e < offenders.size() && e < kMaxListed; ++e) {
    if (e) msg += ", ";
    msg += offenders[e];
  }
  if (offenders.size() > kMaxListed)
    msg += ", ... (" + std::to_string(offenders.size() - kMaxListed) +
           " more)";
  throw Error(ErrorCategory::kUniverse, msg);
}

}  // namespace

Dataset ingest(const InputPaths& paths) {
  Dataset ds;
  auto& rep = ds.report;

  std::optional<ParsedFile> users_file;
  if (paths.users) {
    users_file = parse_file(*paths.users, 1);
    for (const auto& l : users_file->lines) {
      const auto before = ds.users.size();
      ds.users.intern(l.cols[0]);
      if (ds.users.size() == before)
        throw ParseError(users_file->path, l.number,
                         "duplicate user id '" + std::string(l.cols[0]) + "'");
    }
  }

  auto links = parse_file(paths.links, 3);
  std::optional<ParsedFile> emotions, ratings;
  if (paths.emotions) emotions = parse_file(*paths.emotions, 3);
  if (paths.ratings) ratings = parse_file(*paths.ratings, 3);

  // Field-level validation before any id is interned.
  std::vector<Sign> link_signs;
  link_signs.reserve(links.lines.size());
  for (const auto& l : links.lines) {
    auto v = parse_int(l.cols[2]);
    if (!v || (*v != 1 && *v != -1))
      throw ParseError(links.path, l.number,
                       "sign must be -1 or 1, got '" + std::string(l.cols[2]) +
                           "'");
    if (l.cols[0] == l.cols[1])
      throw ParseError(links.path, l.number,
                       "self-loop on '" + std::string(l.cols[0]) + "'");
    link_signs.push_back(sign_from_int(*v));
  }
  std::vector<std::variant<HelpfulnessScore, Sign>> emotion_values;
  if (emotions) {
    for (const auto& l : emotions->lines) {
      const auto tok = l.cols[2];
      if (tok == "P" || tok == "p") {
        emotion_values.emplace_back(Sign::kPositive);
      } else if (tok == "N" || tok == "n") {
        emotion_values.emplace_back(Sign::kNegative);
      } else {
        auto v = parse_int(tok);
        if (!v || *v < 1 || *v > 6)
          throw ParseError(emotions->path, l.number,
                           "emotion must be a score in 1..6 or P/N, got '" +
                               std::string(tok) + "'");
        emotion_values.emplace_back(HelpfulnessScore{*v});
      }
      if (l.cols[0] == l.cols[1])
        throw ParseError(emotions->path, l.number,
                         "self-directed emotion on '" +
                             std::string(l.cols[0]) + "'");
    }
  }
  std::vector<int> rating_scores;
  if (ratings) {
    for (const auto& l : ratings->lines) {
      auto v = parse_int(l.cols[2]);
      if (!v || *v < 1 || *v > 5)
        throw ParseError(ratings->path, l.number,
                         "rating must be in 1..5, got '" +
                             std::string(l.cols[2]) + "'");
      rating_scores.push_back(*v);
    }
  }

  // User universe.
  if (users_file) {
    std::vector<std::string> offenders;
    std::unordered_set<std::string_view> seen;
    auto check = [&](std::string_view id) {
      if (!ds.users.find(id) && seen.insert(id).second)
        offenders.emplace_back(id);
    };
    for (const auto& l : links.lines) check(l.cols[0]), check(l.cols[1]);
    if (emotions)
      for (const auto& l : emotions->lines) check(l.cols[0]), check(l.cols[1]);
    if (ratings)
      for (const auto& l : ratings->lines) check(l.cols[0]);
    if (!offenders.empty())
      universe_error(offenders, "ids missing from the users file");
  } else {
    for (const auto& l : links.lines)
      ds.users.intern(l.cols[0]), ds.users.intern(l.cols[1]);
    if (emotions)
      for (const auto& l : emotions->lines)
        ds.users.intern(l.cols[0]), ds.users.intern(l.cols[1]);
    if (ratings) {
      std::vector<std::string> offenders;
      std::unordered_set<std::string_view> seen;
      for (const auto& l : ratings->lines)
        if (!ds.users.find(l.cols[0]) && seen.insert(l.cols[0]).second)
          offenders.emplace_back(l.cols[0]);
      if (!offenders.empty())
        universe_error(offenders,
                       "rating users absent from the link and emotion files");
    }
  }
  const std::size_t n = ds.users.size();

  SignedNetworkBuilder builder(n);
  for (std::size_t e = 0; e < links.lines.size(); ++e) {
    const auto& l = links.lines[e];
    builder.add_link(*ds.users.find(l.cols[0]), *ds.users.find(l.cols[1]),
                     link_signs[e]);
  }
  ds.network = builder.freeze();
  rep.link_conflicts = builder.conflict_count();
  rep.link_duplicates = builder.duplicate_count();
  rep.files.push_back(links.report);
  if (links.lines.empty())
    rep.warnings.push_back("link file " + links.path + " contains no links");

  std::vector<EmotionEvent> events;
  if (emotions) {
    events.reserve(emotions->lines.size());
    for (std::size_t e = 0; e < emotions->lines.size(); ++e) {
      const auto& l = emotions->lines[e];
      events.push_back({*ds.users.find(l.cols[0]), *ds.users.find(l.cols[1]),
                        emotion_values[e]});
    }
    rep.files.push_back(emotions->report);
  }
  auto built = build_emotion_matrices(events, n);
  ds.emotions = std::move(built.matrices);
  rep.score_events = built.score_events;
  rep.polarity_events = built.polarity_events;
  rep.neutral_events = built.neutral_events;

  if (ratings) {
    RatingTableBuilder rb;
    for (std::size_t e = 0; e < ratings->lines.size(); ++e) {
      const auto& l = ratings->lines[e];
      rb.set(*ds.users.find(l.cols[0]), ds.items.intern(l.cols[1]),
             rating_scores[e]);
    }
    ds.ratings = rb.freeze(n, ds.items.size());
    rep.rating_overwrites = rb.overwrite_count();
    rep.files.push_back(ratings->report);
  }
  if (users_file) rep.files.push_back(users_file->report);

  rep.num_users = n;
  rep.num_items = ds.items.size();
  return ds;
}

void write_dataset(const Dataset& data, const fs::path& dir) {
  fs::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out)
      throw Error(ErrorCategory::kIo, "cannot write " + (dir / name).string());
    return out;
  };
  const auto& u = data.users;

  {
    auto out = open("users.tsv");
    out << "# user id, one per line, in index order\n";
    for (const auto& name : u.names()) out << name << '\n';
  }
  {
    auto out = open("links.tsv");
    out << "# source\ttarget\tsign\n";
    const auto& net = data.network;
    for (UserId i = 0; i < net.num_users(); ++i) {
      auto pos = net.out(i, Sign::kPositive);
      auto neg = net.out(i, Sign::kNegative);
      std::size_t a = 0, b = 0;
      while (a < pos.size() || b < neg.size()) {
        if (b == neg.size() || (a < pos.size() && pos[a] < neg[b]))
          out << u.name(i) << '\t' << u.name(pos[a++]) << "\t1\n";
        else
          out << u.name(i) << '\t' << u.name(neg[b++]) << "\t-1\n";
      }
    }
  }
  {
    auto out = open("emotions.tsv");
    out << "# source\ttarget\tP|N (one line per emotion)\n";
    for (Sign s : {Sign::kPositive, Sign::kNegative}) {
      const auto& m = data.emotions.of(s);
      const char tag = s == Sign::kPositive ? 'P' : 'N';
      for (UserId i = 0; i < m.dim(); ++i) {
        auto cols = m.row_cols(i);
        auto counts = m.row_counts(i);
        for (std::size_t e = 0; e < cols.size(); ++e)
          for (std::uint32_t c = 0; c < counts[e]; ++c)
            out << u.name(i) << '\t' << u.name(cols[e]) << '\t' << tag << '\n';
      }
    }
  }
  if (data.ratings) {
    // Item-major so that re-ingestion assigns item indices in order.
    std::vector<std::tuple<ItemId, UserId, int>> rows;
    const auto& r = *data.ratings;
    for (UserId i = 0; i < r.num_users(); ++i)
      for (const auto& e : r.row(i)) rows.emplace_back(e.item, i, e.score);
    std::sort(rows.begin(), rows.end());
    auto out = open("ratings.tsv");
    out << "# user\titem\tscore\n";
    for (const auto& [k, i, score] : rows)
      out << u.name(i) << '\t' << data.items.name(k) << '\t' << score << '\n';
  }
}

Dataset dataset_from_synthetic(const SyntheticData& synth) {
  Dataset ds;
  for (UserId i = 0; i < synth.network.num_users(); ++i)
    ds.users.intern("u" + std::to_string(i));
  for (ItemId k = 0; k < synth.ratings.num_items(); ++k)
    ds.items.intern("i" + std::to_string(k));
  ds.network = synth.network;
  ds.emotions = synth.emotions;
  ds.ratings = synth.ratings;
  ds.report.num_users = ds.users.size();
  ds.report.num_items = ds.items.size();
  return ds;
}

std::string sha256_file(const fs::path& path) {
  return sha256_hex(read_file(path));
}

}  // namespace signet
