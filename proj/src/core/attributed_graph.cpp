// Copyright 2026 The gcmi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "attributed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "error.hpp"

namespace gcmi {

namespace fs = std::filesystem;

bool ParseAttribute(std::string_view token, Attribute* out) {
  if (token == "+1" || token == "1" || token == "m") {
    *out = Attribute::kPlus;
    return true;
  }
  if (token == "-1" || token == "f") {
    *out = Attribute::kMinus;
    return true;
  }
  return false;
}

AttributedMultigraph::AttributedMultigraph(std::vector<Attribute> attributes)
    : attributes_(std::move(attributes)),
      adjacency_(attributes_.size()),
      degrees_(attributes_.size(), 0) {}

NodeId AttributedMultigraph::AddNode(Attribute attr) {
  const auto id = static_cast<NodeId>(attributes_.size());
  attributes_.push_back(attr);
  adjacency_.emplace_back();
  degrees_.push_back(0);
  if (!labels_.empty()) labels_.push_back(std::to_string(id));
  return id;
}

void AttributedMultigraph::CheckNode(NodeId v) const {
  if (v >= attributes_.size()) {
    Fail(ErrorCode::kUnknownNode, "node " + std::to_string(v) +
                                      " out of range (n=" +
                                      std::to_string(attributes_.size()) + ")");
  }
}

std::uint64_t AttributedMultigraph::AddEdge(NodeId u, NodeId v,
                                            std::uint64_t count) {
  CheckNode(u);
  CheckNode(v);
  if (u == v) {
    Fail(ErrorCode::kSelfLoopRejected, "self-loop at node " + std::to_string(u));
  }
  if (count == 0) Fail(ErrorCode::kInvalidArgument, "multiplicity must be >= 1");
  auto [it, inserted] = adjacency_[u].try_emplace(v, 0);
  if (inserted) ++num_pairs_;
  it->second += count;
  adjacency_[v][u] += count;
  degrees_[u] += count;
  degrees_[v] += count;
  total_multiplicity_ += count;
  return it->second;
}

void AttributedMultigraph::RemoveEdge(NodeId u, NodeId v) {
  CheckNode(u);
  CheckNode(v);
  auto it = adjacency_[u].find(v);
  if (it == adjacency_[u].end()) {
    Fail(ErrorCode::kInvalidArgument, "no edge {" + std::to_string(u) + "," +
                                          std::to_string(v) + "}");
  }
  if (--it->second == 0) {
    adjacency_[u].erase(it);
    adjacency_[v].erase(u);
    --num_pairs_;
  } else {
    --adjacency_[v][u];
  }
  --degrees_[u];
  --degrees_[v];
  --total_multiplicity_;
}

std::uint64_t AttributedMultigraph::Degree(NodeId v) const {
  CheckNode(v);
  return degrees_[v];
}

Attribute AttributedMultigraph::attribute(NodeId v) const {
  CheckNode(v);
  return attributes_[v];
}

std::uint64_t AttributedMultigraph::Multiplicity(NodeId u, NodeId v) const {
  CheckNode(u);
  CheckNode(v);
  auto it = adjacency_[u].find(v);
  return it == adjacency_[u].end() ? 0 : it->second;
}

const std::map<NodeId, std::uint64_t>& AttributedMultigraph::Neighbors(
    NodeId v) const {
  CheckNode(v);
  return adjacency_[v];
}

std::uint64_t AttributedMultigraph::MaxDegree() const {
  std::uint64_t best = 0;
  for (auto d : degrees_) best = std::max(best, d);
  return best;
}

void AttributedMultigraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != attributes_.size()) {
    Fail(ErrorCode::kInvalidArgument, "label count does not match node count");
  }
  labels_ = std::move(labels);
}

std::uint64_t AttributedMultigraph::Fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(attributes_.size());
  for (auto a : attributes_) mix(static_cast<std::uint64_t>(AttributeIndex(a)));
  ForEachEdge([&](NodeId u, NodeId v, std::uint64_t w) {
    mix(u);
    mix(v);
    mix(w);
  });
  return h;
}

AttributedMultigraph AttributedMultigraph::Relabeled(
    const std::vector<NodeId>& perm) const {
  if (perm.size() != attributes_.size()) {
    Fail(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<Attribute> attrs(attributes_.size());
  for (NodeId i = 0; i < perm.size(); ++i) attrs[perm[i]] = attributes_[i];
  AttributedMultigraph out(std::move(attrs));
  ForEachEdge([&](NodeId u, NodeId v, std::uint64_t w) {
    out.AddEdge(perm[u], perm[v], w);
  });
  return out;
}

AttributedMultigraph AttributedMultigraph::AttributesSwapped() const {
  AttributedMultigraph out = *this;
  for (auto& a : out.attributes_) a = Flip(a);
  return out;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> Tokenize(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Non-comment, non-blank lines with their 1-based line numbers. Views point
// into `text`.
std::vector<Line> SplitLines(const std::string& text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++number;
    std::string_view line(text.data() + start, end - start);
    auto tokens = Tokenize(line);
    if (!tokens.empty() && tokens[0].front() != '#') {
      lines.push_back({number, std::move(tokens)});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool ParseUnsigned(std::string_view s, std::uint64_t* out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void ParseFail(const fs::path& file, std::size_t line,
                            const std::string& what) {
  Fail(ErrorCode::kParseError,
       file.string() + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

AttributedMultigraph LoadGraph(const fs::path& edge_file,
                               const fs::path& attribute_file) {
  const std::string attr_text = ReadFile(attribute_file);
  std::vector<std::pair<std::string, Attribute>> rows;
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& line : SplitLines(attr_text)) {
    if (line.tokens.size() != 2) {
      ParseFail(attribute_file, line.number, "expected `node attr`");
    }
    Attribute a;
    if (!ParseAttribute(line.tokens[1], &a)) {
      ParseFail(attribute_file, line.number,
                "bad attribute `" + std::string(line.tokens[1]) + "`");
    }
    std::string key(line.tokens[0]);
    if (!seen.emplace(key, rows.size()).second) {
      ParseFail(attribute_file, line.number, "duplicate node `" + key + "`");
    }
    rows.emplace_back(std::move(key), a);
  }

  bool all_numeric = true;
  for (const auto& [key, a] : rows) {
    std::uint64_t v;
    if (!ParseUnsigned(key, &v)) {
      all_numeric = false;
      break;
    }
  }
  if (all_numeric) {
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
      std::uint64_t a = 0, b = 0;
      ParseUnsigned(x.first, &a);
      ParseUnsigned(y.first, &b);
      return a < b;
    });
  }

  std::unordered_map<std::string, NodeId> ids;
  std::vector<Attribute> attrs;
  std::vector<std::string> labels;
  bool dense = true;
  for (const auto& [key, a] : rows) {
    const auto id = static_cast<NodeId>(attrs.size());
    if (key != std::to_string(id)) dense = false;
    ids.emplace(key, id);
    attrs.push_back(a);
    labels.push_back(key);
  }
  AttributedMultigraph g(std::move(attrs));
  if (!dense) g.set_labels(std::move(labels));

  const std::string edge_text = ReadFile(edge_file);
  for (const auto& line : SplitLines(edge_text)) {
    if (line.tokens.size() != 2 && line.tokens.size() != 3) {
      ParseFail(edge_file, line.number, "expected `u v [w]`");
    }
    std::uint64_t w = 1;
    if (line.tokens.size() == 3 && (!ParseUnsigned(line.tokens[2], &w) || w == 0)) {
      ParseFail(edge_file, line.number,
                "multiplicity must be an integer >= 1");
    }
    NodeId ends[2];
    for (int i = 0; i < 2; ++i) {
      auto it = ids.find(std::string(line.tokens[i]));
      if (it == ids.end()) {
        Fail(ErrorCode::kMissingAttribute,
             edge_file.string() + ":" + std::to_string(line.number) +
                 ": node `" + std::string(line.tokens[i]) +
                 "` has no attribute row");
      }
      ends[i] = it->second;
    }
    if (ends[0] == ends[1]) {
      Fail(ErrorCode::kSelfLoopRejected,
           edge_file.string() + ":" + std::to_string(line.number) +
               ": self-loop at `" + std::string(line.tokens[0]) + "`");
    }
    g.AddEdge(ends[0], ends[1], w);
  }
  return g;
}

void SaveGraph(const AttributedMultigraph& g, const fs::path& edge_file,
               const fs::path& attribute_file) {
  std::ofstream edges(edge_file, std::ios::binary);
  std::ofstream attrs(attribute_file, std::ios::binary);
  if (!edges || !attrs) {
    Fail(ErrorCode::kIoError, "cannot write " + edge_file.string() + " / " +
                                  attribute_file.string());
  }
  g.ForEachEdge([&](NodeId u, NodeId v, std::uint64_t w) {
    edges << u << ' ' << v << ' ' << w << '\n';
  });
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    attrs << v << ' ' << (g.attribute(v) == Attribute::kPlus ? "+1" : "-1")
          << '\n';
  }
  if (!g.labels().empty()) {
    fs::path sidecar = attribute_file;
    sidecar += ".ids";
    std::ofstream ids(sidecar, std::ios::binary);
    if (!ids) Fail(ErrorCode::kIoError, "cannot write " + sidecar.string());
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      ids << v << ' ' << g.labels()[v] << '\n';
    }
  }
}

std::vector<GraphSnapshot> LoadSnapshotSeries(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    Fail(ErrorCode::kIoError, dir.string() + " is not a directory");
  }
  std::vector<std::string> tags;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".edges") {
      tags.push_back(entry.path().stem().string());
    }
  }
  std::sort(tags.begin(), tags.end());
  std::vector<GraphSnapshot> series;
  for (const auto& tag : tags) {
    const fs::path attrs = dir / (tag + ".attrs");
    if (!fs::exists(attrs)) {
      Fail(ErrorCode::kIoError, "snapshot `" + tag + "` has no .attrs file");
    }
    try {
      series.push_back({tag, LoadGraph(dir / (tag + ".edges"), attrs)});
    } catch (const Error& e) {
      throw Error(e.code(), "snapshot `" + tag + "`: " + e.what());
    }
  }
  return series;
}

}  // namespace gcmi
