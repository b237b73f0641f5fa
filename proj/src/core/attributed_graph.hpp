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

#ifndef GCMI_CORE_ATTRIBUTED_GRAPH_HPP_
#define GCMI_CORE_ATTRIBUTED_GRAPH_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gcmi {

using NodeId = std::uint32_t;

// Binary node label. Display aliases: "m" is +1, "f" is -1.
enum class Attribute : std::int8_t { kPlus = 1, kMinus = -1 };

inline int AttributeIndex(Attribute a) { return a == Attribute::kPlus ? 0 : 1; }
inline Attribute Flip(Attribute a) {
  return a == Attribute::kPlus ? Attribute::kMinus : Attribute::kPlus;
}
inline int AttributeValue(Attribute a) { return static_cast<int>(a); }

// Accepts "+1", "1", "-1", "m", "f".
bool ParseAttribute(std::string_view token, Attribute* out);

// Undirected multigraph with one binary attribute per node. Self-loops are
// rejected; multiplicities are positive integers.
class AttributedMultigraph {
 public:
  AttributedMultigraph() = default;

  // Graph with n nodes labelled by `attributes` and no edges.
  explicit AttributedMultigraph(std::vector<Attribute> attributes);

  NodeId AddNode(Attribute attr);

  // Increments the multiplicity of {u, v} by `count` (default 1) and returns
  // the new multiplicity.
  std::uint64_t AddEdge(NodeId u, NodeId v, std::uint64_t count = 1);

  // Decrements the multiplicity of {u, v} by one; removes the pair at zero.
  // Throws InvalidArgument if the pair is absent.
  void RemoveEdge(NodeId u, NodeId v);

  std::uint64_t Degree(NodeId v) const;
  Attribute attribute(NodeId v) const;
  std::uint64_t Multiplicity(NodeId u, NodeId v) const;

  // Neighbours of v with multiplicity, ordered by neighbour id.
  const std::map<NodeId, std::uint64_t>& Neighbors(NodeId v) const;

  std::size_t num_nodes() const { return attributes_.size(); }
  // M: sum of multiplicities over all undirected pairs.
  std::uint64_t num_edges() const { return total_multiplicity_; }
  // Number of distinct adjacent pairs.
  std::size_t num_pairs() const { return num_pairs_; }
  std::uint64_t MaxDegree() const;

  const std::vector<Attribute>& attributes() const { return attributes_; }

  // Calls fn(u, v, w) once per adjacent pair with u < v, in lexicographic
  // order.
  template <typename Fn>
  void ForEachEdge(Fn&& fn) const {
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
      for (const auto& [v, w] : adjacency_[u]) {
        if (u < v) fn(u, v, w);
      }
    }
  }

  // Optional external ids (from a loaded file). Empty when ids are dense.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Structural fingerprint (FNV-1a over attributes and canonical edges).
  std::uint64_t Fingerprint() const;

  // Same graph with node i renamed to perm[i].
  AttributedMultigraph Relabeled(const std::vector<NodeId>& perm) const;
  // Same topology with every attribute flipped.
  AttributedMultigraph AttributesSwapped() const;

  friend bool operator==(const AttributedMultigraph& a,
                         const AttributedMultigraph& b) {
    return a.attributes_ == b.attributes_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void CheckNode(NodeId v) const;

  std::vector<Attribute> attributes_;
  std::vector<std::map<NodeId, std::uint64_t>> adjacency_;
  std::vector<std::uint64_t> degrees_;
  std::uint64_t total_multiplicity_ = 0;
  std::size_t num_pairs_ = 0;
  std::vector<std::string> labels_;
};

struct GraphSnapshot {
  std::string tag;
  AttributedMultigraph graph;
};

// Edge file: `u v [w]` per line, `#` comments. Attribute file: `node attr`.
// Node tokens are mapped to dense ids: numeric order when every attribute-file
// token is a non-negative integer, file order otherwise.
AttributedMultigraph LoadGraph(const std::filesystem::path& edge_file,
                               const std::filesystem::path& attribute_file);

// Writes `u v w` lines (u < v) and `node attr` lines using dense ids. When
// the graph carries external labels, a `<attribute_file>.ids` sidecar maps
// dense ids back to them.
void SaveGraph(const AttributedMultigraph& g,
               const std::filesystem::path& edge_file,
               const std::filesystem::path& attribute_file);

// Reads every `<tag>.edges` / `<tag>.attrs` pair in `dir`, tags sorted
// lexicographically.
std::vector<GraphSnapshot> LoadSnapshotSeries(const std::filesystem::path& dir);

}  // namespace gcmi

#endif  // GCMI_CORE_ATTRIBUTED_GRAPH_HPP_
