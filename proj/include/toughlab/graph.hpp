#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "toughlab/errors.hpp"

namespace toughlab {

// Vertex sets are single machine words; 64 vertices is far beyond what the
// exhaustive searches ever touch.
inline constexpr int kMaxVertices = 64;

// Subset of {0,...,63} as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    s.bits_ = mask;
    return s;
  }

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.add(v);
    return s;
  }

  static VertexSet full(int n) {
    if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range");
    if (n == 64) return from_mask(~std::uint64_t{0});
    return from_mask((std::uint64_t{1} << n) - 1);
  }

  bool contains(int v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1u); }

  void add(int v) {
    check_range(v);
    bits_ |= std::uint64_t{1} << v;
  }

  void remove(int v) {
    check_range(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t mask() const { return bits_; }

  // Lowest vertex, or -1 when empty.
  int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  std::string str() const;

  friend VertexSet operator|(VertexSet a, VertexSet b) { return from_mask(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return from_mask(a.bits_ & b.bits_); }
  friend bool operator==(VertexSet, VertexSet) = default;

 private:
  static void check_range(int v) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex index out of range");
  }

  std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph on n labeled vertices, n <= 64,
// stored as one neighbor bit mask per vertex.
class Graph {
 public:
  // Duplicate edges collapse; self-loops and out-of-range endpoints are
  // rejected.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  // Trusted construction from adjacency masks (symmetry and loop-freeness
  // are still verified; cheap at these sizes).
  static Graph from_adjacency(int n, std::vector<std::uint64_t> adj);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
  int degree(int v) const { return neighbors(v).size(); }

  VertexSet neighbors(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex index out of range");
    return VertexSet::from_mask(adj_[static_cast<std::size_t>(v)]);
  }

  VertexSet vertex_set() const { return VertexSet::full(n_); }

  // Copy with one more edge; adding an existing edge is a no-op.
  Graph with_edge(int u, int v) const;

  // Sorted list of (u,v) with u < v.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Components of the subgraph induced on V \ removed, each a maximal
// connected piece, ordered by minimum vertex index.
std::vector<VertexSet> components(const Graph& g, VertexSet removed = {});

// Number of such components, without materializing them.
int count_components(const Graph& g, VertexSet removed = {});

int min_degree(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
Graph complement(const Graph& g);

// Part sizes n1 >= n2 >= ... >= ns, s >= 2, of a complete multipartite
// graph. Vertices are grouped into consecutive index blocks V1..Vs.
struct PartitionSpec {
  std::vector<int> parts;

  // Sorts the sizes non-increasingly and validates them.
  static PartitionSpec of(std::vector<int> parts);

  int total() const;                 // n
  int largest() const;               // n1
  int count_parts() const { return static_cast<int>(parts.size()); }  // s
  int largest_multiplicity() const;  // r = number of parts of size n1

  // Half-open vertex range [begin, end) of part i (1-based).
  std::pair<int, int> block(int part_index) const;
  VertexSet block_set(int part_index) const;

  std::string str() const;  // "3,3,2"
};

Graph complete_multipartite(const PartitionSpec& spec);

// The complete multipartite graph plus one edge inside part `part_index`
// (1-based, must be in {2,...,s}). Throws HypothesisError naming the
// violated clause when the construction's hypotheses fail.
Graph augment_multipartite(const PartitionSpec& spec, int part_index,
                           std::pair<int, int> inside);

}  // namespace toughlab
