#include "toughlab/graph.hpp"

#include <algorithm>
#include <numeric>

namespace toughlab {

std::string VertexSet::str() const {
  std::string out = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxVertices)
    throw InputError("vertex count must be between 1 and 64, got " + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    if (u == v) throw InputError("self-loop rejected at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  int deg_sum = 0;
  for (std::uint64_t row : g.adj_) deg_sum += std::popcount(row);
  g.m_ = deg_sum / 2;
  return g;
}

Graph Graph::from_adjacency(int n, std::vector<std::uint64_t> adj) {
  if (n < 1 || n > kMaxVertices) throw InputError("vertex count must be between 1 and 64");
  if (static_cast<int>(adj.size()) != n) throw InputError("adjacency size mismatch");
  const std::uint64_t full = VertexSet::full(n).mask();
  int deg_sum = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t row = adj[static_cast<std::size_t>(v)];
    if ((row & ~full) != 0) throw InputError("adjacency bit outside vertex range");
    if ((row >> v) & 1u) throw InputError("self-loop rejected at vertex " + std::to_string(v));
    deg_sum += std::popcount(row);
  }
  for (int v = 0; v < n; ++v)
    for (std::uint64_t b = adj[static_cast<std::size_t>(v)]; b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      if (!((adj[static_cast<std::size_t>(u)] >> v) & 1u))
        throw InputError("adjacency not symmetric");
    }
  Graph g;
  g.n_ = n;
  g.m_ = deg_sum / 2;
  g.adj_ = std::move(adj);
  return g;
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loop rejected");
  Graph g = *this;
  if (!g.has_edge(u, v)) {
    g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    ++g.m_;
  }
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u + 1 < n_; ++u) {
    const std::uint64_t above = ~std::uint64_t{0} << 1 << u;  // bits u+1..63
    for (std::uint64_t b = adj_[static_cast<std::size_t>(u)] & above; b != 0; b &= b - 1)
      out.emplace_back(u, std::countr_zero(b));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  std::uint64_t unseen = g.vertex_set().mask() & ~removed.mask();
  while (unseen != 0) {
    const int start = std::countr_zero(unseen);
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1)
        next |= g.neighbors(std::countr_zero(b)).mask();
      frontier = next & unseen & ~comp;
      comp |= frontier;
    }
    out.push_back(VertexSet::from_mask(comp));
    unseen &= ~comp;
  }
  return out;
}

int count_components(const Graph& g, VertexSet removed) {
  int count = 0;
  std::uint64_t unseen = g.vertex_set().mask() & ~removed.mask();
  while (unseen != 0) {
    const int start = std::countr_zero(unseen);
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1)
        next |= g.neighbors(std::countr_zero(b)).mask();
      frontier = next & unseen & ~comp;
      comp |= frontier;
    }
    ++count;
    unseen &= ~comp;
  }
  return count;
}

int min_degree(const Graph& g) {
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

bool is_connected(const Graph& g) { return count_components(g) == 1; }

bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const std::uint64_t full = VertexSet::full(n).mask();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    adj[static_cast<std::size_t>(v)] =
        full & ~g.neighbors(v).mask() & ~(std::uint64_t{1} << v);
  return Graph::from_adjacency(n, std::move(adj));
}

PartitionSpec PartitionSpec::of(std::vector<int> parts) {
  if (parts.size() < 2) throw InputError("a partition spec needs at least two parts");
  for (int p : parts)
    if (p < 1) throw InputError("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  PartitionSpec spec;
  spec.parts = std::move(parts);
  return spec;
}

int PartitionSpec::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int PartitionSpec::largest() const { return parts.front(); }

int PartitionSpec::largest_multiplicity() const {
  int r = 0;
  while (r < count_parts() && parts[static_cast<std::size_t>(r)] == parts[0]) ++r;
  return r;
}

std::pair<int, int> PartitionSpec::block(int part_index) const {
  if (part_index < 1 || part_index > count_parts())
    throw InputError("part index out of range");
  int begin = 0;
  for (int i = 0; i + 1 < part_index; ++i) begin += parts[static_cast<std::size_t>(i)];
  return {begin, begin + parts[static_cast<std::size_t>(part_index - 1)]};
}

VertexSet PartitionSpec::block_set(int part_index) const {
  auto [begin, end] = block(part_index);
  VertexSet s;
  for (int v = begin; v < end; ++v) s.add(v);
  return s;
}

std::string PartitionSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts[i]);
  }
  return out;
}

Graph complete_multipartite(const PartitionSpec& spec) {
  const int n = spec.total();
  if (n > kMaxVertices)
    throw CapacityError("complete multipartite graph would exceed 64 vertices");
  const std::uint64_t full = VertexSet::full(n).mask();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int i = 1; i <= spec.count_parts(); ++i) {
    const std::uint64_t block = spec.block_set(i).mask();
    auto [begin, end] = spec.block(i);
    for (int v = begin; v < end; ++v) adj[static_cast<std::size_t>(v)] = full & ~block;
  }
  return Graph::from_adjacency(n, std::move(adj));
}

Graph augment_multipartite(const PartitionSpec& spec, int part_index,
                           std::pair<int, int> inside) {
  if (spec.largest() < 3)
    throw HypothesisError("largest part must have at least 3 vertices (n1 >= 3)");
  if (part_index < 2 || part_index > spec.count_parts())
    throw HypothesisError("part index must lie in {2,...,s}, got " +
                          std::to_string(part_index));
  if (spec.parts[static_cast<std::size_t>(part_index - 1)] < 3)
    throw HypothesisError("augmented part must have at least 3 vertices, part " +
                          std::to_string(part_index) + " has " +
                          std::to_string(spec.parts[static_cast<std::size_t>(part_index - 1)]));
  if (spec.largest_multiplicity() == 1 && spec.parts[1] < 3)
    throw HypothesisError(
        "when the largest part is unique, the second part must have at least 3 "
        "vertices (n2 >= 3)");
  const VertexSet block = spec.block_set(part_index);
  auto [a, b] = inside;
  if (a == b || !block.contains(a) || !block.contains(b))
    throw HypothesisError("added edge must join two distinct vertices inside part " +
                          std::to_string(part_index));
  Graph base = complete_multipartite(spec);
  if (base.has_edge(a, b))
    throw HypothesisError("added pair is already an edge");
  return base.with_edge(a, b);
}

}  // namespace toughlab
