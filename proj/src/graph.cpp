#include "specop/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace specop {

SimpleGraph::SimpleGraph(LinearOrder vertices,
                         std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  adj_.assign(n * n, 0);
  edges_.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (i >= n || j >= n) throw std::invalid_argument("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("loop edge rejected");
    if (i > j) std::swap(i, j);
    if (adj_[i * n + j]) throw std::invalid_argument("duplicate edge rejected");
    adj_[i * n + j] = adj_[j * n + i] = 1;
    edges_.emplace_back(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
}

SimpleGraph SimpleGraph::complete(LinearOrder vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return SimpleGraph(std::move(vertices), std::move(edges));
}

SimpleGraph SimpleGraph::edgeless(LinearOrder vertices) {
  return SimpleGraph(std::move(vertices));
}

SimpleGraph SimpleGraph::cycle(LinearOrder vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return SimpleGraph(std::move(vertices), std::move(edges));
}

SimpleGraph SimpleGraph::path(LinearOrder vertices) {
  const std::size_t n = vertices.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(std::move(vertices), std::move(edges));
}

bool SimpleGraph::has_edge(std::size_t i, std::size_t j) const {
  const std::size_t n = vertices_.size();
  if (i >= n || j >= n) throw std::out_of_range("vertex index out of range");
  return adj_[i * n + j] != 0;
}

std::size_t SimpleGraph::degree(std::size_t i) const {
  const std::size_t n = vertices_.size();
  if (i >= n) throw std::out_of_range("vertex index out of range");
  std::size_t d = 0;
  for (std::size_t j = 0; j < n; ++j) d += adj_[i * n + j];
  return d;
}

IntMatrix adjacency_matrix(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix a(n, n);
  for (auto [i, j] : g.edges()) a(i, j) = a(j, i) = 1;
  return a;
}

IntMatrix degree_matrix(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    d(i, i) = static_cast<std::int64_t>(g.degree(i));
  return d;
}

IntMatrix laplacian_matrix(const SimpleGraph& g) {
  return degree_matrix(g) - adjacency_matrix(g);
}

std::optional<std::size_t> regularity(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (std::size_t i = 1; i < n; ++i)
    if (g.degree(i) != k) return std::nullopt;
  return k;
}

std::vector<std::vector<std::size_t>> components(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] < 0 && g.has_edge(u, v)) {
          comp[v] = next;
          q.push(v);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<std::size_t>> out(next);
  for (std::size_t v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

std::size_t component_count(const SimpleGraph& g) { return components(g).size(); }

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("connectivity of the empty graph is undefined");
  return component_count(g) == 1;
}

SimpleGraph complement(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
  return SimpleGraph(g.vertices(), std::move(edges));
}

SimpleGraph induced_subgraph(const SimpleGraph& g,
                             const std::vector<std::size_t>& keep) {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  std::vector<std::size_t> pos(g.vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(g.vertices().label(keep[i]));
    pos[keep[i]] = i;
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [i, j] : g.edges())
    if (pos[i] != static_cast<std::size_t>(-1) && pos[j] != static_cast<std::size_t>(-1))
      edges.emplace_back(pos[i], pos[j]);
  return SimpleGraph(LinearOrder(std::move(labels)), std::move(edges));
}

std::size_t external_valency(const SegmentedPartition& pi, const SimpleGraph& h,
                             std::size_t block) {
  if (h.vertex_count() != pi.block_count())
    throw std::invalid_argument("external graph order must match block count");
  if (block >= pi.block_count())
    throw std::out_of_range("block index out of range");
  std::size_t total = 0;
  for (std::size_t s = 0; s < pi.block_count(); ++s)
    if (s != block && h.has_edge(s, block)) total += pi.block_size(s);
  return total;
}

}  // namespace specop
