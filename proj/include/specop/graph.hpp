#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "specop/linear_order.hpp"
#include "specop/matrix.hpp"

namespace specop {

// A finite simple graph whose vertex set is a linear order. Edges are stored
// as index pairs {i, j} with i < j against the order.
class SimpleGraph {
 public:
  explicit SimpleGraph(LinearOrder vertices,
                       std::vector<std::pair<std::size_t, std::size_t>> edges = {});

  static SimpleGraph complete(LinearOrder vertices);
  static SimpleGraph edgeless(LinearOrder vertices);
  static SimpleGraph cycle(LinearOrder vertices);   // needs >= 3 vertices
  static SimpleGraph path(LinearOrder vertices);

  std::size_t vertex_count() const { return vertices_.size(); }
  const LinearOrder& vertices() const { return vertices_; }
  bool has_edge(std::size_t i, std::size_t j) const;
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t degree(std::size_t i) const;

  bool operator==(const SimpleGraph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

 private:
  LinearOrder vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;  // normalized, sorted
  std::vector<std::uint8_t> adj_;                            // n*n lookup
};

IntMatrix adjacency_matrix(const SimpleGraph& g);
IntMatrix degree_matrix(const SimpleGraph& g);
IntMatrix laplacian_matrix(const SimpleGraph& g);

// Some(k) iff every vertex has valency k.
std::optional<std::size_t> regularity(const SimpleGraph& g);

// True iff g has exactly one connected component. Throws on the empty graph.
bool is_connected(const SimpleGraph& g);

std::size_t component_count(const SimpleGraph& g);

// Vertex sets of the connected components, each sorted ascending, components
// ordered by smallest vertex.
std::vector<std::vector<std::size_t>> components(const SimpleGraph& g);

SimpleGraph complement(const SimpleGraph& g);

// Induced subgraph on a sorted ascending index subset; vertex order inherited.
SimpleGraph induced_subgraph(const SimpleGraph& g,
                             const std::vector<std::size_t>& keep);

// N_j: the number of vertices outside block j adjacent (through h) to every
// vertex of block j, i.e. the sum of the sizes of the h-neighbour blocks.
std::size_t external_valency(const SegmentedPartition& pi, const SimpleGraph& h,
                             std::size_t block);

}  // namespace specop
