#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "specop/graph.hpp"
#include "specop/linear_order.hpp"
#include "specop/matrix.hpp"
#include "specop/schroder_tree.hpp"

namespace specop {

// One simple graph per segment of a segmented partition, each component's
// vertex order equal to its segment.
class OrderedAssembly {
 public:
  OrderedAssembly(SegmentedPartition partition, std::vector<SimpleGraph> components);

  // Builds the partition by concatenating the component orders.
  static OrderedAssembly of(std::vector<SimpleGraph> components);

  const SegmentedPartition& partition() const { return partition_; }
  std::size_t block_count() const { return components_.size(); }
  const SimpleGraph& component(std::size_t j) const;
  const std::vector<SimpleGraph>& components() const { return components_; }

 private:
  SegmentedPartition partition_;
  std::vector<SimpleGraph> components_;
};

// Generalized composition: keep every component edge and join all vertex
// pairs across blocks that are adjacent in the external graph h.
SimpleGraph compose(const OrderedAssembly& a, const SimpleGraph& h);

// Block-matrix forms of the composed adjacency and Laplacian. Constructed
// directly from the blocks, never from compose(); tests pin the equality.
IntMatrix blocked_adjacency(const OrderedAssembly& a, const SimpleGraph& h);
IntMatrix blocked_laplacian(const OrderedAssembly& a, const SimpleGraph& h);

// (A o_pi B) scales the (i, j) block of B by A_ij.
template <class T>
Matrix<T> partitioned_hadamard(const Matrix<T>& a, const Matrix<T>& b,
                               const SegmentedPartition& pi) {
  if (a.rows() != a.cols() || a.rows() != pi.block_count())
    throw std::invalid_argument("left factor must be k x k over the partition");
  if (b.rows() != b.cols() || b.rows() != pi.parent().size())
    throw std::invalid_argument("right factor must be n x n over the order");
  Matrix<T> out(b.rows(), b.cols());
  for (std::size_t u = 0; u < b.rows(); ++u) {
    const std::size_t bu = pi.block_of(u);
    for (std::size_t v = 0; v < b.cols(); ++v)
      out(u, v) = a(bu, pi.block_of(v)) * b(u, v);
  }
  return out;
}

// Evaluates every subtree product; index is the tree vertex handle.
std::vector<SimpleGraph> subtree_evaluations(const EnrichedTree& t);

// The iterated operad product over the whole tree.
SimpleGraph eval_tree(const EnrichedTree& t);

// The assembly of evaluated child subtrees at an internal vertex.
OrderedAssembly child_assembly(const EnrichedTree& t, EnrichedTree::Vertex v,
                               const std::vector<SimpleGraph>& evals);

// Complements every external graph; evaluation then commutes with graph
// complement (the operad automorphism).
EnrichedTree complement_tree(const EnrichedTree& t);

// Splits a graph into the ordered assembly of its connected components.
// Requires every component to occupy a contiguous vertex segment.
std::optional<OrderedAssembly> components_as_assembly(const SimpleGraph& g);

// Some(h) iff composing `fine` under h reproduces `coarse` exactly; h lives on
// fine's blocks. Both assemblies must consist of connected components over the
// same linear order.
std::optional<SimpleGraph> divides(const OrderedAssembly& fine,
                                   const OrderedAssembly& coarse);

}  // namespace specop
