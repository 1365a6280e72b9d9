#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specop/graph.hpp"
#include "specop/linear_order.hpp"

namespace specop {

// Plane tree with every internal vertex carrying at least two children and
// leaves labelled left to right by a linear order. Vertex handles are stable
// indices into the depth-first preorder (root = 0).
class SchroderTree {
 public:
  using Vertex = std::size_t;

  static SchroderTree leaf(std::string label);
  static SchroderTree internal(std::vector<SchroderTree> children);

  Vertex root() const { return 0; }
  std::size_t vertex_count() const { return nodes_.size(); }
  bool is_leaf(Vertex v) const { return node(v).is_leaf; }
  bool is_internal(Vertex v) const { return !node(v).is_leaf; }
  std::size_t child_count(Vertex v) const { return node(v).children.size(); }
  Vertex child(Vertex v, std::size_t i) const;
  const std::vector<Vertex>& children(Vertex v) const { return node(v).children; }
  std::optional<Vertex> parent(Vertex v) const;
  std::size_t depth(Vertex v) const { return node(v).depth; }

  std::size_t leaf_count() const { return leaves_.size(); }
  const LinearOrder& leaves() const { return leaves_; }
  // Position range [begin, end) of the subtree's leaves within leaves().
  std::size_t leaf_begin(Vertex v) const { return node(v).leaf_begin; }
  std::size_t leaf_end(Vertex v) const { return node(v).leaf_end; }

  // The linear suborder of leaves under v, left to right.
  LinearOrder leaves_of(Vertex v) const;

  // The segmented partition of leaves_of(v) induced by the branching at v.
  // Throws std::invalid_argument when v is a leaf.
  SegmentedPartition pi_of(Vertex v) const;

  // All internal vertices in depth-first preorder (root first).
  std::vector<Vertex> internal_vertices() const;

  bool operator==(const SchroderTree& o) const;

 private:
  struct Node {
    bool is_leaf = false;
    std::string label;  // leaves only
    std::vector<Vertex> children;
    Vertex parent = npos;
    std::size_t depth = 0;
    std::size_t leaf_begin = 0;
    std::size_t leaf_end = 0;
  };

  static constexpr Vertex npos = static_cast<Vertex>(-1);

  const Node& node(Vertex v) const;
  static void copy_subtree(const SchroderTree& src, Vertex v, Vertex parent,
                           std::size_t depth, std::vector<Node>& out);
  void finish();

  std::vector<Node> nodes_;
  LinearOrder leaves_;
};

// A Schröder tree whose internal vertices each carry an external simple graph
// with one vertex per child block, in child order.
class EnrichedTree {
 public:
  using Vertex = SchroderTree::Vertex;

  // `graphs` aligns with tree.internal_vertices() order.
  EnrichedTree(SchroderTree tree, std::vector<SimpleGraph> graphs);

  const SchroderTree& tree() const { return tree_; }
  const SimpleGraph& external_graph(Vertex v) const;
  const std::vector<SimpleGraph>& external_graphs() const { return graphs_; }

  bool operator==(const EnrichedTree& o) const {
    return tree_ == o.tree_ && graphs_ == o.graphs_;
  }

 private:
  SchroderTree tree_;
  std::vector<SimpleGraph> graphs_;        // internal preorder
  std::vector<std::size_t> graph_index_;   // vertex -> index into graphs_
};

// N_rw: the accumulated external valency of the subtree block at w, summed
// over the composition levels along the root path. Equals, on the evaluated
// graph, the number of vertices adjacent to every leaf under w. Root gives 0.
std::size_t external_valency_sum(const EnrichedTree& t, EnrichedTree::Vertex w);

}  // namespace specop
