#include "specop/schroder_tree.hpp"

#include <stdexcept>

namespace specop {

const SchroderTree::Node& SchroderTree::node(Vertex v) const {
  if (v >= nodes_.size()) throw std::out_of_range("unknown tree vertex handle");
  return nodes_[v];
}

SchroderTree::Vertex SchroderTree::child(Vertex v, std::size_t i) const {
  const auto& c = node(v).children;
  if (i >= c.size()) throw std::out_of_range("child index out of range");
  return c[i];
}

std::optional<SchroderTree::Vertex> SchroderTree::parent(Vertex v) const {
  const Node& n = node(v);
  if (n.parent == npos) return std::nullopt;
  return n.parent;
}

SchroderTree SchroderTree::leaf(std::string label) {
  if (label.empty()) throw std::invalid_argument("leaf label must be nonempty");
  SchroderTree t;
  Node n;
  n.is_leaf = true;
  n.label = std::move(label);
  t.nodes_.push_back(std::move(n));
  t.finish();
  return t;
}

void SchroderTree::copy_subtree(const SchroderTree& src, Vertex v, Vertex parent,
                                std::size_t depth, std::vector<Node>& out) {
  const Node& n = src.node(v);
  const Vertex id = out.size();
  out.push_back(Node{n.is_leaf, n.label, {}, parent, depth, 0, 0});
  for (Vertex c : n.children) {
    out[id].children.push_back(out.size());
    copy_subtree(src, c, id, depth + 1, out);
  }
}

SchroderTree SchroderTree::internal(std::vector<SchroderTree> children) {
  if (children.size() < 2)
    throw std::invalid_argument("internal vertex needs at least two children");
  SchroderTree t;
  t.nodes_.push_back(Node{});
  for (const SchroderTree& c : children) {
    t.nodes_[0].children.push_back(t.nodes_.size());
    copy_subtree(c, 0, 0, 1, t.nodes_);
  }
  t.finish();
  return t;
}

void SchroderTree::finish() {
  std::vector<std::string> labels;
  // Preorder visits a subtree's leaves consecutively, so each vertex's leaf
  // range is an interval; fill ranges bottom-up along the recursion.
  auto walk = [&](auto&& self, Vertex v) -> void {
    Node& n = nodes_[v];
    if (n.is_leaf) {
      n.leaf_begin = labels.size();
      labels.push_back(n.label);
      n.leaf_end = labels.size();
      return;
    }
    n.leaf_begin = labels.size();
    for (Vertex c : n.children) self(self, c);
    n.leaf_end = labels.size();
  };
  walk(walk, 0);
  leaves_ = LinearOrder(std::move(labels));  // rejects duplicate labels
}

LinearOrder SchroderTree::leaves_of(Vertex v) const {
  const Node& n = node(v);
  return leaves_.segment(n.leaf_begin, n.leaf_end);
}

SegmentedPartition SchroderTree::pi_of(Vertex v) const {
  const Node& n = node(v);
  if (n.is_leaf)
    throw std::invalid_argument("pi_of is defined on internal vertices only");
  std::vector<std::size_t> sizes;
  sizes.reserve(n.children.size());
  for (Vertex c : n.children)
    sizes.push_back(node(c).leaf_end - node(c).leaf_begin);
  return SegmentedPartition(leaves_of(v), std::move(sizes));
}

std::vector<SchroderTree::Vertex> SchroderTree::internal_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < nodes_.size(); ++v)
    if (!nodes_[v].is_leaf) out.push_back(v);
  return out;
}

bool SchroderTree::operator==(const SchroderTree& o) const {
  if (nodes_.size() != o.nodes_.size()) return false;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    const Node& a = nodes_[v];
    const Node& b = o.nodes_[v];
    if (a.is_leaf != b.is_leaf || a.label != b.label || a.children != b.children)
      return false;
  }
  return true;
}

EnrichedTree::EnrichedTree(SchroderTree tree, std::vector<SimpleGraph> graphs)
    : tree_(std::move(tree)), graphs_(std::move(graphs)) {
  const auto internals = tree_.internal_vertices();
  if (graphs_.size() != internals.size())
    throw std::invalid_argument("one external graph per internal vertex required");
  graph_index_.assign(tree_.vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < internals.size(); ++i) {
    const Vertex v = internals[i];
    if (graphs_[i].vertex_count() != tree_.child_count(v))
      throw std::invalid_argument(
          "external graph order must equal the child count of its vertex");
    graph_index_[v] = i;
  }
}

const SimpleGraph& EnrichedTree::external_graph(Vertex v) const {
  if (v >= graph_index_.size() || graph_index_[v] == static_cast<std::size_t>(-1))
    throw std::invalid_argument("vertex carries no external graph");
  return graphs_[graph_index_[v]];
}

std::size_t external_valency_sum(const EnrichedTree& t, EnrichedTree::Vertex w) {
  const SchroderTree& tree = t.tree();
  std::size_t total = 0;
  EnrichedTree::Vertex v = w;
  for (auto p = tree.parent(v); p; v = *p, p = tree.parent(v)) {
    const SimpleGraph& h = t.external_graph(*p);
    const auto& kids = tree.children(*p);
    std::size_t my_block = 0;
    for (std::size_t i = 0; i < kids.size(); ++i)
      if (kids[i] == v) my_block = i;
    for (std::size_t i = 0; i < kids.size(); ++i)
      if (h.has_edge(i, my_block))
        total += tree.leaf_end(kids[i]) - tree.leaf_begin(kids[i]);
  }
  return total;
}

}  // namespace specop
