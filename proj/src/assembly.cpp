#include "specop/assembly.hpp"

#include <stdexcept>
#include <string>

namespace specop {

OrderedAssembly::OrderedAssembly(SegmentedPartition partition,
                                 std::vector<SimpleGraph> components)
    : partition_(std::move(partition)), components_(std::move(components)) {
  if (components_.size() != partition_.block_count())
    throw std::invalid_argument("one component per block required");
  for (std::size_t j = 0; j < components_.size(); ++j)
    if (components_[j].vertices() != partition_.block(j))
      throw std::invalid_argument("component " + std::to_string(j) +
                                  " does not match its segment");
}

OrderedAssembly OrderedAssembly::of(std::vector<SimpleGraph> components) {
  if (components.empty())
    throw std::invalid_argument("assembly needs at least one component");
  std::vector<LinearOrder> orders;
  std::vector<std::size_t> sizes;
  for (const auto& g : components) {
    orders.push_back(g.vertices());
    sizes.push_back(g.vertex_count());
  }
  SegmentedPartition pi(LinearOrder::concat(orders), std::move(sizes));
  return OrderedAssembly(std::move(pi), std::move(components));
}

const SimpleGraph& OrderedAssembly::component(std::size_t j) const {
  if (j >= components_.size()) throw std::out_of_range("block index out of range");
  return components_[j];
}

namespace {

void check_external(const OrderedAssembly& a, const SimpleGraph& h) {
  if (h.vertex_count() != a.block_count())
    throw std::invalid_argument(
        "external graph order must equal the block count of the assembly");
}

}  // namespace

SimpleGraph compose(const OrderedAssembly& a, const SimpleGraph& h) {
  check_external(a, h);
  const SegmentedPartition& pi = a.partition();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 0; j < a.block_count(); ++j) {
    const std::size_t off = pi.block_begin(j);
    for (auto [u, v] : a.component(j).edges()) edges.emplace_back(off + u, off + v);
  }
  for (auto [r, s] : h.edges())
    for (std::size_t u = pi.block_begin(r); u < pi.block_end(r); ++u)
      for (std::size_t v = pi.block_begin(s); v < pi.block_end(s); ++v)
        edges.emplace_back(u, v);
  return SimpleGraph(pi.parent(), std::move(edges));
}

IntMatrix blocked_adjacency(const OrderedAssembly& a, const SimpleGraph& h) {
  check_external(a, h);
  const SegmentedPartition& pi = a.partition();
  const std::size_t n = pi.parent().size();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < a.block_count(); ++j) {
    const std::size_t off = pi.block_begin(j);
    const IntMatrix blk = adjacency_matrix(a.component(j));
    for (std::size_t u = 0; u < blk.rows(); ++u)
      for (std::size_t v = 0; v < blk.cols(); ++v) m(off + u, off + v) = blk(u, v);
  }
  for (auto [r, s] : h.edges())
    for (std::size_t u = pi.block_begin(r); u < pi.block_end(r); ++u)
      for (std::size_t v = pi.block_begin(s); v < pi.block_end(s); ++v)
        m(u, v) = m(v, u) = 1;
  return m;
}

IntMatrix blocked_laplacian(const OrderedAssembly& a, const SimpleGraph& h) {
  check_external(a, h);
  const SegmentedPartition& pi = a.partition();
  const std::size_t n = pi.parent().size();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < a.block_count(); ++j) {
    const std::size_t off = pi.block_begin(j);
    const IntMatrix blk = laplacian_matrix(a.component(j));
    const auto ext = static_cast<std::int64_t>(external_valency(pi, h, j));
    for (std::size_t u = 0; u < blk.rows(); ++u) {
      for (std::size_t v = 0; v < blk.cols(); ++v) m(off + u, off + v) = blk(u, v);
      m(off + u, off + u) += ext;
    }
  }
  for (auto [r, s] : h.edges())
    for (std::size_t u = pi.block_begin(r); u < pi.block_end(r); ++u)
      for (std::size_t v = pi.block_begin(s); v < pi.block_end(s); ++v)
        m(u, v) = m(v, u) = -1;
  return m;
}

std::vector<SimpleGraph> subtree_evaluations(const EnrichedTree& t) {
  const SchroderTree& tree = t.tree();
  std::vector<SimpleGraph> evals;
  evals.reserve(tree.vertex_count());
  for (SchroderTree::Vertex v = 0; v < tree.vertex_count(); ++v)
    evals.push_back(SimpleGraph::edgeless(tree.leaves_of(v)));
  // Children precede nothing in preorder, so walk vertices in reverse.
  for (SchroderTree::Vertex v = tree.vertex_count(); v-- > 0;) {
    if (tree.is_leaf(v)) continue;
    std::vector<SimpleGraph> parts;
    for (SchroderTree::Vertex c : tree.children(v)) parts.push_back(evals[c]);
    evals[v] = compose(OrderedAssembly::of(std::move(parts)), t.external_graph(v));
  }
  return evals;
}

SimpleGraph eval_tree(const EnrichedTree& t) {
  return subtree_evaluations(t)[t.tree().root()];
}

OrderedAssembly child_assembly(const EnrichedTree& t, EnrichedTree::Vertex v,
                               const std::vector<SimpleGraph>& evals) {
  std::vector<SimpleGraph> parts;
  for (SchroderTree::Vertex c : t.tree().children(v)) parts.push_back(evals[c]);
  return OrderedAssembly::of(std::move(parts));
}

EnrichedTree complement_tree(const EnrichedTree& t) {
  std::vector<SimpleGraph> graphs;
  graphs.reserve(t.external_graphs().size());
  for (const SimpleGraph& g : t.external_graphs()) graphs.push_back(complement(g));
  return EnrichedTree(t.tree(), std::move(graphs));
}

std::optional<OrderedAssembly> components_as_assembly(const SimpleGraph& g) {
  const auto comps = components(g);
  std::vector<SimpleGraph> parts;
  for (const auto& c : comps) {
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != c[i - 1] + 1) return std::nullopt;  // not a segment
    parts.push_back(induced_subgraph(g, c));
  }
  return OrderedAssembly::of(std::move(parts));
}

std::optional<SimpleGraph> divides(const OrderedAssembly& fine,
                                   const OrderedAssembly& coarse) {
  if (fine.partition().parent() != coarse.partition().parent())
    throw std::invalid_argument("assemblies must share the underlying order");
  for (const auto& c : fine.components())
    if (!is_connected(c))
      throw std::invalid_argument("divisibility requires connected components");
  for (const auto& c : coarse.components())
    if (!is_connected(c))
      throw std::invalid_argument("divisibility requires connected components");

  const SegmentedPartition& pf = fine.partition();
  const std::size_t k = fine.block_count();
  const SimpleGraph target = compose(coarse, SimpleGraph::edgeless(LinearOrder::numbered(
                                                 coarse.block_count(), "b")));

  // Fine blocks may not straddle coarse boundaries.
  for (std::size_t j = 0; j < k; ++j)
    if (coarse.partition().block_of(pf.block_begin(j)) !=
        coarse.partition().block_of(pf.block_end(j) - 1))
      return std::nullopt;

  // Component edges must match the target inside each fine block.
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t off = pf.block_begin(j);
    for (std::size_t u = off; u < pf.block_end(j); ++u)
      for (std::size_t v = u + 1; v < pf.block_end(j); ++v)
        if (target.has_edge(u, v) != fine.component(j).has_edge(u - off, v - off))
          return std::nullopt;
  }

  // Cross patterns must be complete or empty; complete pairs become h-edges.
  std::vector<std::pair<std::size_t, std::size_t>> h_edges;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      std::size_t found = 0;
      for (std::size_t u = pf.block_begin(r); u < pf.block_end(r); ++u)
        for (std::size_t v = pf.block_begin(s); v < pf.block_end(s); ++v)
          found += target.has_edge(u, v) ? 1 : 0;
      const std::size_t full = pf.block_size(r) * pf.block_size(s);
      if (found == full)
        h_edges.emplace_back(r, s);
      else if (found != 0)
        return std::nullopt;
    }
  }
  return SimpleGraph(LinearOrder::numbered(k, "b"), std::move(h_edges));
}

}  // namespace specop
