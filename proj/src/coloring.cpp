#include "specop/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "specop/errors.hpp"
#include "specop/factorization.hpp"

namespace specop {

EdgeColoring::EdgeColoring(SimpleGraph graph, std::vector<std::size_t> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
  if (colors_.size() != graph_.edge_count())
    throw std::invalid_argument("one colour per edge required");
  for (std::size_t c : colors_)
    if (c == 0) throw std::invalid_argument("colours must be positive");
}

std::size_t EdgeColoring::color(std::size_t edge_index) const {
  if (edge_index >= colors_.size())
    throw std::out_of_range("edge index out of range");
  return colors_[edge_index];
}

std::size_t EdgeColoring::color_of(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  const auto& edges = graph_.edges();
  const auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v))
    throw std::invalid_argument("no such edge");
  return colors_[static_cast<std::size_t>(it - edges.begin())];
}

std::size_t EdgeColoring::max_color() const {
  std::size_t m = 0;
  for (std::size_t c : colors_) m = std::max(m, c);
  return m;
}

EdgeColoring coloring_from_tree(const EnrichedTree& t) {
  const SchroderTree& tree = t.tree();
  const SimpleGraph g = eval_tree(t);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_edge;
  for (auto v : tree.internal_vertices()) {
    const std::size_t col = tree.depth(v) + 1;
    const auto& kids = tree.children(v);
    for (auto [b1, b2] : t.external_graph(v).edges())
      for (std::size_t x = tree.leaf_begin(kids[b1]); x < tree.leaf_end(kids[b1]); ++x)
        for (std::size_t y = tree.leaf_begin(kids[b2]); y < tree.leaf_end(kids[b2]); ++y)
          by_edge[{std::min(x, y), std::max(x, y)}] = col;
  }
  std::vector<std::size_t> colors;
  colors.reserve(g.edge_count());
  for (auto e : g.edges()) colors.push_back(by_edge.at(e));
  return EdgeColoring(g, std::move(colors));
}

SimpleGraph level_subgraph(const EdgeColoring& c, std::size_t level) {
  if (level == 0) throw std::invalid_argument("levels start at 1");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto& all = c.graph().edges();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (c.color(i) >= level) edges.push_back(all[i]);
  return SimpleGraph(c.graph().vertices(), std::move(edges));
}

AdmissibilityResult is_admissible(const EdgeColoring& c) {
  const SimpleGraph& g = c.graph();
  if (!is_connected(g))
    throw std::invalid_argument("admissibility is defined on connected graphs");

  // Colours around each vertex must reach down one step at a time.
  const std::size_t n = g.vertex_count();
  std::vector<std::set<std::size_t>> incident(n);
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].first].insert(c.color(i));
    incident[edges[i].second].insert(c.color(i));
  }
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t col : incident[v])
      if (col >= 2 && !incident[v].count(col - 1))
        return {false, "vertex " + std::to_string(v) + " has a colour-" +
                           std::to_string(col) + " edge but none of colour " +
                           std::to_string(col - 1)};

  std::set<std::size_t> image(c.colors().begin(), c.colors().end());
  for (std::size_t i : image) {
    if (i < 2) continue;
    const auto finer = components_as_assembly(level_subgraph(c, i));
    const auto coarser = components_as_assembly(level_subgraph(c, i - 1));
    if (!finer || !coarser)
      return {false, "components of level " + std::to_string(i) +
                         " or " + std::to_string(i - 1) + " are not segments"};
    if (!divides(*finer, *coarser))
      return {false, "level " + std::to_string(i) + " does not divide level " +
                         std::to_string(i - 1)};
  }
  return {true, ""};
}

std::vector<QuotientComponent> quotient_data(const EdgeColoring& c,
                                             std::size_t level) {
  if (level == 0) throw std::invalid_argument("levels start at 1");
  if (const auto adm = is_admissible(c); !adm)
    throw AdmissibilityError(adm.reason);

  const SimpleGraph& g = c.graph();
  const SimpleGraph g_i = level_subgraph(c, level);
  const auto fine = components_as_assembly(level_subgraph(c, level + 1));
  if (!fine) throw AdmissibilityError("level components are not segments");

  const std::size_t k = fine->block_count();
  std::set<std::pair<std::size_t, std::size_t>> qedges;
  for (auto [u, v] : g_i.edges()) {
    const std::size_t bu = fine->partition().block_of(u);
    const std::size_t bv = fine->partition().block_of(v);
    if (bu != bv) qedges.insert({std::min(bu, bv), std::max(bu, bv)});
  }
  const SimpleGraph quotient(LinearOrder::numbered(k, "q"),
                             {qedges.begin(), qedges.end()});

  std::vector<QuotientComponent> out;
  for (const auto& comp : components(quotient)) {
    if (comp.size() < 2) continue;  // singular quotient components drop out
    for (std::size_t i = 1; i < comp.size(); ++i)
      if (comp[i] != comp[i - 1] + 1)
        throw AdmissibilityError("quotient component blocks are not consecutive");
    std::vector<SimpleGraph> parts;
    for (std::size_t b : comp) parts.push_back(fine->component(b));
    OrderedAssembly sub = OrderedAssembly::of(std::move(parts));
    const SimpleGraph h = induced_subgraph(quotient, comp);

    // N_h: vertices joined by lower-coloured edges to the whole union.
    const std::size_t u_begin = fine->partition().block_begin(comp.front());
    const std::size_t u_end = fine->partition().block_end(comp.back());
    std::size_t external = 0;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      if (x >= u_begin && x < u_end) continue;
      bool all = true;
      for (std::size_t u = u_begin; all && u < u_end; ++u)
        all = g.has_edge(x, u) && c.color_of(x, u) < level;
      if (all) ++external;
    }

    SimpleGraph composed = compose(sub, h);
    auto reg = regularity(composed);
    out.push_back(QuotientComponent{h, std::move(sub), external,
                                    std::move(composed), reg});
  }
  return out;
}

SpectrumWord colored_adjacency_spectrum(const EdgeColoring& c, double tol) {
  if (c.graph().vertex_count() < 2)
    throw std::invalid_argument("colouring factorization needs >= 2 vertices");
  SpectrumWord word(tol);
  std::vector<double> divisors;
  for (std::size_t i = 1; i <= c.max_color(); ++i) {
    for (const auto& qc : quotient_data(c, i)) {
      word = word.times(eig_sym(reduced_adjacency(qc.sub_assembly, qc.quotient), tol));
      for (const auto& block : qc.sub_assembly.components()) {
        if (block.vertex_count() < 2) continue;
        const auto r = regularity(block);
        if (!r) throw RegularityError("level block is not regular");
        divisors.push_back(static_cast<double>(*r));
      }
    }
  }
  for (double d : divisors) word = word.divided_by(d);
  return word;
}

SpectrumWord colored_laplacian_spectrum(const EdgeColoring& c, double tol) {
  if (c.graph().vertex_count() < 2)
    throw std::invalid_argument("colouring factorization needs >= 2 vertices");
  SpectrumWord word(tol);
  for (std::size_t i = 1; i <= c.max_color(); ++i) {
    for (const auto& qc : quotient_data(c, i)) {
      const SpectrumWord part = eig_sym(
          reduced_laplacian(qc.sub_assembly.partition(), qc.quotient), tol);
      if (i == 1)
        word = word.times(part);
      else
        word = word.times(part.phi_shift(static_cast<double>(qc.external_count)));
    }
  }
  return word;
}

}  // namespace specop
