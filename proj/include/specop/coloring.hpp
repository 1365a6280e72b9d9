#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specop/assembly.hpp"
#include "specop/graph.hpp"
#include "specop/schroder_tree.hpp"
#include "specop/spectrum.hpp"

namespace specop {

// A positive-integer colour per edge of a simple graph.
class EdgeColoring {
 public:
  // `colors` aligns with graph.edges(); all colours >= 1.
  EdgeColoring(SimpleGraph graph, std::vector<std::size_t> colors);

  const SimpleGraph& graph() const { return graph_; }
  std::size_t color(std::size_t edge_index) const;
  std::size_t color_of(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& colors() const { return colors_; }
  std::size_t max_color() const;

 private:
  SimpleGraph graph_;
  std::vector<std::size_t> colors_;
};

// Colours every edge of the evaluated graph with depth(v) + 1, where v is the
// internal vertex whose product created the edge (root colour 1).
EdgeColoring coloring_from_tree(const EnrichedTree& t);

// g(i): the spanning subgraph keeping the edges of colour >= i; g(1) = g.
SimpleGraph level_subgraph(const EdgeColoring& c, std::size_t level);

struct AdmissibilityResult {
  bool admissible = false;
  std::string reason;  // failure witness, empty when admissible
  explicit operator bool() const { return admissible; }
};

// Checks both admissibility conditions: each level divides the previous one,
// and colours increase one step at a time around every vertex. The graph must
// be connected.
AdmissibilityResult is_admissible(const EdgeColoring& c);

// One non-singular connected component h of the quotient g(i)/g(i+1).
struct QuotientComponent {
  SimpleGraph quotient;            // h, one vertex per g(i+1) block it groups
  OrderedAssembly sub_assembly;    // the grouped g(i+1) components
  std::size_t external_count = 0;  // N_h: vertices tied to the whole union by
                                   // edges of colour < i
  SimpleGraph composed;            // the composition of sub_assembly under h
  std::optional<std::size_t> composed_regularity;
};

// Quotient data of level i >= 1 for an admissible colouring.
std::vector<QuotientComponent> quotient_data(const EdgeColoring& c,
                                             std::size_t level);

// sigma(A(g)) through the colour levels; every level >= 2 must be an assembly
// of regular connected graphs.
SpectrumWord colored_adjacency_spectrum(const EdgeColoring& c,
                                        double tol = kDefaultTol);

// sigma(L(g)) through the colour levels of a connected graph.
SpectrumWord colored_laplacian_spectrum(const EdgeColoring& c,
                                        double tol = kDefaultTol);

}  // namespace specop
