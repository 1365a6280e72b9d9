#include "specop/factorization.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "specop/errors.hpp"

namespace specop {

RealMatrix rho_matrix(const SegmentedPartition& pi, const SimpleGraph& h) {
  const std::size_t k = pi.block_count();
  if (h.vertex_count() != k)
    throw std::invalid_argument("external graph order must match block count");
  RealMatrix m(k, k);
  for (auto [s, t] : h.edges()) {
    const double v = std::sqrt(static_cast<double>(pi.block_size(s)) *
                               static_cast<double>(pi.block_size(t)));
    m(s, t) = m(t, s) = v;
  }
  return m;
}

namespace {

std::size_t regularity_or_throw(const SimpleGraph& g, const std::string& what) {
  const auto r = regularity(g);
  if (!r) throw RegularityError(what + " is not regular");
  return *r;
}

}  // namespace

RealMatrix reduced_adjacency(const OrderedAssembly& a, const SimpleGraph& h) {
  RealMatrix m = rho_matrix(a.partition(), h);
  for (std::size_t j = 0; j < a.block_count(); ++j)
    m(j, j) = static_cast<double>(
        regularity_or_throw(a.component(j), "block " + std::to_string(j)));
  return m;
}

RealMatrix reduced_laplacian(const SegmentedPartition& pi, const SimpleGraph& h) {
  RealMatrix m = rho_matrix(pi, h);
  const std::size_t k = pi.block_count();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = -m(i, j);
  for (std::size_t j = 0; j < k; ++j)
    m(j, j) = static_cast<double>(external_valency(pi, h, j));
  return m;
}

RealMatrix reduced_laplacian(const OrderedAssembly& a, const SimpleGraph& h) {
  return reduced_laplacian(a.partition(), h);
}

SpectrumWord adjacency_single_level(const OrderedAssembly& a, const SimpleGraph& h,
                                    double tol) {
  SpectrumWord word = eig_sym(reduced_adjacency(a, h), tol);
  for (std::size_t j = 0; j < a.block_count(); ++j) {
    const SimpleGraph& g = a.component(j);
    const auto r = regularity_or_throw(g, "block " + std::to_string(j));
    word = word.times(
        eig_sym(adjacency_matrix(g), tol).divided_by(static_cast<double>(r)));
  }
  return word;
}

SpectrumWord laplacian_single_level(const OrderedAssembly& a, const SimpleGraph& h,
                                    double tol) {
  SpectrumWord word = eig_sym(reduced_laplacian(a, h), tol);
  for (std::size_t j = 0; j < a.block_count(); ++j) {
    const auto ext = static_cast<double>(external_valency(a.partition(), h, j));
    word = word.times(
        eig_sym(laplacian_matrix(a.component(j)), tol).phi_shift(ext));
  }
  return word;
}

SpectrumWord adjacency_iterated(const EnrichedTree& t, double tol) {
  const auto evals = subtree_evaluations(t);
  SpectrumWord word(tol);
  for (auto v : t.tree().internal_vertices()) {
    const OrderedAssembly a = child_assembly(t, v, evals);
    word = word.times(eig_sym(reduced_adjacency(a, t.external_graph(v)), tol));
  }
  for (auto v : t.tree().internal_vertices()) {
    if (v == t.tree().root()) continue;
    word = word.divided_by(static_cast<double>(
        regularity_or_throw(evals[v], "subtree evaluation")));
  }
  return word;
}

namespace {

void check_connected_enrichment(const EnrichedTree& t) {
  for (auto v : t.tree().internal_vertices())
    if (!is_connected(t.external_graph(v)))
      throw ConnectivityError("tree is not enriched with connected graphs");
}

}  // namespace

SpectrumWord laplacian_iterated(const EnrichedTree& t, double tol) {
  if (t.tree().leaf_count() < 2)
    throw std::invalid_argument("factorization needs at least two leaves");
  check_connected_enrichment(t);
  const SchroderTree& tree = t.tree();
  SpectrumWord word(tol);
  for (auto w : tree.internal_vertices()) {
    const SpectrumWord part =
        eig_sym(reduced_laplacian(tree.pi_of(w), t.external_graph(w)), tol);
    if (w == tree.root())
      word = word.times(part);
    else
      word = word.times(part.phi_shift(
          static_cast<double>(external_valency_sum(t, w))));
  }
  return word;
}

SpectrumWord complement_adjacency_iterated(const EnrichedTree& t, double tol) {
  const auto evals = subtree_evaluations(t);
  const std::size_t n = t.tree().leaf_count();
  const auto root_reg = regularity_or_throw(evals[t.tree().root()], "evaluation");
  SpectrumWord word = SpectrumWord::single(
      static_cast<double>(n) - static_cast<double>(root_reg) - 1.0, 1, tol);
  for (auto v : t.tree().internal_vertices()) {
    const OrderedAssembly a = child_assembly(t, v, evals);
    const auto reg_v = regularity_or_throw(evals[v], "subtree evaluation");
    const SpectrumWord part =
        eig_sym(reduced_adjacency(a, t.external_graph(v)), tol)
            .divided_by(static_cast<double>(reg_v))
            .affine(-1.0, -1.0);
    word = word.times(part);
  }
  return word;
}

SpectrumWord complement_laplacian_iterated(const EnrichedTree& t, double tol) {
  if (t.tree().leaf_count() < 2)
    throw std::invalid_argument("factorization needs at least two leaves");
  check_connected_enrichment(t);
  const SchroderTree& tree = t.tree();
  const double n = static_cast<double>(tree.leaf_count());
  SpectrumWord word = SpectrumWord::single(0.0, 1, tol);
  for (auto w : tree.internal_vertices()) {
    const SpectrumWord negated =
        eig_sym(reduced_laplacian(tree.pi_of(w), t.external_graph(w)), tol)
            .affine(-1.0, 0.0);
    const double shift =
        w == tree.root()
            ? n
            : n - static_cast<double>(external_valency_sum(t, w));
    word = word.times(negated.phi_shift(shift));
  }
  return word;
}

}  // namespace specop
