#pragma once

#include "specop/assembly.hpp"
#include "specop/matrix.hpp"
#include "specop/spectrum.hpp"

namespace specop {

// k x k symmetric matrix with sqrt(n_s * n_t) on the edges of h, 0 elsewhere.
RealMatrix rho_matrix(const SegmentedPartition& pi, const SimpleGraph& h);

// The reduced adjacency matrix of a factorization: block regularities on the
// diagonal, rho entries off it. Every component must be regular.
RealMatrix reduced_adjacency(const OrderedAssembly& a, const SimpleGraph& h);

// The reduced Laplacian-side matrix: external valencies N_j on the diagonal
// and -sqrt(n_i * n_j) on the edges of h. Needs only the block sizes.
RealMatrix reduced_laplacian(const SegmentedPartition& pi, const SimpleGraph& h);
RealMatrix reduced_laplacian(const OrderedAssembly& a, const SimpleGraph& h);

// sigma(A(g)) for g the one-level composition: each block word loses one copy
// of its regularity, and the reduced adjacency word supplies the new values.
SpectrumWord adjacency_single_level(const OrderedAssembly& a, const SimpleGraph& h,
                                    double tol = kDefaultTol);

// sigma(L(g)) for the one-level composition, via the phi shift of each block's
// Laplacian word times the reduced Laplacian word.
SpectrumWord laplacian_single_level(const OrderedAssembly& a, const SimpleGraph& h,
                                    double tol = kDefaultTol);

// sigma(A(eval)) over an enriched tree: the product of all reduced adjacency
// words, one per internal vertex, divided by the regularity of every non-root
// internal subtree evaluation.
SpectrumWord adjacency_iterated(const EnrichedTree& t, double tol = kDefaultTol);

// sigma(L(eval)) over a tree enriched with connected graphs: the root's
// reduced Laplacian word times phi_{N_rw} of every deeper one.
SpectrumWord laplacian_iterated(const EnrichedTree& t, double tol = kDefaultTol);

// sigma(A(complement(eval))): per vertex, remove the subtree regularity from
// the reduced adjacency word and map v -> -1 - v; close with the letter
// n - reg - 1.
SpectrumWord complement_adjacency_iterated(const EnrichedTree& t,
                                           double tol = kDefaultTol);

// sigma(L(complement(eval))) for connected enrichments.
SpectrumWord complement_laplacian_iterated(const EnrichedTree& t,
                                           double tol = kDefaultTol);

}  // namespace specop
