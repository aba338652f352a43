#pragma once

#include "lga/layered_graph.hpp"
#include "lga/series.hpp"
#include "lga/symmetry.hpp"

namespace lga {

// Square polynomial matrix over the fixed vertex set, arranged
// level-descending: entry (v,w) is t^{|v|-|w|} when v >= w (1 on the
// diagonal) and 0 otherwise. Upper triangular with unipotent diagonal,
// so zeta - I is nilpotent.
struct ZetaMatrix {
    std::vector<int> vertices;  // graph vertex ids, level-descending
    std::vector<std::vector<Poly>> entries;

    int size() const { return static_cast<int>(vertices.size()); }
};

ZetaMatrix build_zeta(const FixedSubgraph& fs);

// Inverse via the terminating Neumann sum I - N + N^2 - ... with
// N = zeta - I nilpotent.
std::vector<std::vector<Poly>> invert_zeta(const ZetaMatrix& zeta);

// Sum over all chains v_1 > ... > v_l in the fixed set (including
// single-vertex chains and chains ending at *) of (-1)^{l-1} t^{|v_1|-|v_l|}.
// Equals 1^T zeta^{-1}(t) 1; used as the direct evaluation mode.
Poly chain_sum(const FixedSubgraph& fs);

enum class MoebiusMode { zeta_matrix, chain_sum };

// Graded trace of an automorphism on gr A(Γ):
// (1-t) / (1 - t * 1^T zeta^{-1}(t) 1) over the fixed subgraph.
// Returned unreduced.
RationalFunction graded_trace_moebius(const LayeredGraph& g, const VertexPermutation& sigma,
                                      MoebiusMode mode = MoebiusMode::zeta_matrix);

// Hilbert series of gr A(Γ): the chain-sum formula over all vertices,
// i.e. the graded trace of the identity.
RationalFunction hilbert_series(const LayeredGraph& g);

// Word-count engine: expands 1 / (1 - |W| + sum_i (-1)^i |Y^(i)|) where
// |W| counts the generators e(v,k) of the fixed subalgebra by degree and
// Y^(i) the length-(i+2) words whose adjacent factors all satisfy the
// covering relation.
TruncatedSeries graded_trace_wordcount(const LayeredGraph& g, const VertexPermutation& sigma,
                                       int degree);

// Closed forms for the n-gon Hasse graph: identity, any rotation, any
// reflection.
RationalFunction closed_form_dn(int n, const DihedralElement& e);

// (1-t) / (1 - t prod_j (2 - t^{i_j})) for a cycle type mu of n.
RationalFunction closed_form_qn(int n, const Partition& mu);

// d_k = (2n+1) d_{k-1} - (2n-1) d_{k-2} + d_{k-3}, seeds d_0 = 1,
// d_{-1} = d_{-2} = 0.
Int dn_dimension_recurrence(int n, int k);

}  // namespace lga
