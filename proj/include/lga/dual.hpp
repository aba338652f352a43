#pragma once

#include <cstdint>
#include <functional>

#include "lga/series.hpp"
#include "lga/symmetry.hpp"

namespace lga {

// Graded trace polynomials on A(Γ_{D_n})^!; the dual has top degree 3
// and the same polynomials for even and odd n.
Poly dual_trace_dn(int n, const DihedralElement& e);

// (1 + t prod_k (2 - (-t)^{i_k})) / (1 + t), materialized as a
// polynomial by exact division (the division is always exact; a
// remainder would indicate a bug).
Poly dual_trace_qn_closed(int n, const Partition& mu);

// Basis element S(A:B) of Q_n^!: A a nonempty subset of {1..n} held as
// a bitmask (bit i-1 for element i), B a strictly decreasing sequence
// of elements of A avoiding min A. Degree is |B| + 1; the degree-0
// empty element is represented separately by the enumeration.
struct DualBasisElement {
    uint32_t a_mask = 0;
    std::vector<int> b;  // 1-based elements, strictly decreasing

    int degree() const { return static_cast<int>(b.size()) + 1; }
};

// Streams every basis element of positive degree in increasing degree
// order (the caller accounts for the degree-0 empty element). Returns
// the number of elements emitted.
long long enumerate_dual_basis(int n, const std::function<void(const DualBasisElement&)>& visit);

// Contribution of sigma acting on S(A:B) to the trace: -1, 0 or +1.
// Zero unless sigma fixes A. When sigma fixes the set of B the sign is
// (-1)^{l_B(sigma)} with l_B counting ascents of the image sequence.
// When sigma(B) = (B \ {c}) ∪ {min A} for a single c in B, expanding the
// min A factor through the sum relation and resorting yields
// (-1)^{l_B(sigma) + 1 + #{x in B : x < c}}. All other cases vanish.
int dual_contribution(const Perm& sigma, const DualBasisElement& e);

// Trace by direct summation over the basis; independent of the closed
// form. Guarded by a bound on n since the basis has (3^n - 1) / 2 + 1
// elements.
Poly dual_trace_qn_oracle(int n, const Perm& sigma, int bound = 7);

// True iff expand(traceA, D) * traceDual(-t) is the series 1 through
// degree D, exactly.
bool koszul_identity_check(const RationalFunction& trace_a, const Poly& trace_dual, int degree);

}  // namespace lga
