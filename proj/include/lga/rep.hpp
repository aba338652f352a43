#pragma once

#include <string>
#include <vector>

#include "lga/series.hpp"
#include "lga/symmetry.hpp"

namespace lga {

// Graded multiplicity series of each irreducible, one column per
// irreducible, all truncated at the same degree.
struct GradedMultiplicity {
    std::vector<std::string> names;
    std::vector<int> dimensions;
    std::vector<TruncatedSeries> series;

    int columns() const { return static_cast<int>(names.size()); }
    int degree() const { return series.empty() ? -1 : series.front().truncation_degree(); }
};

// Thrown when a multiplicity coefficient fails integrality (or, on the
// algebra side, nonnegativity): that always indicates inconsistent
// inputs upstream, never legitimate output.
class MultiplicityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// D_n decomposition from the three class traces (identity, any
// non-identity rotation, any reflection), all expanded to the same
// degree: m_phi = (dim·a + rotationSum·b + reflectionSum·c) / 2n.
// Works entirely in integers plus one rational division.
GradedMultiplicity multiplicities_dn(int n, const TruncatedSeries& identity_trace,
                                     const TruncatedSeries& rotation_trace,
                                     const TruncatedSeries& reflection_trace,
                                     bool require_nonnegative = true);

// S_n decomposition from one trace per partition of n (ordered like
// partitions(n)): m_lambda = (1/n!) sum_mu chi_lambda(C_mu) |C_mu| Tr_mu.
GradedMultiplicity multiplicities_sn(int n, const std::vector<TruncatedSeries>& traces_by_class,
                                     bool require_nonnegative = true);

// Independent route for S_n: solves the character-table system
// C^T m = Tr by exact Gaussian elimination, one solve per degree.
GradedMultiplicity multiplicities_sn_matrix(int n,
                                            const std::vector<TruncatedSeries>& traces_by_class,
                                            bool require_nonnegative = true);

// Dual-side decompositions: same projections applied to the dual trace
// polynomials; integrality asserted, nonnegativity not (dual traces have
// negative coefficients).
GradedMultiplicity dual_multiplicities_dn(int n, int degree);
GradedMultiplicity dual_multiplicities_sn(int n, int degree);

// True iff sum_phi dim(phi) * m_{phi,i} equals the identity trace
// coefficient for every degree i.
bool dimension_check(const GradedMultiplicity& mult, const TruncatedSeries& identity_trace);

}  // namespace lga
