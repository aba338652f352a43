#pragma once

#include "lga/series.hpp"
#include "lga/symmetry.hpp"

namespace lga {

// Basis word of gr A(Γ): factors (v, k) with 1 <= k <= level(v) and no
// adjacent covering pair; its degree is the sum of the k's.
struct BasisWord {
    std::vector<std::pair<int, int>> factors;
    int degree = 0;
};

inline constexpr long long kDefaultEnumerationCap = 100'000'000;

// Coefficient i counts the basis words of degree i over the fixed
// vertices of sigma (coefficient 0 is 1, the empty word). Counting runs
// by dynamic programming on (last factor, remaining degree); the cap
// bounds the total word count and throws when exceeded.
TruncatedSeries count_fixed_words(const LayeredGraph& g, const VertexPermutation& sigma,
                                  int degree, long long cap = kDefaultEnumerationCap);

// Materializes the words themselves; kept for debugging and for
// cross-checking the counting path on small inputs.
std::vector<BasisWord> list_fixed_words(const LayeredGraph& g, const VertexPermutation& sigma,
                                        int degree, long long cap = kDefaultEnumerationCap);

struct TraceVerificationReport {
    bool equal = false;
    int first_mismatch_degree = -1;
    TruncatedSeries oracle;
    TruncatedSeries moebius;
    TruncatedSeries wordcount;
};

// Compares the oracle count against both trace engines through the
// given degree.
TraceVerificationReport verify_trace(const LayeredGraph& g, const VertexPermutation& sigma,
                                     int degree, long long cap = kDefaultEnumerationCap);

}  // namespace lga
