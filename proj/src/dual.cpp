#include "lga/dual.hpp"

#include <stdexcept>

namespace lga {

Poly dual_trace_dn(int n, const DihedralElement& e) {
    if (n < 3) throw std::invalid_argument("dual_trace_dn: n must be at least 3");
    if (e.kind == DihedralElement::Kind::reflection_rs && n % 2 != 0)
        throw std::invalid_argument("dual_trace_dn: rs needs even n");
    switch (e.kind) {
        case DihedralElement::Kind::identity:
            return Poly{1, 2 * n + 1, 2 * n - 1, 1};
        case DihedralElement::Kind::rotation:
            if (e.power < 1 || e.power > n - 1)
                throw std::invalid_argument("dual_trace_dn: rotation exponent outside 1..n-1");
            return Poly{1, 1, -1, 1};
        case DihedralElement::Kind::reflection_s:
        case DihedralElement::Kind::reflection_rs:
            return Poly{1, 3, -1, -1};
    }
    throw std::invalid_argument("dual_trace_dn: bad element spec");
}

Poly dual_trace_qn_closed(int n, const Partition& mu) {
    if (mu.n() != n) throw std::invalid_argument("dual_trace_qn_closed: partition does not sum to n");
    Poly prod{1};
    for (int part : mu.parts) {
        // 2 - (-t)^part
        Poly factor{2};
        factor -= Poly::monomial(part, Rat(part % 2 == 0 ? 1 : -1));
        prod = prod * factor;
    }
    Poly num = Poly{1} + Poly::monomial(1) * prod;
    return exact_divide(num, Poly{1, 1});
}

namespace {

void emit_b_sequences(uint32_t a_mask, int min_a, int n, int want_len,
                      std::vector<int>& acc, int next_from,
                      const std::function<void(const DualBasisElement&)>& visit,
                      long long& count) {
    if (static_cast<int>(acc.size()) == want_len) {
        visit(DualBasisElement{a_mask, acc});
        ++count;
        return;
    }
    // Candidates descend, stay inside A, and avoid min A.
    for (int v = next_from; v > min_a; --v) {
        if (!(a_mask >> (v - 1) & 1)) continue;
        acc.push_back(v);
        emit_b_sequences(a_mask, min_a, n, want_len, acc, v - 1, visit, count);
        acc.pop_back();
    }
}

}  // namespace

long long enumerate_dual_basis(int n, const std::function<void(const DualBasisElement&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_dual_basis: n must be positive");
    long long count = 0;
    std::vector<int> acc;
    for (int len = 0; len < n; ++len) {
        for (uint32_t a_mask = 1; a_mask < (uint32_t{1} << n); ++a_mask) {
            const int min_a = __builtin_ctz(a_mask) + 1;
            emit_b_sequences(a_mask, min_a, n, len, acc, n, visit, count);
        }
    }
    return count;
}

int dual_contribution(const Perm& sigma, const DualBasisElement& e) {
    const int n = static_cast<int>(sigma.size());
    auto image_of_mask = [&](uint32_t mask) {
        uint32_t out = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) out |= uint32_t{1} << sigma[static_cast<size_t>(i)];
        return out;
    };
    if (image_of_mask(e.a_mask) != e.a_mask) return 0;

    const int min_a = __builtin_ctz(e.a_mask) + 1;
    uint32_t b_mask = 0;
    for (int v : e.b) b_mask |= uint32_t{1} << (v - 1);
    const uint32_t sb_mask = image_of_mask(b_mask);

    // l_B(sigma): pairs i < j with sigma(b_i) < sigma(b_j); the sign of
    // sorting the image sequence back into descending order.
    int length = 0;
    for (size_t i = 0; i < e.b.size(); ++i)
        for (size_t j = i + 1; j < e.b.size(); ++j)
            if (sigma[static_cast<size_t>(e.b[i] - 1)] < sigma[static_cast<size_t>(e.b[j] - 1)])
                ++length;

    if (sb_mask == b_mask) {
        // min A stays outside sigma(B); sorting alone reaches the basis.
        return length % 2 == 0 ? 1 : -1;
    }
    if (!(sb_mask >> (min_a - 1) & 1)) return 0;

    // sigma(B) contains min A. The trailing min A factor expands through
    // the sum relation into the remaining candidates; the original B is
    // recovered only when sigma(B) and B differ by that single element,
    // i.e. sigma(B) = (B \ {c}) ∪ {min A}. The reinsertion of c costs one
    // sign plus one transposition per element of B below c.
    const uint32_t dropped = b_mask & ~sb_mask;
    if (__builtin_popcount(dropped) != 1) return 0;
    if ((sb_mask & ~(uint32_t{1} << (min_a - 1))) != (b_mask & sb_mask)) return 0;
    const int c = __builtin_ctz(dropped) + 1;
    int below = 0;
    for (int v : e.b)
        if (v < c) ++below;
    return (length + 1 + below) % 2 == 0 ? 1 : -1;
}

Poly dual_trace_qn_oracle(int n, const Perm& sigma, int bound) {
    if (n > bound) throw std::invalid_argument("dual_trace_qn_oracle: n exceeds the oracle bound");
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("dual_trace_qn_oracle: permutation size mismatch");
    std::vector<Rat> coef(static_cast<size_t>(n) + 1, Rat(0));
    coef[0] = 1;  // the empty element
    enumerate_dual_basis(n, [&](const DualBasisElement& e) {
        coef[static_cast<size_t>(e.degree())] += dual_contribution(sigma, e);
    });
    return Poly(std::move(coef));
}

bool koszul_identity_check(const RationalFunction& trace_a, const Poly& trace_dual, int degree) {
    TruncatedSeries a = expand(trace_a, degree);
    TruncatedSeries prod = series_mul_poly(a, substitute_neg_t(trace_dual));
    if (prod[0] != 1) return false;
    for (int k = 1; k <= degree; ++k)
        if (prod[k] != 0) return false;
    return true;
}

}  // namespace lga
