#include "lga/trace.hpp"

#include <stdexcept>

namespace lga {

ZetaMatrix build_zeta(const FixedSubgraph& fs) {
    ZetaMatrix z;
    z.vertices = fs.vertices;
    const int m = fs.size();
    z.entries.assign(static_cast<size_t>(m), std::vector<Poly>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (fs.geq[static_cast<size_t>(i)][static_cast<size_t>(j)])
                z.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    Poly::monomial(fs.levels[static_cast<size_t>(i)] - fs.levels[static_cast<size_t>(j)]);
    return z;
}

std::vector<std::vector<Poly>> invert_zeta(const ZetaMatrix& zeta) {
    const size_t m = static_cast<size_t>(zeta.size());
    // N = zeta - I, strictly upper triangular in the level-descending order.
    std::vector<std::vector<Poly>> nil(m, std::vector<Poly>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (i != j) nil[i][j] = zeta.entries[i][j];

    std::vector<std::vector<Poly>> inv(m, std::vector<Poly>(m));
    for (size_t i = 0; i < m; ++i) inv[i][i] = Poly{1};

    std::vector<std::vector<Poly>> power = nil;
    int sign = -1;
    while (true) {
        bool zero = true;
        for (size_t i = 0; i < m && zero; ++i)
            for (size_t j = 0; j < m; ++j)
                if (!power[i][j].is_zero()) {
                    zero = false;
                    break;
                }
        if (zero) break;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                if (power[i][j].is_zero()) continue;
                if (sign > 0) inv[i][j] += power[i][j];
                else inv[i][j] -= power[i][j];
            }
        // Next power, skipping zero entries (the matrix is sparse for
        // lattice-like posets).
        std::vector<std::vector<Poly>> next(m, std::vector<Poly>(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t k = 0; k < m; ++k) {
                if (power[i][k].is_zero()) continue;
                for (size_t j = 0; j < m; ++j) {
                    if (nil[k][j].is_zero()) continue;
                    next[i][j] += power[i][k] * nil[k][j];
                }
            }
        power = std::move(next);
        sign = -sign;
    }
    return inv;
}

Poly chain_sum(const FixedSubgraph& fs) {
    // All chains inside the fixed set, each contributing
    // (-1)^{l-1} t^{top level - bottom level}.
    const int m = fs.size();
    // chains_from[j] = sum over chains starting at position j of
    // (-1)^{l-1} t^{level_j - level_last}; computed bottom-up since geq
    // only points downward in the level-descending order.
    std::vector<Poly> chains_from(static_cast<size_t>(m));
    Poly total;
    for (int j = m - 1; j >= 0; --j) {
        Poly acc = Poly{1};  // the singleton chain (v_j)
        for (int k = j + 1; k < m; ++k) {
            if (!fs.geq[static_cast<size_t>(j)][static_cast<size_t>(k)] || j == k) continue;
            acc -= Poly::monomial(fs.levels[static_cast<size_t>(j)] - fs.levels[static_cast<size_t>(k)]) *
                   chains_from[static_cast<size_t>(k)];
        }
        chains_from[static_cast<size_t>(j)] = acc;
        total += acc;
    }
    return total;
}

namespace {

RationalFunction trace_from_sum(const Poly& sum) {
    Poly num{1, -1};  // 1 - t
    Poly den = Poly{1} - Poly::monomial(1) * sum;
    return {num, den};
}

}  // namespace

RationalFunction graded_trace_moebius(const LayeredGraph& g, const VertexPermutation& sigma,
                                      MoebiusMode mode) {
    if (!is_automorphism(g, sigma.map))
        throw std::invalid_argument("graded_trace_moebius: not a graph automorphism");
    FixedSubgraph fs = fixed_subgraph(g, sigma);
    Poly sum;
    if (mode == MoebiusMode::zeta_matrix) {
        ZetaMatrix zeta = build_zeta(fs);
        auto inv = invert_zeta(zeta);
        for (const auto& row : inv)
            for (const Poly& p : row) sum += p;
    } else {
        sum = chain_sum(fs);
    }
    return trace_from_sum(sum);
}

RationalFunction hilbert_series(const LayeredGraph& g) {
    FixedSubgraph all = fixed_subgraph(g, identity_permutation(g));
    return trace_from_sum(chain_sum(all));
}

TruncatedSeries graded_trace_wordcount(const LayeredGraph& g, const VertexPermutation& sigma,
                                       int degree) {
    if (degree < 0) throw std::invalid_argument("graded_trace_wordcount: negative degree");
    if (!is_automorphism(g, sigma.map))
        throw std::invalid_argument("graded_trace_wordcount: not a graph automorphism");

    // Chains of length l in the positive fixed vertices contribute with
    // sign (-1)^l: l = 1 gives -|W|, l = i + 2 gives (-1)^i |Y^(i)|.
    // A chain v_0 > ... > v_{l-1} carries the monomials
    // t^{|v_0| - |v_{l-1}| + k}, 1 <= k <= |v_{l-1}|: all interior
    // exponents are forced by the covering relation.
    std::vector<char> allowed(static_cast<size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (sigma.map[static_cast<size_t>(v)] == v && g.level(v) >= 1)
            allowed[static_cast<size_t>(v)] = 1;

    Poly den{1};
    for_each_chain(g, allowed, [&](std::span<const int> chain) {
        const int top = g.level(chain.front());
        const int bottom = g.level(chain.back());
        std::vector<Rat> mono(static_cast<size_t>(top + 1), Rat(0));
        const int sign = chain.size() % 2 == 0 ? 1 : -1;
        for (int k = 1; k <= bottom; ++k) mono[static_cast<size_t>(top - bottom + k)] = sign;
        den += Poly(std::move(mono));
    });
    return expand({Poly{1}, den}, degree);
}

RationalFunction closed_form_dn(int n, const DihedralElement& e) {
    if (n < 3) throw std::invalid_argument("closed_form_dn: n must be at least 3");
    if (e.kind == DihedralElement::Kind::reflection_rs && n % 2 != 0)
        throw std::invalid_argument("closed_form_dn: rs needs even n");
    switch (e.kind) {
        case DihedralElement::Kind::identity:
            return {Poly{1}, Poly{1, -(2 * n + 1), 2 * n - 1, -1}};
        case DihedralElement::Kind::rotation:
            if (e.power < 1 || e.power > n - 1)
                throw std::invalid_argument("closed_form_dn: rotation exponent outside 1..n-1");
            return {Poly{1}, Poly{1, -1, -1, -1}};
        case DihedralElement::Kind::reflection_s:
        case DihedralElement::Kind::reflection_rs:
            return {Poly{1}, Poly{1, -3, -1, 1}};
    }
    throw std::invalid_argument("closed_form_dn: bad element spec");
}

RationalFunction closed_form_qn(int n, const Partition& mu) {
    if (mu.n() != n) throw std::invalid_argument("closed_form_qn: partition does not sum to n");
    Poly prod{1};
    for (int part : mu.parts) {
        Poly factor{2};
        factor -= Poly::monomial(part);
        prod = prod * factor;
    }
    Poly den = Poly{1} - Poly::monomial(1) * prod;
    return {Poly{1, -1}, den};
}

Int dn_dimension_recurrence(int n, int k) {
    if (n < 3) throw std::invalid_argument("dn_dimension_recurrence: n must be at least 3");
    if (k < 0) throw std::invalid_argument("dn_dimension_recurrence: k must be nonnegative");
    Int d2(0), d1(0), d0(1);  // d_{k-2}, d_{k-1}, d_k
    for (int i = 1; i <= k; ++i) {
        Int next = Int(2 * n + 1) * d0 - Int(2 * n - 1) * d1 + d2;
        d2 = d1;
        d1 = d0;
        d0 = next;
    }
    return d0;
}

}  // namespace lga
