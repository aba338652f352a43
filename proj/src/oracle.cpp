#include "lga/oracle.hpp"

#include <stdexcept>

#include "lga/trace.hpp"

namespace lga {

namespace {

struct Factor {
    int vertex;
    int k;
};

std::vector<Factor> fixed_factors(const LayeredGraph& g, const VertexPermutation& sigma) {
    std::vector<Factor> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (sigma.map[static_cast<size_t>(v)] != v || g.level(v) < 1) continue;
        for (int k = 1; k <= g.level(v); ++k) out.push_back({v, k});
    }
    return out;
}

bool covers(const LayeredGraph& g, const Factor& a, const Factor& b) {
    return a.k == g.level(a.vertex) - g.level(b.vertex) && g.reachable(a.vertex, b.vertex);
}

}  // namespace

TruncatedSeries count_fixed_words(const LayeredGraph& g, const VertexPermutation& sigma,
                                  int degree, long long cap) {
    if (degree < 0) throw std::invalid_argument("count_fixed_words: negative degree");
    if (!is_automorphism(g, sigma.map))
        throw std::invalid_argument("count_fixed_words: not a graph automorphism");
    auto factors = fixed_factors(g, sigma);
    const size_t nf = factors.size();

    // words[f][d] = number of words of degree d whose first factor is f.
    std::vector<std::vector<Int>> words(nf, std::vector<Int>(static_cast<size_t>(degree) + 1, Int(0)));
    // Fill by increasing degree: a word of degree d starting at f is f
    // alone (d == k_f) or f followed by a non-covered word of degree d - k_f.
    std::vector<std::vector<size_t>> allowed_next(nf);
    for (size_t a = 0; a < nf; ++a)
        for (size_t b = 0; b < nf; ++b)
            if (!covers(g, factors[a], factors[b])) allowed_next[a].push_back(b);

    for (int d = 1; d <= degree; ++d) {
        for (size_t a = 0; a < nf; ++a) {
            if (factors[a].k > d) continue;
            Int acc = factors[a].k == d ? 1 : 0;
            const int rest = d - factors[a].k;
            if (rest > 0)
                for (size_t b : allowed_next[a]) acc += words[b][static_cast<size_t>(rest)];
            words[a][static_cast<size_t>(d)] = acc;
        }
    }

    TruncatedSeries out(degree);
    out[0] = 1;
    Int total(1);
    const Int cap_z(static_cast<long>(cap));
    for (int d = 1; d <= degree; ++d) {
        Int coeff(0);
        for (size_t a = 0; a < nf; ++a) coeff += words[a][static_cast<size_t>(d)];
        total += coeff;
        if (total > cap_z) throw std::runtime_error("count_fixed_words: enumeration cap exceeded");
        out[d] = Rat(coeff);
    }
    return out;
}

std::vector<BasisWord> list_fixed_words(const LayeredGraph& g, const VertexPermutation& sigma,
                                        int degree, long long cap) {
    if (!is_automorphism(g, sigma.map))
        throw std::invalid_argument("list_fixed_words: not a graph automorphism");
    auto factors = fixed_factors(g, sigma);
    std::vector<BasisWord> out;
    out.push_back(BasisWord{});  // the empty word

    std::vector<std::pair<int, int>> stack;
    std::function<void(int, int)> extend = [&](int last, int used) {
        for (size_t b = 0; b < factors.size(); ++b) {
            const Factor& f = factors[b];
            if (f.k + used > degree) continue;
            if (last >= 0 && covers(g, factors[static_cast<size_t>(last)], f)) continue;
            stack.emplace_back(f.vertex, f.k);
            if (static_cast<long long>(out.size()) >= cap)
                throw std::runtime_error("list_fixed_words: enumeration cap exceeded");
            out.push_back(BasisWord{stack, used + f.k});
            extend(static_cast<int>(b), used + f.k);
            stack.pop_back();
        }
    };
    extend(-1, 0);
    return out;
}

TraceVerificationReport verify_trace(const LayeredGraph& g, const VertexPermutation& sigma,
                                     int degree, long long cap) {
    TraceVerificationReport r;
    r.oracle = count_fixed_words(g, sigma, degree, cap);
    r.moebius = expand(graded_trace_moebius(g, sigma), degree);
    r.wordcount = graded_trace_wordcount(g, sigma, degree);
    r.equal = true;
    for (int d = 0; d <= degree; ++d) {
        if (r.oracle[d] != r.moebius[d] || r.oracle[d] != r.wordcount[d]) {
            r.equal = false;
            r.first_mismatch_degree = d;
            break;
        }
    }
    return r;
}

}  // namespace lga
