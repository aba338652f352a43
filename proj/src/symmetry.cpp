#include "lga/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lga {

VertexPermutation identity_permutation(const LayeredGraph& g) {
    VertexPermutation p;
    p.map.resize(static_cast<size_t>(g.vertex_count()));
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
}

bool is_automorphism(const LayeredGraph& g, const std::vector<int>& mapping) {
    const int n = g.vertex_count();
    if (static_cast<int>(mapping.size()) != n)
        throw std::invalid_argument("is_automorphism: mapping not total on vertex ids");
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        int w = mapping[static_cast<size_t>(v)];
        if (w < 0 || w >= n) throw std::invalid_argument("is_automorphism: unknown vertex id");
        if (hit[static_cast<size_t>(w)]) return false;
        hit[static_cast<size_t>(w)] = 1;
        if (g.level(v) != g.level(w)) return false;
    }
    std::set<std::pair<int, int>> edge_set(g.edges().begin(), g.edges().end());
    for (const auto& [a, b] : g.edges())
        if (!edge_set.count({mapping[static_cast<size_t>(a)], mapping[static_cast<size_t>(b)]}))
            return false;
    return true;
}

DihedralElement parse_dihedral(const std::string& spec) {
    if (spec == "id" || spec == "1") return DihedralElement::identity();
    if (spec == "s") return DihedralElement::s();
    if (spec == "rs") return DihedralElement::rs();
    if (spec == "r") return DihedralElement::rotation(1);
    if (spec.rfind("r^", 0) == 0) {
        int i = std::stoi(spec.substr(2));
        if (i < 1) throw std::invalid_argument("rotation exponent must be positive");
        return DihedralElement::rotation(i);
    }
    throw std::invalid_argument("bad dihedral element spec: " + spec +
                                " (expected id, r^i, s, rs)");
}

std::string dihedral_name(const DihedralElement& e) {
    switch (e.kind) {
        case DihedralElement::Kind::identity: return "id";
        case DihedralElement::Kind::rotation: return "r^" + std::to_string(e.power);
        case DihedralElement::Kind::reflection_s: return "s";
        case DihedralElement::Kind::reflection_rs: return "rs";
    }
    return "?";
}

VertexPermutation dihedral_element(const DnFamily& fam, const DihedralElement& e) {
    const int n = fam.n;
    if (e.kind == DihedralElement::Kind::reflection_rs && n % 2 != 0)
        throw std::invalid_argument("reflection rs is only defined for even n");
    if (e.kind == DihedralElement::Kind::rotation && (e.power < 1 || e.power > n - 1))
        throw std::invalid_argument("rotation exponent must lie in 1..n-1");

    // Subscript action with representatives 1..n.
    auto act = [&](int i) -> int {
        int r;
        switch (e.kind) {
            case DihedralElement::Kind::identity: r = i; break;
            case DihedralElement::Kind::rotation: r = i + e.power; break;
            case DihedralElement::Kind::reflection_s: r = 3 - i; break;
            case DihedralElement::Kind::reflection_rs: r = 4 - i; break;
        }
        r = ((r - 1) % n + n) % n;
        return r + 1;
    };

    VertexPermutation p = identity_permutation(fam.graph);
    for (int i = 1; i <= n; ++i) p.map[static_cast<size_t>(fam.w_id(i))] = fam.w_id(act(i));
    for (int i = 1; i <= n; ++i) {
        // v_{i,i+1} goes to the level-2 vertex labeled by the image pair,
        // which is adjacent again: {act(i), act(i+1)} = {k, k+1}.
        int a = act(i);
        int b = act(i % n + 1);
        int k;
        if (b == a % n + 1) k = a;
        else if (a == b % n + 1) k = b;
        else throw std::logic_error("dihedral image of an adjacent pair is not adjacent");
        p.map[static_cast<size_t>(fam.v_id(i))] = fam.v_id(k);
    }
    return p;
}

Perm identity_perm(int n) {
    Perm p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& outer, const Perm& inner) {
    Perm out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i)
        out[i] = outer[static_cast<size_t>(inner[i])];
    return out;
}

Perm inverse(const Perm& p) {
    Perm out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return out;
}

Perm conjugate(const Perm& tau, const Perm& sigma) {
    return compose(tau, compose(sigma, inverse(tau)));
}

VertexPermutation permutation_on_lattice(const BooleanLattice& lat, const Perm& perm) {
    if (static_cast<int>(perm.size()) != lat.n)
        throw std::invalid_argument("permutation size does not match lattice rank");
    VertexPermutation p;
    p.map.resize(static_cast<size_t>(lat.graph.vertex_count()));
    for (uint32_t mask = 0; mask < (uint32_t{1} << lat.n); ++mask) {
        uint32_t image = 0;
        for (int i = 0; i < lat.n; ++i)
            if (mask >> i & 1) image |= uint32_t{1} << perm[static_cast<size_t>(i)];
        p.map[mask] = static_cast<int>(image);
    }
    return p;
}

FixedSubgraph fixed_subgraph(const LayeredGraph& g, const VertexPermutation& sigma) {
    FixedSubgraph out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (sigma.map[static_cast<size_t>(v)] == v) out.vertices.push_back(v);
    std::sort(out.vertices.begin(), out.vertices.end(), [&](int a, int b) {
        if (g.level(a) != g.level(b)) return g.level(a) > g.level(b);
        return a < b;
    });
    const size_t m = out.vertices.size();
    out.levels.resize(m);
    out.geq.assign(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i) {
        out.levels[i] = g.level(out.vertices[i]);
        out.geq[i][i] = 1;
        for (size_t j = 0; j < m; ++j)
            if (i != j && g.reachable(out.vertices[i], out.vertices[j])) out.geq[i][j] = 1;
    }
    return out;
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

Partition parse_partition(const std::string& spec) {
    Partition p;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v = std::stoi(item);
        if (v < 1) throw std::invalid_argument("partition parts must be positive");
        p.parts.push_back(v);
    }
    if (p.parts.empty()) throw std::invalid_argument("empty partition spec");
    if (!std::is_sorted(p.parts.rbegin(), p.parts.rend()))
        throw std::invalid_argument("partition parts must be weakly decreasing");
    return p;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{acc});
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        acc.push_back(k);
        gen_partitions(remaining - k, k, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 1) throw std::invalid_argument("partitions: n must be positive");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    return out;
}

Int class_size(const Partition& mu) {
    const int n = mu.n();
    Int num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    std::map<int, int> mult;
    for (int p : mu.parts) ++mult[p];
    Int den(1);
    for (const auto& [part, count] : mult) {
        Int pw, fac;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part),
                      static_cast<unsigned long>(count));
        mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(count));
        den *= pw * fac;
    }
    return num / den;
}

Partition cycle_type(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> lengths;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = p[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition{lengths};
}

Perm representative_of(const Partition& mu) {
    Perm p = identity_perm(mu.n());
    int base = 0;
    for (int part : mu.parts) {
        for (int i = 0; i < part; ++i) p[static_cast<size_t>(base + i)] = base + (i + 1) % part;
        base += part;
    }
    return p;
}

Perm parse_cycles(const std::string& spec, int n) {
    Perm p = identity_perm(n);
    size_t i = 0;
    while (i < spec.size()) {
        if (isspace(static_cast<unsigned char>(spec[i]))) {
            ++i;
            continue;
        }
        if (spec[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++i;
        std::vector<int> cycle;
        std::string cur;
        bool spaced = spec.find(' ', i) != std::string::npos &&
                      spec.find(' ', i) < spec.find(')', i);
        while (i < spec.size() && spec[i] != ')') {
            char c = spec[i];
            if (isdigit(static_cast<unsigned char>(c))) {
                if (spaced) cur += c;
                else cycle.push_back(c - '0');
            } else if (isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) {
                    cycle.push_back(std::stoi(cur));
                    cur.clear();
                }
            } else {
                throw std::invalid_argument("bad character in cycle notation");
            }
            ++i;
        }
        if (!cur.empty()) cycle.push_back(std::stoi(cur));
        if (i == spec.size()) throw std::invalid_argument("unclosed cycle");
        ++i;  // ')'
        for (int v : cycle)
            if (v < 1 || v > n) throw std::invalid_argument("cycle entry outside 1..n");
        for (size_t j = 0; j < cycle.size(); ++j) {
            int from = cycle[j] - 1;
            int to = cycle[(j + 1) % cycle.size()] - 1;
            p[static_cast<size_t>(from)] = to;
        }
    }
    return p;
}

Perm random_conjugate(const Perm& sigma, std::mt19937_64& rng) {
    Perm tau = identity_perm(static_cast<int>(sigma.size()));
    std::shuffle(tau.begin(), tau.end(), rng);
    return conjugate(tau, sigma);
}

namespace {

// Sparse multivariate polynomial keyed by exponent vectors, with
// per-variable exponent caps so the Frobenius expansion stays small.
using MPoly = std::map<std::vector<int>, Int>;

MPoly mul_linear_diff(const MPoly& a, size_t i, size_t j, const std::vector<int>& cap) {
    MPoly out;
    for (const auto& [e, c] : a) {
        std::vector<int> ei = e;
        ++ei[i];
        if (ei[i] <= cap[i]) {
            auto& slot = out[ei];
            slot += c;
            if (slot == 0) out.erase(ei);
        }
        std::vector<int> ej = e;
        ++ej[j];
        if (ej[j] <= cap[j]) {
            auto& slot = out[ej];
            slot -= c;
            if (slot == 0) out.erase(ej);
        }
    }
    return out;
}

MPoly mul_power_sum(const MPoly& a, int p, const std::vector<int>& cap) {
    MPoly out;
    const size_t k = cap.size();
    for (const auto& [e, c] : a) {
        for (size_t i = 0; i < k; ++i) {
            std::vector<int> ei = e;
            ei[i] += p;
            if (ei[i] > cap[i]) continue;
            auto& slot = out[ei];
            slot += c;
            if (slot == 0) out.erase(ei);
        }
    }
    return out;
}

}  // namespace

std::vector<int> frobenius_l_sequence(const Partition& lambda) {
    const size_t k = lambda.parts.size();
    std::vector<int> target(k);
    for (size_t i = 0; i < k; ++i)
        target[i] = lambda.parts[i] + static_cast<int>(k - 1 - i);
    return target;
}

Int sn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("sn_character: partitions of different n");
    const size_t k = lambda.parts.size();
    std::vector<int> target = frobenius_l_sequence(lambda);

    MPoly poly;
    poly[std::vector<int>(k, 0)] = 1;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) poly = mul_linear_diff(poly, i, j, target);
    for (int part : mu.parts) poly = mul_power_sum(poly, part, target);

    auto it = poly.find(target);
    return it == poly.end() ? Int(0) : it->second;
}

std::vector<std::vector<Int>> sn_character_table(int n) {
    auto parts = partitions(n);
    std::vector<std::vector<Int>> table(parts.size(), std::vector<Int>(parts.size()));
    for (size_t l = 0; l < parts.size(); ++l)
        for (size_t m = 0; m < parts.size(); ++m) table[l][m] = sn_character(parts[l], parts[m]);
    return table;
}

std::vector<DnIrreducible> dn_class_data(int n) {
    if (n < 3) throw std::invalid_argument("dn_class_data: n must be at least 3");
    std::vector<DnIrreducible> out;
    out.push_back({"triv", 1, n - 1, n});
    out.push_back({"1-1", 1, n - 1, -n});
    const bool even = n % 2 == 0;
    if (even) {
        // Alternating rotation characters: sum over r^1..r^{n-1} is -1;
        // the two reflection classes cancel.
        out.push_back({"-11", 1, -1, 0});
        out.push_back({"-1-1", 1, -1, 0});
    }
    const int m = even ? n / 2 - 1 : (n - 1) / 2;
    for (int kIdx = 1; kIdx <= m; ++kIdx) {
        // Σ_{j=1}^{n-1} 2cos(2πkj/n) = -2: the full cosine sum vanishes.
        out.push_back({"chi_" + std::to_string(kIdx), 2, -2, 0});
    }
    return out;
}

bool orthogonality_check_sn(int n) {
    auto parts = partitions(n);
    auto table = sn_character_table(n);
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    for (size_t m = 0; m < parts.size(); ++m) {
        Int sum(0);
        for (size_t l = 0; l < parts.size(); ++l) sum += table[l][m] * table[l][m];
        if (sum * class_size(parts[m]) != fact) return false;
    }
    return true;
}

bool orthogonality_check_dn(int n) {
    auto irreps = dn_class_data(n);
    long long dim_sq = 0;
    for (const auto& ir : irreps) dim_sq += static_cast<long long>(ir.dimension) * ir.dimension;
    if (dim_sq != 2 * n) return false;

    // Project each indicator triple (traces 1 on one of {identity},
    // {rotations}, {reflections}, 0 elsewhere) and reconstruct.
    for (int unit = 0; unit < 3; ++unit) {
        Rat a(unit == 0 ? 1 : 0), b(unit == 1 ? 1 : 0), c(unit == 2 ? 1 : 0);
        Rat ra(0), rb(0), rc(0);
        for (const auto& ir : irreps) {
            Rat m = (Rat(ir.dimension) * a + Rat(ir.rotation_sum) * b + Rat(ir.reflection_sum) * c) /
                    Rat(2 * n);
            ra += m * Rat(ir.dimension);
            rb += m * Rat(ir.rotation_sum);
            rc += m * Rat(ir.reflection_sum);
        }
        if (ra != a || rb != Rat(n - 1) * b || rc != Rat(n) * c) return false;
    }
    return true;
}

}  // namespace lga
