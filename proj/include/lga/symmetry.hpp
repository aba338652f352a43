#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lga/layered_graph.hpp"
#include "lga/rational.hpp"

namespace lga {

// Level- and edge-preserving bijection of the vertices of a specific
// graph; map[v] is the image of vertex v.
struct VertexPermutation {
    std::vector<int> map;
};

VertexPermutation identity_permutation(const LayeredGraph& g);

// True iff `mapping` is a bijective, level-preserving, edge-preserving
// map of vertex ids. Throws on ids outside 0..vertex_count-1.
bool is_automorphism(const LayeredGraph& g, const std::vector<int>& mapping);

// Element of the dihedral group acting on Γ_{D_n} by subscript
// arithmetic: rotation(i) sends w_j to w_{j+i}; reflection_s is the
// permutation j -> 3-j (mod n); reflection_rs is r∘s, j -> 4-j.
struct DihedralElement {
    enum class Kind { identity, rotation, reflection_s, reflection_rs };
    Kind kind = Kind::identity;
    int power = 0;  // rotation exponent, 1..n-1

    static DihedralElement identity() { return {Kind::identity, 0}; }
    static DihedralElement rotation(int i) { return {Kind::rotation, i}; }
    static DihedralElement s() { return {Kind::reflection_s, 0}; }
    static DihedralElement rs() { return {Kind::reflection_rs, 0}; }
    bool is_reflection() const {
        return kind == Kind::reflection_s || kind == Kind::reflection_rs;
    }
};

// Parses "id", "r^i", "s", "rs".
DihedralElement parse_dihedral(const std::string& spec);
std::string dihedral_name(const DihedralElement& e);

// The vertex permutation of Γ_{D_n} induced by the subscript action.
// reflection_rs exists only for even n.
VertexPermutation dihedral_element(const DnFamily& fam, const DihedralElement& e);

// Permutations of {1..n} are stored 0-based: perm[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& outer, const Perm& inner);  // outer ∘ inner
Perm inverse(const Perm& p);
Perm conjugate(const Perm& tau, const Perm& sigma);  // tau ∘ sigma ∘ tau⁻¹

// v_A -> v_{perm(A)} on the Boolean lattice.
VertexPermutation permutation_on_lattice(const BooleanLattice& lat, const Perm& perm);

// Fixed vertices of σ together with the restriction of the graph order,
// arranged decreasingly by level (the zeta-matrix order).
struct FixedSubgraph {
    std::vector<int> vertices;  // graph vertex ids, level-descending
    std::vector<int> levels;    // parallel to `vertices`
    // geq[i][j] iff vertices[i] > vertices[j] in the graph order or i == j.
    std::vector<std::vector<char>> geq;

    int size() const { return static_cast<int>(vertices.size()); }
};

FixedSubgraph fixed_subgraph(const LayeredGraph& g, const VertexPermutation& sigma);

// Weakly decreasing positive parts summing to n.
struct Partition {
    std::vector<int> parts;

    int n() const;
    int count() const { return static_cast<int>(parts.size()); }
    std::string to_string() const;  // "2,1,1"
    friend bool operator==(const Partition&, const Partition&) = default;
};

Partition parse_partition(const std::string& spec);

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions(int n);

// Size of the S_n conjugacy class with the given cycle type.
Int class_size(const Partition& mu);

Partition cycle_type(const Perm& p);

// One representative per cycle type, built from consecutive cycles:
// (2,2) -> (12)(34).
Perm representative_of(const Partition& mu);

// Parses explicit cycles like "(12)(34)" over {1..n} (single digits) or
// "(1 2)(3 4)" with spaces for multi-digit entries.
Perm parse_cycles(const std::string& spec, int n);

// A uniformly random member of the conjugacy class of sigma.
Perm random_conjugate(const Perm& sigma, std::mt19937_64& rng);

// Exponent targets l_i = lambda_i + k - i (1-based) used by the
// character expansion below.
std::vector<int> frobenius_l_sequence(const Partition& lambda);

// Integer character value via the determinant-free Frobenius expansion:
// the coefficient of x_1^{l_1}...x_k^{l_k} in Δ(x)·Π_j P_j(x)^{i_j}.
Int sn_character(const Partition& lambda, const Partition& mu);

// chi[lambda_index][mu_index] over partitions(n) order.
std::vector<std::vector<Int>> sn_character_table(int n);

// Integer class data for an irreducible of D_n: the dimension together
// with the character sums over all non-identity rotations and over all
// reflections. These determine multiplicities of class functions that
// are constant on those sets, with no irrational entries involved.
struct DnIrreducible {
    std::string name;  // "triv", "1-1", "-11", "-1-1", "chi_k"
    int dimension;
    int rotation_sum;    // sum of the character over r^1..r^{n-1}
    int reflection_sum;  // sum of the character over all n reflections
};

// Irreducibles of D_n (n >= 3): triv, 1-1, then for even n -11 and -1-1,
// then the 2-dimensional chi_k.
std::vector<DnIrreducible> dn_class_data(int n);

// Column orthogonality of the S_n table: Σ_λ χ_λ(C)² = n!/|C| per class.
bool orthogonality_check_sn(int n);

// Σ dim² = 2n plus the projection identity on the integer class sums:
// projecting the indicator data of each of the three trace classes and
// re-summing must reproduce it.
bool orthogonality_check_dn(int n);

}  // namespace lga
