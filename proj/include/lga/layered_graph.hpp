#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace lga {

// Directed layered graph with a unique minimal vertex at level 0.
// Vertex ids are dense integers 0..vertex_count()-1 assigned at
// construction; edges run from a vertex to one exactly one level below.
// The reachability order is precomputed per graph once the edge levels
// are structurally sound, so order queries are O(1) afterwards.
class LayeredGraph {
public:
    struct VertexData {
        int level = 0;
        std::string label;
    };

    LayeredGraph(std::vector<VertexData> vertices, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int level(int v) const { return verts_[static_cast<size_t>(v)].level; }
    const std::string& label(int v) const { return verts_[static_cast<size_t>(v)].label; }
    int max_level() const { return max_level_; }

    // The unique level-0 vertex, or -1 if the graph is malformed.
    int star() const { return star_; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::span<const int> lower_neighbors(int v) const { return down_[static_cast<size_t>(v)]; }

    // True iff a downward path from v to w exists (strict: false for v == w).
    bool reachable(int v, int w) const;

    // Index of the vertex with the given label, or -1.
    int find_label(const std::string& label) const;

    // False when some edge fails to drop exactly one level; in that case
    // reachable() is unavailable and validate() reports the defect.
    bool structurally_leveled() const { return leveled_; }

private:
    std::vector<VertexData> verts_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> down_;
    std::vector<std::vector<uint64_t>> reach_;  // bitset rows, only when leveled_
    int star_ = -1;
    int max_level_ = 0;
    bool leveled_ = false;
};

struct Diagnostic {
    enum class Severity { error, warning };
    Severity severity;
    std::string message;
};

// Empty error list iff all layered-graph axioms hold. Additionally emits
// a warning line reporting whether the graph is uniform.
std::vector<Diagnostic> validate(const LayeredGraph& g);
bool has_errors(const std::vector<Diagnostic>& diags);

// Diamond condition: for every vertex v of level >= 2, the vertices
// directly below v are connected under the relation of sharing a common
// lower neighbor.
bool is_uniform(const LayeredGraph& g);

// Nonempty strictly descending sequence under the reachability order.
struct Chain {
    std::vector<int> vertex_ids;
};

// Streams every nonempty strictly descending chain with all vertices in
// `allowed` (indexed by vertex id), each exactly once, including
// single-vertex chains. Vertices arrive in descending order. Returns the
// number of chains emitted.
long long for_each_chain(const LayeredGraph& g, const std::vector<char>& allowed,
                         const std::function<void(std::span<const int>)>& visit);

std::vector<char> all_vertices_mask(const LayeredGraph& g);

// The Hasse graph of an n-gon: *, w_1..w_n, v_{12}..v_{n1}, u. Vertex ids
// are fixed: star 0, w_i at i, v_{i,i+1} at n+i, u at 2n+1 (1-based i).
struct DnFamily {
    LayeredGraph graph;
    int n;
    int star_id;
    int u_id;
    int w_id(int i) const;  // 1-based, taken mod n
    int v_id(int i) const;  // v_{i,i+1}, 1-based, taken mod n
};
DnFamily build_dn(int n);

// Boolean lattice of subsets of {1..n}: vertex id equals the subset
// bitmask (bit i-1 for element i), so the star is id 0.
struct BooleanLattice {
    LayeredGraph graph;
    int n;
    int vertex_of_mask(uint32_t mask) const { return static_cast<int>(mask); }
    uint32_t mask_of_vertex(int v) const { return static_cast<uint32_t>(v); }
};
BooleanLattice build_boolean_lattice(int n);

}  // namespace lga
