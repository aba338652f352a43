#include "lga/layered_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace lga {

LayeredGraph::LayeredGraph(std::vector<VertexData> vertices, std::vector<std::pair<int, int>> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
    const int n = vertex_count();
    down_.resize(static_cast<size_t>(n));
    leveled_ = true;
    for (const auto& [upper, lower] : edges_) {
        if (upper < 0 || upper >= n || lower < 0 || lower >= n)
            throw std::invalid_argument("edge references unknown vertex id");
        down_[static_cast<size_t>(upper)].push_back(lower);
        if (level(upper) != level(lower) + 1) leveled_ = false;
    }
    int star_count = 0;
    for (int v = 0; v < n; ++v) {
        max_level_ = std::max(max_level_, level(v));
        if (level(v) == 0) {
            ++star_count;
            star_ = v;
        }
    }
    if (star_count != 1) star_ = -1;

    if (leveled_) {
        // Descendant bitsets by increasing level; edges only drop one
        // level, so children are always filled in first.
        const size_t words = (static_cast<size_t>(n) + 63) / 64;
        reach_.assign(static_cast<size_t>(n), std::vector<uint64_t>(words, 0));
        std::vector<int> order(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return level(a) < level(b); });
        for (int v : order) {
            auto& row = reach_[static_cast<size_t>(v)];
            for (int c : down_[static_cast<size_t>(v)]) {
                const auto& crow = reach_[static_cast<size_t>(c)];
                for (size_t w = 0; w < words; ++w) row[w] |= crow[w];
                row[static_cast<size_t>(c) / 64] |= uint64_t{1} << (static_cast<size_t>(c) % 64);
            }
        }
    }
}

bool LayeredGraph::reachable(int v, int w) const {
    if (v < 0 || v >= vertex_count() || w < 0 || w >= vertex_count())
        throw std::invalid_argument("reachable: unknown vertex id");
    if (!leveled_)
        throw std::logic_error("reachable: graph has edges that do not drop exactly one level");
    return (reach_[static_cast<size_t>(v)][static_cast<size_t>(w) / 64] >>
            (static_cast<size_t>(w) % 64)) &
           1;
}

int LayeredGraph::find_label(const std::string& label) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (verts_[static_cast<size_t>(v)].label == label) return v;
    return -1;
}

bool is_uniform(const LayeredGraph& g) {
    if (!g.structurally_leveled()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.level(v) < 2) continue;
        auto below = g.lower_neighbors(v);
        const size_t m = below.size();
        if (m <= 1) continue;
        // Union-find over S_1(v), merging vertices that share a lower
        // neighbor; uniform means a single component.
        std::vector<size_t> parent(m);
        for (size_t i = 0; i < m; ++i) parent[i] = i;
        std::function<size_t(size_t)> find = [&](size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = i + 1; j < m; ++j) {
                auto si = g.lower_neighbors(below[i]);
                bool share = false;
                for (int x : si) {
                    auto sj = g.lower_neighbors(below[j]);
                    if (std::find(sj.begin(), sj.end(), x) != sj.end()) {
                        share = true;
                        break;
                    }
                }
                if (share) parent[find(i)] = find(j);
            }
        }
        size_t roots = 0;
        for (size_t i = 0; i < m; ++i)
            if (find(i) == i) ++roots;
        if (roots > 1) return false;
    }
    return true;
}

std::vector<Diagnostic> validate(const LayeredGraph& g) {
    std::vector<Diagnostic> out;
    auto error = [&](std::string msg) {
        out.push_back({Diagnostic::Severity::error, std::move(msg)});
    };

    int star_count = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.level(v) == 0) ++star_count;
    if (star_count != 1) error("unique minimal vertex required");

    for (const auto& [upper, lower] : g.edges())
        if (g.level(upper) != g.level(lower) + 1) {
            error("edge must drop exactly one level: " + g.label(upper) + " -> " + g.label(lower));
        }

    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.level(v) >= 1 && g.lower_neighbors(v).empty())
            error("vertex has no downward edge: " + g.label(v));

    {
        std::set<std::string> labels;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!labels.insert(g.label(v)).second) error("duplicate vertex label: " + g.label(v));
    }
    {
        std::set<std::pair<int, int>> seen;
        for (const auto& e : g.edges())
            if (!seen.insert(e).second)
                error("duplicate edge: " + g.label(e.first) + " -> " + g.label(e.second));
    }

    if (!has_errors(out)) {
        out.push_back({Diagnostic::Severity::warning,
                       is_uniform(g) ? "graph is uniform" : "graph is not uniform"});
    }
    return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Diagnostic::Severity::error) return true;
    return false;
}

namespace {

void chain_dfs(const LayeredGraph& g, const std::vector<std::vector<int>>& desc,
               std::vector<int>& stack, long long& count,
               const std::function<void(std::span<const int>)>& visit) {
    visit(stack);
    ++count;
    for (int w : desc[static_cast<size_t>(stack.back())]) {
        stack.push_back(w);
        chain_dfs(g, desc, stack, count, visit);
        stack.pop_back();
    }
}

}  // namespace

long long for_each_chain(const LayeredGraph& g, const std::vector<char>& allowed,
                         const std::function<void(std::span<const int>)>& visit) {
    if (allowed.size() != static_cast<size_t>(g.vertex_count()))
        throw std::invalid_argument("for_each_chain: allowed mask has wrong size");
    // Allowed descendants per allowed vertex, so the DFS never rescans
    // the full vertex set.
    std::vector<std::vector<int>> desc(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!allowed[static_cast<size_t>(v)]) continue;
        for (int w = 0; w < g.vertex_count(); ++w)
            if (allowed[static_cast<size_t>(w)] && g.reachable(v, w))
                desc[static_cast<size_t>(v)].push_back(w);
    }
    long long count = 0;
    std::vector<int> stack;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!allowed[static_cast<size_t>(v)]) continue;
        stack.assign(1, v);
        chain_dfs(g, desc, stack, count, visit);
    }
    return count;
}

std::vector<char> all_vertices_mask(const LayeredGraph& g) {
    return std::vector<char>(static_cast<size_t>(g.vertex_count()), 1);
}

int DnFamily::w_id(int i) const {
    int r = ((i - 1) % n + n) % n;
    return 1 + r;
}

int DnFamily::v_id(int i) const {
    int r = ((i - 1) % n + n) % n;
    return n + 1 + r;
}

DnFamily build_dn(int n) {
    if (n < 3) throw std::invalid_argument("build_dn: n must be at least 3");
    std::vector<LayeredGraph::VertexData> verts;
    verts.push_back({0, "*"});
    for (int i = 1; i <= n; ++i) verts.push_back({1, "w_" + std::to_string(i)});
    for (int i = 1; i <= n; ++i) {
        int j = i % n + 1;
        verts.push_back({2, "v_" + std::to_string(i) + "," + std::to_string(j)});
    }
    verts.push_back({3, "u"});

    std::vector<std::pair<int, int>> edges;
    const int u = 2 * n + 1;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, 0);  // w_i -> *
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(n + i, i);            // v_{i,i+1} -> w_i
        edges.emplace_back(n + i, i % n + 1);    // v_{i,i+1} -> w_{i+1}
    }
    for (int i = 1; i <= n; ++i) edges.emplace_back(u, n + i);  // u -> v_{i,i+1}

    DnFamily fam{LayeredGraph(std::move(verts), std::move(edges)), n, 0, u};
    return fam;
}

BooleanLattice build_boolean_lattice(int n) {
    if (n < 1) throw std::invalid_argument("build_boolean_lattice: n must be at least 1");
    if (n > 25) throw std::invalid_argument("build_boolean_lattice: n too large");
    const uint32_t size = uint32_t{1} << n;
    std::vector<LayeredGraph::VertexData> verts(size);
    for (uint32_t mask = 0; mask < size; ++mask) {
        std::string lbl;
        if (mask == 0) {
            lbl = "{}";
        } else {
            lbl = "{";
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) lbl += std::to_string(i + 1) + ",";
            lbl.back() = '}';
        }
        verts[mask] = {__builtin_popcount(mask), std::move(lbl)};
    }
    std::vector<std::pair<int, int>> edges;
    for (uint32_t mask = 1; mask < size; ++mask)
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1)
                edges.emplace_back(static_cast<int>(mask), static_cast<int>(mask & ~(uint32_t{1} << i)));
    return BooleanLattice{LayeredGraph(std::move(verts), std::move(edges)), n};
}

}  // namespace lga
