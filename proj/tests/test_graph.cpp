#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lga/graph_io.hpp"
#include "lga/layered_graph.hpp"

using namespace lga;

TEST_CASE("build_dn shape") {
    auto d3 = build_dn(3);
    CHECK(d3.graph.vertex_count() == 8);
    CHECK(d3.graph.edges().size() == 12);

    auto d5 = build_dn(5);
    CHECK(d5.graph.vertex_count() == 12);
    for (int v = 0; v < d5.graph.vertex_count(); ++v)
        if (d5.graph.level(v) == 2) CHECK(d5.graph.lower_neighbors(v).size() == 2);

    auto d4 = build_dn(4);
    int v41 = d4.graph.find_label("v_4,1");
    REQUIRE(v41 >= 0);
    std::set<std::string> lowers;
    for (int w : d4.graph.lower_neighbors(v41)) lowers.insert(d4.graph.label(w));
    CHECK(lowers == std::set<std::string>{"w_4", "w_1"});

    CHECK_THROWS_AS(build_dn(2), std::invalid_argument);
}

TEST_CASE("build_boolean_lattice shape") {
    auto l4 = build_boolean_lattice(4);
    CHECK(l4.graph.vertex_count() == 16);
    CHECK(l4.graph.edges().size() == 32);
    std::map<int, int> level_sizes;
    for (int v = 0; v < l4.graph.vertex_count(); ++v) ++level_sizes[l4.graph.level(v)];
    CHECK(level_sizes == std::map<int, int>{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}});

    auto l1 = build_boolean_lattice(1);
    CHECK(l1.graph.vertex_count() == 2);
    CHECK(l1.graph.edges().size() == 1);

    CHECK_THROWS_AS(build_boolean_lattice(0), std::invalid_argument);
}

TEST_CASE("validate accepts built graphs and flags uniformity") {
    auto d5 = build_dn(5);
    auto l4 = build_boolean_lattice(4);
    for (const LayeredGraph* g : {&d5.graph, &l4.graph}) {
        auto diags = validate(*g);
        CHECK(!has_errors(diags));
        bool uniform_note = false;
        for (const auto& d : diags)
            if (d.severity == Diagnostic::Severity::warning && d.message == "graph is uniform")
                uniform_note = true;
        CHECK(uniform_note);
    }
}

TEST_CASE("validate reports axiom violations") {
    // Level-2 vertex with no downward edge.
    LayeredGraph g({{0, "*"}, {1, "a"}, {2, "b"}}, {{1, 0}});
    auto diags = validate(g);
    REQUIRE(has_errors(diags));
    bool found = false;
    for (const auto& d : diags)
        if (d.message.find("vertex has no downward edge") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("reachable follows the path order") {
    auto d4 = build_dn(4);
    const auto& g = d4.graph;
    CHECK(g.reachable(d4.u_id, d4.w_id(2)));
    CHECK(!g.reachable(d4.v_id(1), d4.w_id(3)));

    auto l4 = build_boolean_lattice(4);
    CHECK(!l4.graph.reachable(l4.vertex_of_mask(0b101), l4.vertex_of_mask(0b010)));
    CHECK(l4.graph.reachable(l4.vertex_of_mask(0b111), l4.vertex_of_mask(0b010)));

    CHECK_THROWS_AS(g.reachable(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.reachable(0, 99), std::invalid_argument);

    // Irreflexive, level-monotone, transitive.
    for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK(!g.reachable(v, v));
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (g.reachable(v, w)) CHECK(g.level(v) > g.level(w));
            for (int x = 0; x < g.vertex_count(); ++x)
                if (g.reachable(v, w) && g.reachable(w, x)) CHECK(g.reachable(v, x));
        }
    }
}

namespace {

// Independent chain count on the subset lattice: extend chains by strict
// subset containment, no graph machinery involved.
long long brute_chain_count(int n) {
    const uint32_t size = uint32_t{1} << n;
    // count[top] = chains whose top element is `top`.
    std::vector<long long> count(size, 0);
    std::vector<uint32_t> by_popcount(size);
    for (uint32_t m = 0; m < size; ++m) by_popcount[m] = m;
    std::sort(by_popcount.begin(), by_popcount.end(), [](uint32_t a, uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    long long total = 0;
    for (uint32_t top : by_popcount) {
        long long c = 1;
        for (uint32_t sub = top; sub != 0; sub = (sub - 1) & top)
            if (sub != top) c += count[sub];
        // the empty set is a proper subset of every nonempty set
        if (top != 0) c += count[0];
        count[top] = c;
        total += c;
    }
    return total;
}

}  // namespace

TEST_CASE("chain enumeration") {
    auto d5 = build_dn(5);
    std::vector<char> allowed(static_cast<size_t>(d5.graph.vertex_count()), 0);
    allowed[static_cast<size_t>(d5.star_id)] = 1;
    allowed[static_cast<size_t>(d5.u_id)] = 1;
    std::vector<std::vector<int>> seen;
    long long count = for_each_chain(d5.graph, allowed, [&](std::span<const int> c) {
        seen.emplace_back(c.begin(), c.end());
    });
    CHECK(count == 3);
    CHECK(seen.size() == 3);

    std::vector<char> only_star(static_cast<size_t>(d5.graph.vertex_count()), 0);
    only_star[static_cast<size_t>(d5.star_id)] = 1;
    CHECK(for_each_chain(d5.graph, only_star, [](std::span<const int>) {}) == 1);

    // 19 chain shapes: 3 appear once, 16 appear n times.
    for (int n : {3, 4, 5, 6}) {
        auto dn = build_dn(n);
        CHECK(for_each_chain(dn.graph, all_vertices_mask(dn.graph), [](std::span<const int>) {}) ==
              16 * n + 3);
    }

    for (int n = 1; n <= 4; ++n) {
        auto ln = build_boolean_lattice(n);
        CHECK(for_each_chain(ln.graph, all_vertices_mask(ln.graph), [](std::span<const int>) {}) ==
              brute_chain_count(n));
    }
}

TEST_CASE("chains are strictly descending and unique") {
    auto l3 = build_boolean_lattice(3);
    std::set<std::vector<int>> seen;
    for_each_chain(l3.graph, all_vertices_mask(l3.graph), [&](std::span<const int> c) {
        std::vector<int> v(c.begin(), c.end());
        CHECK(seen.insert(v).second);
        for (size_t i = 0; i + 1 < v.size(); ++i) CHECK(l3.graph.reachable(v[i], v[i + 1]));
    });
}

TEST_CASE("graph file round trip") {
    auto d3 = build_dn(3);
    LayeredGraph parsed = parse_graph(format_graph(d3.graph));
    REQUIRE(parsed.vertex_count() == d3.graph.vertex_count());
    for (int v = 0; v < parsed.vertex_count(); ++v) {
        CHECK(parsed.level(v) == d3.graph.level(v));
        CHECK(parsed.label(v) == d3.graph.label(v));
    }
    CHECK(parsed.edges() == d3.graph.edges());
}

TEST_CASE("graph file with renamed ids matches build_dn(3)") {
    // Same graph, ids are arbitrary tokens.
    std::string doc = R"(# triangle Hasse graph
levels: 3
vertices:
bottom 0 *
a1 1 w_1
a2 1 w_2
a3 1 w_3
b1 2 v_1,2
b2 2 v_2,3
b3 2 v_3,1
top 3 u
edges:
a1 bottom
a2 bottom
a3 bottom
b1 a1
b1 a2
b2 a2
b2 a3
b3 a3
b3 a1
top b1
top b2
top b3
)";
    LayeredGraph g = parse_graph(doc);
    auto d3 = build_dn(3);
    REQUIRE(g.vertex_count() == d3.graph.vertex_count());
    // Compare edge sets through the label bijection.
    std::map<std::string, int> to_builtin;
    for (int v = 0; v < d3.graph.vertex_count(); ++v) to_builtin[d3.graph.label(v)] = v;
    std::set<std::pair<int, int>> translated;
    for (const auto& [a, b] : g.edges())
        translated.insert({to_builtin.at(g.label(a)), to_builtin.at(g.label(b))});
    std::set<std::pair<int, int>> expected(d3.graph.edges().begin(), d3.graph.edges().end());
    CHECK(translated == expected);
}

TEST_CASE("graph file errors") {
    // Edge skipping a level.
    std::string skip = "levels: 2\nvertices:\n0 0 *\n1 2 a\n2 1 b\nedges:\n1 0\n2 0\n";
    CHECK_THROWS_WITH_AS(parse_graph(skip),
                         doctest::Contains("edge must drop exactly one level"),
                         GraphValidationError);

    std::string two_stars = "levels: 1\nvertices:\n0 0 *\n1 0 o\n2 1 a\nedges:\n2 0\n";
    CHECK_THROWS_WITH_AS(parse_graph(two_stars),
                         doctest::Contains("unique minimal vertex required"), GraphValidationError);

    CHECK_THROWS_AS(parse_graph("levels: 1\nvertices:\n0 0 *\nedges:\n0 7\n"), GraphParseError);
    CHECK_THROWS_AS(parse_graph("vertices:\n0 0 *\n"), GraphParseError);
    CHECK_THROWS_AS(parse_graph("levels: 1\nvertices:\n0 0 *\n0 1 a\nedges:\n"), GraphParseError);
}
