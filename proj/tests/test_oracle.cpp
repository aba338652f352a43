#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "lga/oracle.hpp"
#include "lga/trace.hpp"

using namespace lga;
using lga::testing::series_of;

TEST_CASE("fixed word counts match the closed forms") {
    auto d4 = build_dn(4);
    CHECK(count_fixed_words(d4.graph, identity_permutation(d4.graph), 2) ==
          expand(closed_form_dn(4, DihedralElement::identity()), 2));

    auto rot = dihedral_element(d4, DihedralElement::rotation(1));
    CHECK(count_fixed_words(d4.graph, rot, 5) == series_of({1, 1, 2, 4, 7, 13}));
}

TEST_CASE("automorphisms fixing only the minimal vertex count one word") {
    LayeredGraph g({{0, "*"}, {1, "a"}, {1, "b"}}, {{1, 0}, {2, 0}});
    VertexPermutation swap_ab{{0, 2, 1}};
    CHECK(count_fixed_words(g, swap_ab, 4) == series_of({1, 0, 0, 0, 0}));
}

TEST_CASE("counting agrees with explicit listing") {
    auto d3 = build_dn(3);
    for (const auto& e : {DihedralElement::identity(), DihedralElement::s()}) {
        auto sigma = dihedral_element(d3, e);
        auto counts = count_fixed_words(d3.graph, sigma, 3);
        auto words = list_fixed_words(d3.graph, sigma, 3);
        std::map<int, long> by_degree;
        for (const auto& w : words) ++by_degree[w.degree];
        for (int d = 0; d <= 3; ++d) CHECK(counts[d] == Rat(by_degree[d]));

        for (const auto& w : words) {
            int sum = 0;
            for (const auto& [v, k] : w.factors) {
                CHECK(k >= 1);
                CHECK(k <= d3.graph.level(v));
                sum += k;
            }
            CHECK(sum == w.degree);
            for (size_t i = 0; i + 1 < w.factors.size(); ++i) {
                const auto& [v1, k1] = w.factors[i];
                const auto& [v2, k2] = w.factors[i + 1];
                bool covering = d3.graph.reachable(v1, v2) &&
                                k1 == d3.graph.level(v1) - d3.graph.level(v2);
                CHECK(!covering);
            }
        }
    }
}

TEST_CASE("the enumeration cap is enforced") {
    auto d4 = build_dn(4);
    CHECK_THROWS_WITH_AS(count_fixed_words(d4.graph, identity_permutation(d4.graph), 3, 10),
                         doctest::Contains("enumeration cap exceeded"), std::runtime_error);
    CHECK_THROWS_AS(list_fixed_words(d4.graph, identity_permutation(d4.graph), 3, 10),
                    std::runtime_error);
}

TEST_CASE("verify_trace cross-checks all engines") {
    auto d5 = build_dn(5);
    auto report = verify_trace(d5.graph, dihedral_element(d5, DihedralElement::s()), 6);
    CHECK(report.equal);
    CHECK(report.first_mismatch_degree == -1);

    auto l4 = build_boolean_lattice(4);
    auto sigma = permutation_on_lattice(l4, parse_cycles("(12)(34)", 4));
    CHECK(verify_trace(l4.graph, sigma, 5).equal);

    auto l3 = build_boolean_lattice(3);
    auto id3 = verify_trace(l3.graph, identity_permutation(l3.graph), 6);
    CHECK(id3.equal);
    Poly pow = Poly{2, -1} * Poly{2, -1} * Poly{2, -1};
    CHECK(id3.oracle == expand({Poly{1, -1}, Poly{1} - Poly::monomial(1) * pow}, 6));
}

TEST_CASE("oracle coefficients are nonnegative integers") {
    auto d6 = build_dn(6);
    for (const auto& e : {DihedralElement::rotation(3), DihedralElement::rs()}) {
        auto s = count_fixed_words(d6.graph, dihedral_element(d6, e), 6);
        CHECK(s.all_integral());
        CHECK(s.all_nonnegative());
    }
}
