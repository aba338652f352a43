#include <doctest.h>

#include "helpers.hpp"
#include "lga/dual.hpp"
#include "lga/rep.hpp"
#include "lga/trace.hpp"

using namespace lga;
using lga::testing::series_of;

namespace {

GradedMultiplicity dn_algebra_multiplicities(int n, int degree) {
    TruncatedSeries a = expand(closed_form_dn(n, DihedralElement::identity()), degree);
    TruncatedSeries b = expand(closed_form_dn(n, DihedralElement::rotation(1)), degree);
    TruncatedSeries c = expand(closed_form_dn(n, DihedralElement::s()), degree);
    return multiplicities_dn(n, a, b, c);
}

std::vector<TruncatedSeries> qn_traces(int n, int degree) {
    std::vector<TruncatedSeries> out;
    for (const Partition& mu : partitions(n)) out.push_back(expand(closed_form_qn(n, mu), degree));
    return out;
}

}  // namespace

TEST_CASE("projection matches the explicit class-sum combinations") {
    for (int n : {4, 5}) {
        const int degree = 6;
        auto m = dn_algebra_multiplicities(n, degree);
        TruncatedSeries a = expand(closed_form_dn(n, DihedralElement::identity()), degree);
        TruncatedSeries b = expand(closed_form_dn(n, DihedralElement::rotation(1)), degree);
        TruncatedSeries c = expand(closed_form_dn(n, DihedralElement::s()), degree);

        // (a + (n-1) b) / 2n + c/2 for the trivial column, with the
        // reflection sign flipped for the second column.
        auto combo = [&](const Rat& wa, const Rat& wb, const Rat& wc) {
            TruncatedSeries out(degree);
            for (int k = 0; k <= degree; ++k) out[k] = wa * a[k] + wb * b[k] + wc * c[k];
            return out;
        };
        const Rat inv2n = make_rat(1, 2 * n);
        CHECK(m.series[0] == combo(inv2n, make_rat(n - 1, 2 * n), make_rat(1, 2)));
        CHECK(m.series[1] == combo(inv2n, make_rat(n - 1, 2 * n), make_rat(-1, 2)));
        if (n % 2 == 0) {
            CHECK(m.series[2] == combo(inv2n, -inv2n, Rat(0)));
            CHECK(m.series[3] == combo(inv2n, -inv2n, Rat(0)));
        }
        const Rat invn = make_rat(1, n);
        CHECK(m.series.back() == combo(invn, -invn, Rat(0)));
    }
}

TEST_CASE("degree-1 dihedral multiplicities decompose the vertex permutation module") {
    // Levels 1..3 of the n-gon graph carry 2n+1 fixed-point counts
    // (9, 1, 3 for n = 4); the projection of those counts must match the
    // degree-1 multiplicities.
    auto m = dn_algebra_multiplicities(4, 1);
    REQUIRE(m.names[2] == "-11");
    CHECK(m.series[2][1] == 1);
    CHECK(m.series[0][1] == 3);  // one orbit per level
    CHECK(m.series[1][1] == 0);
    CHECK(m.series[4][1] == 2);
}

TEST_CASE("class-sum reconstruction identities hold") {
    for (int n : {4, 5, 6, 7}) {
        const int degree = 8;
        auto m = dn_algebra_multiplicities(n, degree);
        auto irreps = dn_class_data(n);
        TruncatedSeries a = expand(closed_form_dn(n, DihedralElement::identity()), degree);
        TruncatedSeries b = expand(closed_form_dn(n, DihedralElement::rotation(1)), degree);
        TruncatedSeries c = expand(closed_form_dn(n, DihedralElement::s()), degree);
        for (int k = 0; k <= degree; ++k) {
            Rat dim_sum(0), rot_sum(0), refl_sum(0);
            for (size_t i = 0; i < irreps.size(); ++i) {
                dim_sum += Rat(irreps[i].dimension) * m.series[i][k];
                rot_sum += Rat(irreps[i].rotation_sum) * m.series[i][k];
                refl_sum += Rat(irreps[i].reflection_sum) * m.series[i][k];
            }
            CHECK(dim_sum == a[k]);
            CHECK(rot_sum == Rat(n - 1) * b[k]);
            CHECK(refl_sum == Rat(n) * c[k]);
        }
    }
}

TEST_CASE("subset-lattice multiplicities reproduce the printed table") {
    auto m = multiplicities_sn(4, qn_traces(4, 3));
    // Columns follow partitions(4): (4), (3,1), (2,2), (2,1,1), (1^4).
    REQUIRE(m.names == std::vector<std::string>{"4", "3,1", "2,2", "2,1,1", "1,1,1,1"});
    CHECK(m.dimensions == std::vector<int>{1, 3, 2, 3, 1});

    auto row = [&](int d) {
        std::vector<Rat> out;
        for (const auto& s : m.series) out.push_back(s[d]);
        return out;
    };
    CHECK(row(1) == std::vector<Rat>{Rat(4), Rat(3), Rat(1), Rat(0), Rat(0)});
    CHECK(row(2) == std::vector<Rat>{Rat(26), Rat(36), Rat(17), Rat(13), Rat(1)});
    CHECK(row(3) == std::vector<Rat>{Rat(219), Rat(434), Rat(239), Rat(273), Rat(54)});
}

TEST_CASE("single irreducible for n = 1") {
    auto m = multiplicities_sn(1, qn_traces(1, 5));
    REQUIRE(m.columns() == 1);
    CHECK(m.series[0] == expand(closed_form_qn(1, Partition{{1}}), 5));
}

TEST_CASE("matrix inversion route agrees with the projection") {
    for (int n : {2, 3, 4, 5}) {
        auto traces = qn_traces(n, 6);
        CHECK(multiplicities_sn(n, traces).series == multiplicities_sn_matrix(n, traces).series);
    }
}

TEST_CASE("integrality violations are rejected") {
    // A fake trace set that cannot come from a representation.
    std::vector<TruncatedSeries> traces = qn_traces(3, 3);
    traces[1][1] += 1;
    CHECK_THROWS_AS(multiplicities_sn(3, traces), MultiplicityError);
}

TEST_CASE("dual dihedral multiplicities") {
    for (int n : {4, 6}) {
        auto m = dual_multiplicities_dn(n, 3);
        REQUIRE(m.names[0] == "triv");
        auto row = [&](int d) {
            std::vector<Rat> out;
            for (const auto& s : m.series) out.push_back(s[d]);
            return out;
        };
        // chi_k columns all coincide.
        for (int c = 5; c < m.columns(); ++c) CHECK(m.series[static_cast<size_t>(c)] == m.series[4]);
        CHECK(row(1)[0] == 3);
        CHECK(row(1)[1] == 0);
        CHECK(row(1)[2] == 1);
        CHECK(row(1)[3] == 1);
        CHECK(row(1)[4] == 2);
        CHECK(row(2)[0] == 0);
        CHECK(row(2)[1] == 1);
        CHECK(row(2)[2] == 1);
        CHECK(row(2)[3] == 1);
        CHECK(row(2)[4] == 2);
        // The 1-dimensional top component transforms by the character
        // that is 1 on rotations and -1 on reflections.
        CHECK(row(3)[0] == 0);
        CHECK(row(3)[1] == 1);
        for (int c = 2; c < m.columns(); ++c) CHECK(row(3)[static_cast<size_t>(c)] == 0);
    }
    for (int n : {5, 7}) {
        auto m = dual_multiplicities_dn(n, 3);
        auto row = [&](int d) {
            std::vector<Rat> out;
            for (const auto& s : m.series) out.push_back(s[d]);
            return out;
        };
        CHECK(row(1)[0] == 3);
        CHECK(row(1)[1] == 0);
        CHECK(row(1)[2] == 2);
        CHECK(row(2)[0] == 0);
        CHECK(row(2)[1] == 1);
        CHECK(row(2)[2] == 2);
        CHECK(row(3)[0] == 0);
        CHECK(row(3)[1] == 1);
        CHECK(row(3)[2] == 0);
    }
}

TEST_CASE("dual reconstruction recovers the dual traces") {
    for (int n : {4, 5}) {
        auto m = dual_multiplicities_dn(n, 3);
        auto irreps = dn_class_data(n);
        TruncatedSeries a = series_from_poly(dual_trace_dn(n, DihedralElement::identity()), 3);
        TruncatedSeries b = series_from_poly(dual_trace_dn(n, DihedralElement::rotation(1)), 3);
        TruncatedSeries c = series_from_poly(dual_trace_dn(n, DihedralElement::s()), 3);
        for (int k = 0; k <= 3; ++k) {
            Rat dim_sum(0), rot_sum(0), refl_sum(0);
            for (size_t i = 0; i < irreps.size(); ++i) {
                dim_sum += Rat(irreps[i].dimension) * m.series[i][k];
                rot_sum += Rat(irreps[i].rotation_sum) * m.series[i][k];
                refl_sum += Rat(irreps[i].reflection_sum) * m.series[i][k];
            }
            CHECK(dim_sum == a[k]);
            CHECK(rot_sum == Rat(n - 1) * b[k]);
            CHECK(refl_sum == Rat(n) * c[k]);
        }
    }
}

TEST_CASE("dual subset-lattice multiplicities reproduce the printed table") {
    auto m = dual_multiplicities_sn(4, 4);
    auto row = [&](int d) {
        std::vector<Rat> out;
        for (const auto& s : m.series) out.push_back(s[d]);
        return out;
    };
    // Columns (4), (3,1), (2,2), (2,1,1), (1^4).
    CHECK(row(1) == std::vector<Rat>{Rat(4), Rat(3), Rat(1), Rat(0), Rat(0)});
    CHECK(row(2) == std::vector<Rat>{Rat(0), Rat(3), Rat(1), Rat(2), Rat(0)});
    CHECK(row(3) == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(2), Rat(1)});
    CHECK(row(4) == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("dual multiplicities vanish beyond the dual trace degree") {
    auto mdn = dual_multiplicities_dn(5, 10);
    for (const auto& s : mdn.series)
        for (int k = 4; k <= 10; ++k) CHECK(s[k] == 0);

    auto msn = dual_multiplicities_sn(4, 10);
    int top = 0;
    for (const Partition& mu : partitions(4))
        top = std::max(top, dual_trace_qn_closed(4, mu).degree());
    for (const auto& s : msn.series)
        for (int k = top + 1; k <= 10; ++k) CHECK(s[k] == 0);
}

TEST_CASE("dimension check") {
    auto m = multiplicities_sn(4, qn_traces(4, 3));
    CHECK(dimension_check(m, expand(closed_form_qn(4, Partition{{1, 1, 1, 1}}), 3)));

    auto md = dual_multiplicities_sn(4, 4);
    CHECK(dimension_check(md, series_from_poly(dual_trace_qn_closed(4, Partition{{1, 1, 1, 1}}), 4)));

    auto m1 = multiplicities_sn(1, qn_traces(1, 4));
    CHECK(dimension_check(m1, expand(closed_form_qn(1, Partition{{1}}), 4)));

    auto bad = m;
    bad.series[0][1] += 1;
    CHECK(!dimension_check(bad, expand(closed_form_qn(4, Partition{{1, 1, 1, 1}}), 3)));
}
