#include "lga/rep.hpp"

#include "lga/dual.hpp"

namespace lga {

namespace {

void check_entries(const std::string& who, const TruncatedSeries& s, bool require_nonnegative) {
    for (int k = 0; k <= s.truncation_degree(); ++k) {
        if (!is_integer(s[k]))
            throw MultiplicityError(who + ": non-integer multiplicity at degree " +
                                    std::to_string(k));
        if (require_nonnegative && s[k] < 0)
            throw MultiplicityError(who + ": negative multiplicity at degree " + std::to_string(k));
    }
}

}  // namespace

GradedMultiplicity multiplicities_dn(int n, const TruncatedSeries& identity_trace,
                                     const TruncatedSeries& rotation_trace,
                                     const TruncatedSeries& reflection_trace,
                                     bool require_nonnegative) {
    const int degree = identity_trace.truncation_degree();
    if (rotation_trace.truncation_degree() != degree ||
        reflection_trace.truncation_degree() != degree)
        throw std::invalid_argument("multiplicities_dn: traces expanded to different degrees");

    GradedMultiplicity out;
    const Rat order(2 * n);
    for (const DnIrreducible& ir : dn_class_data(n)) {
        TruncatedSeries m(degree);
        for (int k = 0; k <= degree; ++k)
            m[k] = (Rat(ir.dimension) * identity_trace[k] + Rat(ir.rotation_sum) * rotation_trace[k] +
                    Rat(ir.reflection_sum) * reflection_trace[k]) /
                   order;
        check_entries("multiplicities_dn[" + ir.name + "]", m, require_nonnegative);
        out.names.push_back(ir.name);
        out.dimensions.push_back(ir.dimension);
        out.series.push_back(std::move(m));
    }
    return out;
}

GradedMultiplicity multiplicities_sn(int n, const std::vector<TruncatedSeries>& traces_by_class,
                                     bool require_nonnegative) {
    auto parts = partitions(n);
    if (traces_by_class.size() != parts.size())
        throw std::invalid_argument("multiplicities_sn: expected one trace per partition");
    const int degree = traces_by_class.front().truncation_degree();
    for (const auto& t : traces_by_class)
        if (t.truncation_degree() != degree)
            throw std::invalid_argument("multiplicities_sn: traces expanded to different degrees");

    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    auto table = sn_character_table(n);

    GradedMultiplicity out;
    for (size_t l = 0; l < parts.size(); ++l) {
        TruncatedSeries m(degree);
        for (size_t c = 0; c < parts.size(); ++c) {
            const Rat weight = make_rat(table[l][c] * class_size(parts[c]), fact);
            for (int k = 0; k <= degree; ++k) m[k] += weight * traces_by_class[c][k];
        }
        check_entries("multiplicities_sn[" + parts[l].to_string() + "]", m, require_nonnegative);
        out.names.push_back(parts[l].to_string());
        out.dimensions.push_back(
            static_cast<int>(table[l][parts.size() - 1].get_si()));  // class (1^n) is last
        out.series.push_back(std::move(m));
    }
    return out;
}

GradedMultiplicity multiplicities_sn_matrix(int n,
                                            const std::vector<TruncatedSeries>& traces_by_class,
                                            bool require_nonnegative) {
    auto parts = partitions(n);
    if (traces_by_class.size() != parts.size())
        throw std::invalid_argument("multiplicities_sn_matrix: expected one trace per partition");
    const int degree = traces_by_class.front().truncation_degree();
    const size_t k = parts.size();
    auto table = sn_character_table(n);

    // Invert M with M[class][irrep] = chi_irrep(class) by Gauss-Jordan
    // over exact rationals.
    std::vector<std::vector<Rat>> aug(k, std::vector<Rat>(2 * k, Rat(0)));
    for (size_t c = 0; c < k; ++c) {
        for (size_t l = 0; l < k; ++l) aug[c][l] = Rat(table[l][c]);
        aug[c][k + c] = 1;
    }
    for (size_t col = 0; col < k; ++col) {
        size_t pivot = col;
        while (pivot < k && aug[pivot][col] == 0) ++pivot;
        if (pivot == k) throw MultiplicityError("multiplicities_sn_matrix: singular character table");
        std::swap(aug[col], aug[pivot]);
        const Rat inv_p = Rat(1) / aug[col][col];
        for (size_t j = 0; j < 2 * k; ++j) aug[col][j] *= inv_p;
        for (size_t r = 0; r < k; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rat f = aug[r][col];
            for (size_t j = 0; j < 2 * k; ++j) aug[r][j] -= f * aug[col][j];
        }
    }

    GradedMultiplicity out;
    for (size_t l = 0; l < k; ++l) {
        TruncatedSeries m(degree);
        for (size_t c = 0; c < k; ++c) {
            const Rat& weight = aug[l][k + c];
            if (weight == 0) continue;
            for (int d = 0; d <= degree; ++d) m[d] += weight * traces_by_class[c][d];
        }
        check_entries("multiplicities_sn_matrix[" + parts[l].to_string() + "]", m,
                      require_nonnegative);
        out.names.push_back(parts[l].to_string());
        out.dimensions.push_back(static_cast<int>(table[l][k - 1].get_si()));
        out.series.push_back(std::move(m));
    }
    return out;
}

GradedMultiplicity dual_multiplicities_dn(int n, int degree) {
    TruncatedSeries a = series_from_poly(dual_trace_dn(n, DihedralElement::identity()), degree);
    TruncatedSeries b = series_from_poly(dual_trace_dn(n, DihedralElement::rotation(1)), degree);
    TruncatedSeries c = series_from_poly(dual_trace_dn(n, DihedralElement::s()), degree);
    return multiplicities_dn(n, a, b, c, /*require_nonnegative=*/false);
}

GradedMultiplicity dual_multiplicities_sn(int n, int degree) {
    if (n < 2) throw std::invalid_argument("dual_multiplicities_sn: n must be at least 2");
    std::vector<TruncatedSeries> traces;
    for (const Partition& mu : partitions(n))
        traces.push_back(series_from_poly(dual_trace_qn_closed(n, mu), degree));
    return multiplicities_sn(n, traces, /*require_nonnegative=*/false);
}

bool dimension_check(const GradedMultiplicity& mult, const TruncatedSeries& identity_trace) {
    const int degree = std::min(mult.degree(), identity_trace.truncation_degree());
    for (int k = 0; k <= degree; ++k) {
        Rat acc(0);
        for (int c = 0; c < mult.columns(); ++c)
            acc += Rat(mult.dimensions[static_cast<size_t>(c)]) * mult.series[static_cast<size_t>(c)][k];
        if (acc != identity_trace[k]) return false;
    }
    return true;
}

}  // namespace lga
