#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lga/rational.hpp"

namespace lga {

// Dense univariate polynomial over the rationals. Trailing zeros are
// trimmed, so the zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coefficients);
    Poly(std::initializer_list<long> coefficients);

    static Poly constant(const Rat& c);
    // c * t^k
    static Poly monomial(int k, const Rat& c = Rat(1));

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }

    // Coefficient of t^k; zero beyond the degree.
    const Rat& operator[](int k) const;
    const std::vector<Rat>& coefficients() const { return coef_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

    Rat evaluate(const Rat& x) const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rat> coef_;
};

// p(-t): flips the sign of odd-degree coefficients.
Poly substitute_neg_t(const Poly& p);

// Returns p/q when q divides p exactly; throws std::domain_error on a
// nonzero remainder (which indicates a bug or invalid input upstream).
Poly exact_divide(const Poly& p, const Poly& q);

// Formal power series truncated at a fixed degree: coefficients for
// t^0 .. t^D inclusive.
struct TruncatedSeries {
    std::vector<Rat> coef;

    TruncatedSeries() = default;
    explicit TruncatedSeries(int truncation_degree)
        : coef(static_cast<size_t>(truncation_degree) + 1) {}

    int truncation_degree() const { return static_cast<int>(coef.size()) - 1; }
    const Rat& operator[](int k) const { return coef[static_cast<size_t>(k)]; }
    Rat& operator[](int k) { return coef[static_cast<size_t>(k)]; }

    TruncatedSeries truncated(int d) const;
    bool all_integral() const;
    bool all_nonnegative() const;

    friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) = default;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const Rat& c, const TruncatedSeries& a);
// Product truncated at the degree of `a`.
TruncatedSeries series_mul_poly(const TruncatedSeries& a, const Poly& p);
TruncatedSeries series_from_poly(const Poly& p, int truncation_degree);

// Quotient of polynomials representing a formal power series; the
// denominator must have a nonzero constant term. Kept unreduced.
struct RationalFunction {
    Poly num;
    Poly den;
};

// Power-series coefficients of num/den through degree D by exact long
// division. Throws std::domain_error if den has zero constant term.
TruncatedSeries expand(const RationalFunction& f, int degree);

}  // namespace lga
