#include "lga/series.hpp"

#include <sstream>
#include <utility>

namespace lga {

namespace {
const Rat kZero(0);
}

Poly::Poly(std::vector<Rat> coefficients) : coef_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<long> coefficients) {
    coef_.reserve(coefficients.size());
    for (long c : coefficients) coef_.emplace_back(c);
    trim();
}

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (c != 0) p.coef_.push_back(c);
    return p;
}

Poly Poly::monomial(int k, const Rat& c) {
    Poly p;
    if (c != 0) {
        p.coef_.assign(static_cast<size_t>(k) + 1, Rat(0));
        p.coef_.back() = c;
    }
    return p;
}

const Rat& Poly::operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(coef_.size())) return kZero;
    return coef_[static_cast<size_t>(k)];
}

void Poly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (Rat& c : r.coef_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coef_.size() < rhs.coef_.size()) coef_.resize(rhs.coef_.size());
    for (size_t i = 0; i < rhs.coef_.size(); ++i) coef_[i] += rhs.coef_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coef_.size() < rhs.coef_.size()) coef_.resize(rhs.coef_.size());
    for (size_t i = 0; i < rhs.coef_.size(); ++i) coef_[i] -= rhs.coef_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    std::vector<Rat> out(lhs.coef_.size() + rhs.coef_.size() - 1, Rat(0));
    for (size_t i = 0; i < lhs.coef_.size(); ++i) {
        if (lhs.coef_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coef_.size(); ++j) {
            if (rhs.coef_[j] == 0) continue;
            out[i + j] += lhs.coef_[i] * rhs.coef_[j];
        }
    }
    return Poly(std::move(out));
}

Rat Poly::evaluate(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coef_.size(); i-- > 0;) acc = acc * x + coef_[i];
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coef_.size(); ++i) {
        const Rat& c = coef_[i];
        if (c == 0) continue;
        Rat a = c > 0 ? c : Rat(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c > 0 ? "+" : "-");
        }
        if (i == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) {
                if (is_integer(a)) os << rat_to_string(a);
                else os << "(" << rat_to_string(a) << ")";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly substitute_neg_t(const Poly& p) {
    std::vector<Rat> out = p.coefficients();
    for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return Poly(std::move(out));
}

Poly exact_divide(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
    if (p.is_zero()) return Poly();
    if (p.degree() < q.degree()) throw std::domain_error("exact_divide: nonzero remainder");
    std::vector<Rat> rem = p.coefficients();
    const int dq = q.degree();
    const Rat& lead = q[dq];
    std::vector<Rat> quot(rem.size() - static_cast<size_t>(dq), Rat(0));
    for (size_t i = rem.size(); i-- > static_cast<size_t>(dq);) {
        if (rem[i] == 0) continue;
        Rat c = rem[i] / lead;
        quot[i - static_cast<size_t>(dq)] = c;
        for (int j = 0; j <= dq; ++j) rem[i - static_cast<size_t>(dq) + static_cast<size_t>(j)] -= c * q[j];
    }
    for (const Rat& c : rem)
        if (c != 0) throw std::domain_error("exact_divide: nonzero remainder");
    return Poly(std::move(quot));
}

TruncatedSeries TruncatedSeries::truncated(int d) const {
    TruncatedSeries out(d);
    for (int k = 0; k <= d && k <= truncation_degree(); ++k) out[k] = coef[static_cast<size_t>(k)];
    return out;
}

bool TruncatedSeries::all_integral() const {
    for (const Rat& c : coef)
        if (!is_integer(c)) return false;
    return true;
}

bool TruncatedSeries::all_nonnegative() const {
    for (const Rat& c : coef)
        if (c < 0) return false;
    return true;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.truncation_degree(), b.truncation_degree()));
    for (int k = 0; k <= out.truncation_degree(); ++k) out[k] = a[k] + b[k];
    return out;
}

TruncatedSeries series_scale(const Rat& c, const TruncatedSeries& a) {
    TruncatedSeries out(a.truncation_degree());
    for (int k = 0; k <= out.truncation_degree(); ++k) out[k] = c * a[k];
    return out;
}

TruncatedSeries series_mul_poly(const TruncatedSeries& a, const Poly& p) {
    TruncatedSeries out(a.truncation_degree());
    for (int k = 0; k <= out.truncation_degree(); ++k) {
        Rat acc(0);
        for (int j = 0; j <= std::min(k, p.degree()); ++j) acc += p[j] * a[k - j];
        out[k] = acc;
    }
    return out;
}

TruncatedSeries series_from_poly(const Poly& p, int truncation_degree) {
    TruncatedSeries out(truncation_degree);
    for (int k = 0; k <= truncation_degree; ++k) out[k] = p[k];
    return out;
}

TruncatedSeries expand(const RationalFunction& f, int degree) {
    if (f.den[0] == 0) throw std::domain_error("expand: denominator has zero constant term");
    TruncatedSeries out(degree);
    const Rat& d0 = f.den[0];
    for (int k = 0; k <= degree; ++k) {
        Rat acc = f.num[k];
        for (int j = 1; j <= std::min(k, f.den.degree()); ++j) acc -= f.den[j] * out[k - j];
        out[k] = acc / d0;
    }
    return out;
}

}  // namespace lga
