#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lga {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Renders "p" for integers and "p/q" otherwise.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Accepts "p" or "p/q".
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

}  // namespace lga
