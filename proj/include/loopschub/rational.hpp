#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace loopschub {

// Exact rational coefficients.  All arithmetic in the library is exact;
// nothing is ever rounded to floating point.
using Rat = mpq_class;
using Int = mpz_class;

// Canonical text form: "num/den" with den > 0, or just "num" when den == 1.
inline std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

// floor of an exact rational.
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// ceiling of an exact rational.
inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace loopschub
