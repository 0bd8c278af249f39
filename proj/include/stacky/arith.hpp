#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace stacky {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize on its own; always build
// rationals from raw numerator/denominator through this.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

// floor(q) as an integer; exact for negative values too.
inline Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "3", "-5/7": the denominator is printed only when it is not 1.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

} // namespace stacky
