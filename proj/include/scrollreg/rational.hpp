#ifndef SCROLLREG_RATIONAL_HPP
#define SCROLLREG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace scrollreg {

// Exact arithmetic substrate. Coefficients are rationals over arbitrary-size
// integers throughout; there is no floating point anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// gcd(numerators)/lcm(denominators); the unique positive rational c such that
// the inputs divided by c are coprime integers. Zero inputs are skipped; an
// all-zero list yields 0.
inline Rational rational_content(const std::vector<Rational>& qs) {
    Integer num(0), den(1);
    for (const Rational& q : qs) {
        if (q == 0) continue;
        num = int_gcd(num, q.get_num());
        den = int_lcm(den, q.get_den());
    }
    if (num == 0) return Rational(0);
    Rational c(num, den);
    c.canonicalize();
    return c;
}

} // namespace scrollreg

#endif
