#ifndef SCROLLREG_BINARY_FORM_HPP
#define SCROLLREG_BINARY_FORM_HPP

#include <vector>

#include "scrollreg/polynomial.hpp"
#include "scrollreg/upoly.hpp"

namespace scrollreg {

/// Binary forms are homogeneous polynomials in a two-variable ring (the
/// coordinate ring of a projective line). Zero counts as a form of every
/// degree. These helpers validate and manipulate them as plain Polynomials.

/// Throws unless f lives in a two-variable ring and is homogeneous (or zero).
void require_binary_form(const Polynomial& f);

/// Writes f = x0^a * x1^b * core with core divisible by neither variable.
/// The core is returned dehomogenized at x1 = 1: a univariate polynomial in
/// x0 of degree deg(core) with nonzero constant term.
struct BinaryFormSplit {
    int pow0 = 0;
    int pow1 = 0;
    UPoly core; // dehomogenized, core(0) != 0
};
BinaryFormSplit split_binary_form(const Polynomial& f);

/// Homogenization of a univariate polynomial to a binary form of the given
/// degree (>= deg u) in the two-variable ring.
Polynomial homogenize_binary(const UPoly& u, int degree, const RingPtr& ring);

/// Monic greatest common divisor of a family of binary forms, normalized so
/// the lex-leading coefficient (x0 > x1) is one. Errors if every input is
/// zero; zero inputs are otherwise ignored.
Polynomial binary_form_gcd(const std::vector<Polynomial>& forms);

} // namespace scrollreg

#endif
