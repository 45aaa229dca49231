#include "scrollreg/binary_form.hpp"

#include <algorithm>

namespace scrollreg {

void require_binary_form(const Polynomial& f) {
    if (!f.ring() || f.ring()->nvars() != 2)
        throw_input("binary form expected in a two-variable ring");
    if (f.is_zero()) return;
    if (!f.homogeneous_degree(0))
        throw_input("binary form must be homogeneous");
}

BinaryFormSplit split_binary_form(const Polynomial& f) {
    require_binary_form(f);
    if (f.is_zero()) throw_input("cannot split the zero form");
    int a = f.terms()[0].mono[0], b = f.terms()[0].mono[1];
    for (const Term& t : f.terms()) {
        a = std::min(a, t.mono[0]);
        b = std::min(b, t.mono[1]);
    }
    BinaryFormSplit out;
    out.pow0 = a;
    out.pow1 = b;
    int deg = static_cast<int>(*f.homogeneous_degree(0)) - a - b;
    std::vector<Rational> coeffs(deg + 1, Rational(0));
    for (const Term& t : f.terms()) coeffs[t.mono[0] - a] = t.coeff;
    out.core = UPoly(std::move(coeffs));
    return out;
}

Polynomial homogenize_binary(const UPoly& u, int degree, const RingPtr& ring) {
    std::vector<Term> terms;
    for (int i = 0; i <= u.degree(); ++i) {
        if (u.coeff(i) == 0) continue;
        terms.push_back({Monomial({i, degree - i}), u.coeff(i)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial binary_form_gcd(const std::vector<Polynomial>& forms) {
    const Polynomial* first_nonzero = nullptr;
    for (const Polynomial& f : forms)
        if (!f.is_zero()) {
            first_nonzero = &f;
            break;
        }
    if (!first_nonzero) throw_input("binary_form_gcd: all inputs are zero");
    RingPtr ring = first_nonzero->ring();

    int pow0 = -1, pow1 = -1;
    UPoly core_gcd;
    for (const Polynomial& f : forms) {
        if (f.is_zero()) continue;
        require_same_ring(f, *first_nonzero);
        BinaryFormSplit s = split_binary_form(f);
        pow0 = pow0 < 0 ? s.pow0 : std::min(pow0, s.pow0);
        pow1 = pow1 < 0 ? s.pow1 : std::min(pow1, s.pow1);
        core_gcd = core_gcd.is_zero() ? s.core.monic()
                                      : UPoly::gcd(core_gcd, s.core);
    }
    int deg = core_gcd.degree();
    Polynomial g = homogenize_binary(core_gcd, deg, ring);
    if (pow0 > 0 || pow1 > 0)
        g = g.times_monomial(Monomial({pow0, pow1}), Rational(1));
    // Monic under lex with x0 > x1: the coefficient of the highest x0-power
    // is the core's leading coefficient, already 1 after monic().
    return g;
}

} // namespace scrollreg
