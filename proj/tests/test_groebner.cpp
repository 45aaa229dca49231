#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scrollreg/groebner.hpp"
#include "scrollreg/hilbert.hpp"
#include "scrollreg/linalg.hpp"

using namespace scrollreg;

namespace {

Polynomial P(const std::string& text, const RingPtr& ring) {
    return parse_polynomial(text, ring);
}

RingPtr ring_x4() { return PolyRing::make({"x0", "x1", "x2", "x3"}); }

Ideal twisted_cubic(const RingPtr& r) {
    return Ideal::make(r, {P("x0*x2 - x1^2", r), P("x0*x3 - x1*x2", r),
                           P("x1*x3 - x2^2", r)});
}

// Independent oracle: coefficient vector of f on the monomial basis of its
// degree, for exact linear algebra.
std::vector<Rational> coeff_vector(const Polynomial& f,
                                   const std::vector<Monomial>& basis) {
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const Term& t : f.terms()) {
        bool found = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == t.mono) {
                v[i] = t.coeff;
                found = true;
                break;
            }
        REQUIRE(found);
    }
    return v;
}

// Brute-force dimension of the degree-m piece of an ideal: rank of the span
// of all monomial multiples of the generators, exact over Q.
long brute_ideal_piece_dim(const Ideal& I, int m) {
    auto basis = monomials_of_degree(I.ring->nvars(), m);
    RowSpan span;
    long rank = 0;
    for (const Polynomial& g : I.generators) {
        auto d = g.homogeneous_degree(0);
        REQUIRE(d.has_value());
        if (*d > m) continue;
        for (const Monomial& mu :
             monomials_of_degree(I.ring->nvars(), m - static_cast<int>(*d)))
            if (span.add(coeff_vector(g.times_monomial(mu, Rational(1)), basis)))
                ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("normal form basics") {
    auto r = ring_x4();
    GroebnerBasis G = buchberger(twisted_cubic(r));
    for (const Polynomial& g : G.elements)
        CHECK(normal_form(g, G).is_zero());
    CHECK(normal_form(Polynomial::constant(r, Rational(1)), G) ==
          Polynomial::constant(r, Rational(1)));

    // Single division step by hand: x^2 mod (x - y) under lex x > y is y^2.
    auto xy = PolyRing::make({"x", "y"});
    GroebnerBasis L = buchberger(Ideal::make(xy, {P("x - y", xy)}),
                                 MonomialOrder::lex());
    CHECK(normal_form(P("x^2", xy), L) == P("y^2", xy));
}

TEST_CASE("buchberger: principal and monomial ideals") {
    auto xy = PolyRing::make({"x", "y"});
    GroebnerBasis G = buchberger(Ideal::make(xy, {P("3*x^2 - 3*y^2", xy)}));
    REQUIRE(G.elements.size() == 1);
    CHECK(G.elements[0] == P("x^2 - y^2", xy));

    GroebnerBasis M = buchberger(Ideal::make(xy, {P("x", xy), P("y", xy)}));
    REQUIRE(M.elements.size() == 2);
    CHECK(M.elements[0] == P("y", xy));
    CHECK(M.elements[1] == P("x", xy));
}

TEST_CASE("twisted cubic: kernel against the brute-force vanishing oracle") {
    auto r = ring_x4();
    auto st = PolyRing::make({"s", "t"});
    std::vector<Polynomial> images = {P("s^3", st), P("s^2*t", st),
                                      P("s*t^2", st), P("t^3", st)};

    // Oracle: quadrics vanishing on the parametrization, by exact linear
    // algebra. Substitute each degree-2 monomial and collect coefficient
    // rows on the degree-6 binary monomial basis.
    auto quad_monos = monomials_of_degree(4, 2);
    auto target_basis = monomials_of_degree(2, 6);
    std::vector<std::vector<Rational>> rows;
    for (const Monomial& mu : quad_monos) {
        Polynomial sub = Polynomial::monomial(r, mu, Rational(1)).substitute(images);
        rows.push_back(coeff_vector(sub, target_basis));
    }
    // Kernel dimension = 10 - rank = number of independent quadrics on the
    // curve; the twisted cubic has exactly 3.
    long rk = rank_exact(rows);
    CHECK(quad_monos.size() - rk == 3);

    // The implementation's kernel.
    Ideal ker = kernel_of_ring_map(r, images);
    GroebnerBasis G = buchberger(ker);
    Ideal expected = twisted_cubic(r);
    CHECK(ideal_equal(ker, expected));

    // Every returned generator of degree 2 vanishes on the parametrization.
    for (const Polynomial& g : ker.generators) {
        Polynomial sub = g.substitute(images);
        CHECK(sub.is_zero());
    }
    REQUIRE(G.elements.size() == 3);
}

TEST_CASE("buchberger criterion on random homogeneous ideals") {
    auto ring = PolyRing::make({"x", "y", "z"});
    std::mt19937_64 rng(2024);
    auto random_form = [&](int deg) {
        std::vector<Term> ts;
        for (const Monomial& m : monomials_of_degree(3, deg)) {
            long c = static_cast<long>(rng() % 7) - 3;
            if (rng() % 3 == 0) c = 0;
            ts.push_back({m, Rational(c)});
        }
        return Polynomial::from_terms(ring, std::move(ts));
    };
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> gens = {random_form(2), random_form(2),
                                        random_form(3)};
        Ideal I = Ideal::make(ring, gens);
        if (I.generators.empty()) continue;
        GroebnerBasis G = buchberger(I);
        // Every S-polynomial of the returned basis reduces to zero.
        for (std::size_t i = 0; i < G.elements.size(); ++i)
            for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
                Polynomial s = s_polynomial(G.elements[i], G.elements[j], G.order);
                CHECK(normal_form(s, G).is_zero());
            }
        // Reducedness: monic, no cross-divisible terms.
        for (std::size_t i = 0; i < G.elements.size(); ++i) {
            CHECK(G.elements[i].terms().front().coeff == 1);
            for (std::size_t j = 0; j < G.elements.size(); ++j) {
                if (i == j) continue;
                const Monomial& lm = G.elements[j].terms().front().mono;
                for (const Term& t : G.elements[i].terms())
                    CHECK(!lm.divides(t.mono));
            }
        }
        // Membership soundness: random combinations reduce to zero.
        for (int k = 0; k < 4; ++k) {
            Polynomial f = Polynomial::zero(ring);
            for (const Polynomial& g : I.generators)
                f = f + g * random_form(1 + static_cast<int>(rng() % 2));
            CHECK(normal_form(f, G).is_zero());
        }
    }
}

TEST_CASE("elimination") {
    auto r = ring_x4();
    Ideal tc = twisted_cubic(r);

    // eliminate(I, {}) is the identity.
    Ideal same = eliminate(tc, {});
    CHECK(ideal_equal(same, tc));

    // A principal ideal loses its only generator.
    Ideal conic = Ideal::make(r, {P("x0*x2 - x1^2", r)});
    Ideal none = eliminate(conic, {"x0"});
    CHECK(none.generators.empty());

    // Projection of the twisted cubic from the coordinate point: the conic.
    Ideal el = eliminate(tc, {"x0"});
    auto sub = el.ring;
    REQUIRE(sub->nvars() == 3);
    GroebnerBasis Gel = buchberger(el);
    REQUIRE(Gel.elements.size() == 1);
    CHECK(Gel.elements[0] == P("x1*x3 - x2^2", sub));

    // Both directions against brute force: every element of I of degree <= 3
    // supported on the retained variables lies in the elimination ideal, and
    // every elimination generator is in I.
    GroebnerBasis G = buchberger(tc);
    for (const Polynomial& g : el.generators) {
        Polynomial lifted = parse_polynomial(g.to_string(), r);
        CHECK(normal_form(lifted, G).is_zero());
    }
    // Brute-force search: intersection of I_m with the retained-monomial
    // span, via exact kernels.
    for (int m = 2; m <= 3; ++m) {
        auto basis = monomials_of_degree(4, m);
        RowSpan ideal_span;
        for (const Polynomial& g : tc.generators) {
            int d = static_cast<int>(*g.homogeneous_degree(0));
            if (d > m) continue;
            for (const Monomial& mu : monomials_of_degree(4, m - d))
                ideal_span.add(coeff_vector(g.times_monomial(mu, Rational(1)),
                                            basis));
        }
        GroebnerBasis Gsub = buchberger(el);
        for (const Monomial& mu : monomials_of_degree(3, m)) {
            // Lift a retained monomial (x1,x2,x3) into the big ring.
            std::vector<int> e = {0, mu[0], mu[1], mu[2]};
            Polynomial cand = Polynomial::monomial(r, Monomial(e), Rational(1));
            // Candidates inside the ideal must reduce to zero in the subring.
            if (ideal_span.contains(coeff_vector(cand, basis))) {
                Polynomial in_sub = parse_polynomial(cand.to_string(), sub);
                CHECK(normal_form(in_sub, Gsub).is_zero());
            }
        }
    }
}

TEST_CASE("quotient and saturation") {
    auto x = PolyRing::make({"x"});
    Ideal x2 = Ideal::make(x, {P("x^2", x)});
    Ideal xx = Ideal::make(x, {P("x", x)});
    Ideal sat = saturate(x2, xx);
    REQUIRE(sat.generators.size() == 1);
    CHECK(sat.generators[0] == Polynomial::constant(x, Rational(1)));

    auto r = ring_x4();
    Ideal tc = twisted_cubic(r);
    Ideal one = Ideal::make(r, {Polynomial::constant(r, Rational(1))});
    CHECK(ideal_equal(saturate(tc, one), tc));

    // Quotient: ((x0 g : g in TC) : irrelevant) recovers TC after saturation.
    std::vector<Polynomial> scaled;
    for (const Polynomial& g : tc.generators)
        scaled.push_back(P("x0", r) * g);
    Ideal I = Ideal::make(r, scaled);
    Ideal back = saturate(I, irrelevant_ideal(r));
    CHECK(ideal_equal(back, tc));

    // Saturation is idempotent and contains the input.
    Ideal again = saturate(back, irrelevant_ideal(r));
    CHECK(ideal_equal(again, back));
    GroebnerBasis Gb = buchberger(back);
    for (const Polynomial& g : I.generators)
        CHECK(normal_form(g, Gb).is_zero());

    // (I : f) with f = x0 directly.
    Ideal q = ideal_quotient(I, Ideal::make(r, {P("x0", r)}));
    CHECK(ideal_equal(q, tc));
}

TEST_CASE("kernel of ring map: edge cases") {
    auto st = PolyRing::make({"s", "t"});
    auto xy = PolyRing::make({"x", "y"});
    Ideal zero = kernel_of_ring_map(xy, {P("s", st), P("t", st)});
    CHECK(zero.generators.empty());

    // Degenerate image with a zero coordinate.
    auto r = ring_x4();
    Ideal ker = kernel_of_ring_map(
        r, {P("s^2", st), P("s*t", st), P("t^2", st), Polynomial::zero(st)});
    GroebnerBasis G = buchberger(ker);
    CHECK(normal_form(P("x3", r), G).is_zero());
    CHECK(normal_form(P("x0*x2 - x1^2", r), G).is_zero());
    Ideal expected = Ideal::make(r, {P("x3", r), P("x0*x2 - x1^2", r)});
    CHECK(ideal_equal(ker, expected));

    CHECK_THROWS_AS(
        kernel_of_ring_map(xy, {P("s^2", st), P("s + t^2", st)}), Error);
    CHECK_THROWS_AS(kernel_of_ring_map(xy, {P("s^2", st), P("t^3", st)}),
                    Error);
}

TEST_CASE("hilbert data") {
    // Zero ideal in 4 variables: projective space P^3.
    auto r = ring_x4();
    HilbertData h0 = hilbert_data(Ideal::make(r, {}));
    CHECK(h0.krull_dimension == 4);
    CHECK(h0.degree == 1);
    CHECK(h0.projective_dimension() == 3);

    // Twisted cubic: dimension 1, degree 3, Hilbert function 3m+1.
    HilbertData h = hilbert_data(twisted_cubic(r));
    CHECK(h.krull_dimension == 2);
    CHECK(h.degree == 3);
    CHECK(!h.empty);
    for (int m = 0; m <= 5; ++m)
        CHECK(h.series_coefficient(m) == 3 * m + 1);
    // Hilbert polynomial 3m+1.
    REQUIRE(h.hilbert_polynomial.degree() == 1);
    CHECK(h.hilbert_polynomial.coeff(1) == 3);
    CHECK(h.hilbert_polynomial.coeff(0) == 1);

    // Unit ideal: the empty scheme, flagged.
    HilbertData he =
        hilbert_data(Ideal::make(r, {Polynomial::constant(r, Rational(1))}));
    CHECK(he.empty);
    CHECK(he.projective_dimension() == -1);

    // Series coefficients match brute-force graded dimensions.
    auto ring = PolyRing::make({"x", "y", "z", "w"});
    std::mt19937_64 rng(99);
    auto random_form = [&](int deg) {
        std::vector<Term> ts;
        for (const Monomial& m : monomials_of_degree(4, deg)) {
            long c = static_cast<long>(rng() % 5) - 2;
            ts.push_back({m, Rational(c)});
        }
        return Polynomial::from_terms(ring, std::move(ts));
    };
    for (int trial = 0; trial < 10; ++trial) {
        Ideal I = Ideal::make(ring, {random_form(2), random_form(2)});
        if (I.generators.size() < 2) continue;
        HilbertData hd = hilbert_data(I);
        for (int m = 0; m <= 5; ++m) {
            long total = static_cast<long>(monomials_of_degree(4, m).size());
            long dim_rm = total - brute_ideal_piece_dim(I, m);
            CHECK(hd.series_coefficient(m) == dim_rm);
        }
    }
}
