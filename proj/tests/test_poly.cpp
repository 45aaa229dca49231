#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scrollreg/binary_form.hpp"
#include "scrollreg/polynomial.hpp"

using namespace scrollreg;

namespace {

RingPtr ring_st() { return PolyRing::make({"s", "t"}); }

Polynomial P(const std::string& text, const RingPtr& ring) {
    return parse_polynomial(text, ring);
}

// Independent random polynomial generator for property checks.
Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, int max_deg,
                       int nterms) {
    std::vector<Term> terms;
    for (int k = 0; k < nterms; ++k) {
        std::vector<int> e(ring->nvars());
        int budget = static_cast<int>(rng() % (max_deg + 1));
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
            int d = static_cast<int>(rng() % (budget + 1));
            e[v] = d;
            budget -= d;
        }
        long c = static_cast<long>(rng() % 11) - 5;
        terms.push_back({Monomial(e), Rational(c)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

Monomial random_monomial(std::size_t nvars, std::mt19937_64& rng, int max_e) {
    std::vector<int> e(nvars);
    for (auto& x : e) x = static_cast<int>(rng() % (max_e + 1));
    return Monomial(std::move(e));
}

} // namespace

TEST_CASE("parser: literals and canonical forms") {
    auto st = ring_st();
    CHECK(P("0", st).is_zero());
    CHECK(P("s^2 - 3*t^2", st).to_string() == "s^2 - 3*t^2");

    auto u = PolyRing::make({"u0", "u1"});
    // (u0+u1)^2, expanded by hand.
    Polynomial sq = P("(u0+u1)^2", u);
    CHECK(sq == P("u0^2 + 2*u0*u1 + u1^2", u));
    CHECK(sq.nterms() == 3);

    // Unary minus at expression head, incl. inside parentheses.
    CHECK(P("-s + t", st) == P("t - s", st));
    CHECK(P("(-3)*s", st) == P("0 - 3*s", st));
    // Rational literal (printed forms must re-parse).
    CHECK(P("1/2*s", st).scaled(Rational(2)) == P("s", st));
}

TEST_CASE("parser: errors carry positions and names") {
    auto st = ring_st();
    CHECK_THROWS_AS(P("s +", st), ParseError);
    CHECK_THROWS_AS(P("s ^ t", st), ParseError);
    CHECK_THROWS_AS(P("(s", st), ParseError);
    try {
        P("s * q2", st);
        FAIL("expected unknown-variable error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("q2") != std::string::npos);
        CHECK(e.position() == 5);
    }
}

TEST_CASE("arith: identities") {
    auto st = ring_st();
    Polynomial f = P("2*s^2*t - t^3 + 5", st);
    CHECK((f + (-f)).is_zero());
    CHECK(f.scaled(Rational(1)) == f);
    CHECK(P("(s+t)*(s-t)", st) == P("s^2 - t^2", st));
    CHECK_THROWS_AS(f + P("x", PolyRing::make({"x"})), Error);
}

TEST_CASE("arith: ring axioms on random inputs") {
    auto ring = PolyRing::make({"x", "y", "z"});
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = random_poly(ring, rng, 3, 4);
        Polynomial b = random_poly(ring, rng, 3, 4);
        Polynomial c = random_poly(ring, rng, 3, 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("round trip: parse(print(f)) == f") {
    auto ring = PolyRing::make({"x", "y", "z"});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial f = random_poly(ring, rng, 4, 5);
        // Include rational coefficients as produced by monic bases.
        if (trial % 2 == 1) f = f.scaled(Rational(1, 3));
        CHECK(parse_polynomial(f.to_string(), ring) == f);
    }
}

TEST_CASE("substitution") {
    auto x = PolyRing::make({"x", "y"});
    auto st = ring_st();
    // substitute(x, {x->x}) = x
    Polynomial id = Polynomial::variable(x, 0);
    CHECK(id.substitute({Polynomial::variable(x, 0),
                         Polynomial::variable(x, 1)}) == id);
    // substitute(x^2 - y, {x->s+t, y->0}) = (s+t)^2
    Polynomial f = P("x^2 - y", x);
    Polynomial g = f.substitute({P("s+t", st), Polynomial::zero(st)});
    CHECK(g == P("s^2 + 2*s*t + t^2", st));
    // All variables to zero: constant term.
    Polynomial h = P("x^2*y - 3*x + 7", x);
    Polynomial k = h.substitute({Polynomial::zero(x), Polynomial::zero(x)});
    CHECK(k == Polynomial::constant(x, Rational(7)));
    // Missing image error (map API).
    std::map<std::string, Polynomial> images = {{"x", P("s", st)}};
    CHECK_THROWS_AS(substitute(f, images, st), Error);
}

TEST_CASE("homogeneous degree") {
    auto st = ring_st();
    CHECK(*P("s^2*t", st).homogeneous_degree() == 3);
    CHECK(!P("s^2 + t", st).homogeneous_degree());
    CHECK_THROWS_AS(homogeneous_degree_checked(Polynomial::zero(st)), Error);

    // Weighted grading: s,t of degree (1,0), z of degree (-2,1); z*p(s,t)
    // with p of degree 2 has multidegree (0,1).
    auto cox = PolyRing::make({"s", "t", "z"}, {{1, 1, -2}, {0, 0, 1}});
    Polynomial f = parse_polynomial("z*(s^2 + 3*s*t)", cox);
    auto md = f.multidegree();
    REQUIRE(md.has_value());
    CHECK((*md)[0] == 0);
    CHECK((*md)[1] == 1);
}

TEST_CASE("monomial orders are total, multiplicative well-orders") {
    std::mt19937_64 rng(11);
    std::vector<MonomialOrder> orders = {
        MonomialOrder::grevlex(), MonomialOrder::lex(),
        MonomialOrder::block_elimination(4, {0, 2}),
        MonomialOrder::weighted({3, 1, 2, 1}, MonomialOrder::grevlex())};
    for (const auto& ord : orders) {
        for (int trial = 0; trial < 200; ++trial) {
            Monomial a = random_monomial(4, rng, 4);
            Monomial b = random_monomial(4, rng, 4);
            Monomial c = random_monomial(4, rng, 4);
            // Totality + antisymmetry.
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            if (a == b) CHECK(ab == 0);
            if (ab == 0) CHECK(a == b);
            // Transitivity.
            if (ab <= 0 && ord.compare(b, c) <= 0) CHECK(ord.compare(a, c) <= 0);
            // Multiplicativity.
            if (ab < 0) CHECK(ord.compare(a * c, b * c) < 0);
            // A monomial order refines divisibility (well-order on each
            // graded piece follows).
            if (a.divides(b) && !(a == b)) CHECK(ord.less(a, b));
        }
    }
}

TEST_CASE("binary form gcd") {
    auto st = ring_st();
    CHECK(binary_form_gcd({P("s^2", st), P("s*t", st)}) == P("s", st));
    // Single input is normalized monic under lex s > t.
    CHECK(binary_form_gcd({P("3*s^2 - 3*t^2", st)}) == P("s^2 - t^2", st));
    // gcd(s^2 - t^2, (s+t)^2) = s + t (factored by hand).
    CHECK(binary_form_gcd({P("s^2 - t^2", st), P("s^2 + 2*s*t + t^2", st)}) ==
          P("s + t", st));
    CHECK_THROWS_AS(binary_form_gcd({Polynomial::zero(st)}), Error);

    // Properties: divides every input; any planted common divisor divides it.
    std::mt19937_64 rng(5);
    auto random_form = [&](int deg) {
        std::vector<Term> ts;
        for (int i = 0; i <= deg; ++i) {
            long c = static_cast<long>(rng() % 9) - 4;
            ts.push_back({Monomial({i, deg - i}), Rational(c)});
        }
        return Polynomial::from_terms(st, std::move(ts));
    };
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial u = random_form(2);
        Polynomial a = random_form(2), b = random_form(3);
        if (u.is_zero() || a.is_zero() || b.is_zero()) continue;
        Polynomial f = u * a, g = u * b;
        Polynomial d = binary_form_gcd({f, g});
        // u divides the gcd.
        Polynomial q = binary_form_gcd({d, u});
        CHECK(q == binary_form_gcd({u}));
        // The gcd divides both inputs: check via split cores.
        auto check_divides = [&](const Polynomial& den, const Polynomial& num) {
            BinaryFormSplit ds = split_binary_form(den);
            BinaryFormSplit ns = split_binary_form(num);
            CHECK(ds.pow0 <= ns.pow0);
            CHECK(ds.pow1 <= ns.pow1);
            UPoly qq, rr;
            UPoly::divmod(ns.core, ds.core, qq, rr);
            CHECK(rr.is_zero());
        };
        check_divides(d, f);
        check_divides(d, g);
    }
}

TEST_CASE("squarefree decomposition via gcds") {
    // (x)^2 (x+1) -> {(x+1,1), (x,2)}
    UPoly x({Rational(0), Rational(1)});
    UPoly xp1({Rational(1), Rational(1)});
    UPoly f = x * x * xp1;
    auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].first == xp1);
    CHECK(sq[0].second == 1);
    CHECK(sq[1].first == x);
    CHECK(sq[1].second == 2);
}
