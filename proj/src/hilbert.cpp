#include "scrollreg/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace scrollreg {

Integer ZPoly::eval_at_one() const {
    Integer s(0);
    for (const Integer& c : c_) s += c;
    return s;
}

ZPoly ZPoly::operator+(const ZPoly& g) const {
    std::vector<Integer> r(std::max(c_.size(), g.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r[i] += g.c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& g) const {
    std::vector<Integer> r(std::max(c_.size(), g.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r[i] -= g.c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::shifted(int k) const {
    if (is_zero()) return ZPoly();
    std::vector<Integer> r(c_.size() + k, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::times_one_minus_power(int d) const {
    return *this - shifted(d);
}

ZPoly ZPoly::divide_by_one_minus_t() const {
    // If f = (1 - T) q then q_k = sum_{i <= k} f_i.
    if (is_zero()) return ZPoly();
    std::vector<Integer> q(c_.size() - 1, Integer(0));
    Integer acc(0);
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
        acc += c_[k];
        q[k] = acc;
    }
    return ZPoly(std::move(q));
}

std::string ZPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Integer c = c_[i];
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (c != 1 || i == 0) os << c.get_str();
        if (i >= 1) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Drop monomials divisible by another in the list.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.exponents() < b.exponents();
    });
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool red = false;
        for (const Monomial& kept : out)
            if (kept.divides(m)) {
                red = true;
                break;
            }
        if (!red) out.push_back(m);
    }
    return out;
}

ZPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return ZPoly::one();
    if (gens.size() == 1) {
        if (gens[0].is_one()) return ZPoly(); // unit ideal
        return ZPoly::one().times_one_minus_power(gens[0].total_degree());
    }
    if (gens[0].is_one()) return ZPoly();

    // Pairwise coprime generators: product formula.
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        ZPoly n = ZPoly::one();
        for (const Monomial& m : gens)
            n = n.times_one_minus_power(m.total_degree());
        return n;
    }

    // Pivot on the most frequent variable.
    std::vector<int> count(nvars, 0);
    for (const Monomial& m : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (m[v] > 0) ++count[v];
    std::size_t pivot = 0;
    for (std::size_t v = 1; v < nvars; ++v)
        if (count[v] > count[pivot]) pivot = v;

    std::vector<int> pe(nvars, 0);
    pe[pivot] = 1;
    Monomial p(pe);

    // N(I) = N(I + (p)) + T^deg(p) N(I : p)
    std::vector<Monomial> plus = gens;
    plus.push_back(p);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const Monomial& m : gens) colon.push_back(m.divide_by(Monomial::gcd(m, p)));
    return numerator_rec(std::move(plus), nvars) +
           numerator_rec(std::move(colon), nvars).shifted(1);
}

// Binomial C(a, b) as exact integer, zero for a < b or negative inputs.
Integer int_binom(long a, long b) {
    if (b < 0 || a < b) return Integer(0);
    Integer r(1);
    for (long i = 0; i < b; ++i) {
        r *= Integer(a - i);
        r /= Integer(i + 1);
    }
    return r;
}

} // namespace

ZPoly hilbert_numerator(std::vector<Monomial> lead_terms, std::size_t nvars) {
    return numerator_rec(std::move(lead_terms), nvars);
}

Integer HilbertData::series_coefficient(int m) const {
    // [T^m] numerator / (1-T)^nvars
    Integer s(0);
    for (int k = 0; k <= numerator.degree(); ++k)
        s += numerator.coeff(k) *
             int_binom(m - k + static_cast<long>(nvars) - 1,
                       static_cast<long>(nvars) - 1);
    return s;
}

HilbertData hilbert_data(const GroebnerBasis& gb) {
    // Leading monomials under the basis order (canonical term storage is
    // grevlex, which may differ from the stored order).
    std::vector<Monomial> leads;
    for (const Polynomial& g : gb.elements) {
        if (g.is_zero()) continue;
        const Term* best = &g.terms().front();
        for (const Term& t : g.terms())
            if (gb.order.greater(t.mono, best->mono)) best = &t;
        leads.push_back(best->mono);
    }

    std::size_t v = gb.ring->nvars();
    HilbertData h;
    h.nvars = v;
    h.numerator = hilbert_numerator(std::move(leads), v);

    if (h.numerator.is_zero()) {
        h.empty = true;
        h.krull_dimension = 0;
        h.degree = 0;
        return h;
    }

    ZPoly q = h.numerator;
    int strip = 0;
    while (!q.is_zero() && q.eval_at_one() == 0) {
        q = q.divide_by_one_minus_t();
        ++strip;
    }
    int D = static_cast<int>(v) - strip; // Krull dimension of R/I
    h.krull_dimension = D;
    Integer deg = q.eval_at_one();
    h.degree = deg.get_si();

    if (D >= 1) {
        // HP(m) = sum_k q_k C(m - k + D - 1, D - 1)
        Rational inv_fact(1);
        for (int i = 2; i <= D - 1; ++i) inv_fact /= i;
        UPoly hp;
        for (int k = 0; k <= q.degree(); ++k) {
            if (q.coeff(k) == 0) continue;
            // Product (m - k + 1)(m - k + 2)...(m - k + D - 1) / (D-1)!
            UPoly prod = UPoly::constant(Rational(1));
            for (int i = 1; i <= D - 1; ++i) {
                UPoly lin({Rational(-k + i), Rational(1)});
                prod = prod * lin;
            }
            hp = hp + prod.scaled(Rational(q.coeff(k)) * inv_fact);
        }
        h.hilbert_polynomial = hp;
    }
    return h;
}

HilbertData hilbert_data(const Ideal& ideal, const GbOptions& opts) {
    return hilbert_data(buchberger(ideal, MonomialOrder::grevlex(), opts));
}

} // namespace scrollreg
