#include "scrollreg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace scrollreg {

namespace {

const MonomialOrder& canonical_order() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}

void sort_canonical(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return canonical_order().greater(a.mono, b.mono);
    });
}

} // namespace

void require_same_ring(const Polynomial& f, const Polynomial& g) {
    if (!f.ring() || !g.ring() || !f.ring()->same_ring(*g.ring()))
        throw_input("ring mismatch between polynomial operands");
}

Polynomial Polynomial::zero(RingPtr ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p;
    std::size_t n = ring->nvars();
    p.ring_ = std::move(ring);
    if (c != 0) p.terms_.push_back({Monomial::one(n), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw_input("variable index out of range");
    std::vector<int> e(ring->nvars(), 0);
    e[index] = 1;
    Polynomial p;
    p.ring_ = std::move(ring);
    p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
    if (m.size() != ring->nvars()) throw_input("monomial length mismatch");
    Polynomial p;
    p.ring_ = std::move(ring);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<std::vector<int>, Rational> acc;
    for (Term& t : terms) {
        if (t.mono.size() != ring->nvars())
            throw_input("monomial length mismatch");
        if (t.coeff == 0) continue;
        auto [it, inserted] = acc.emplace(t.mono.exponents(), t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    Polynomial p;
    p.ring_ = std::move(ring);
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({Monomial(e), c});
    sort_canonical(p.terms_);
    return p;
}

Rational Polynomial::constant_term() const {
    for (const Term& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return Rational(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial p;
    p.ring_ = ring_;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_ring(*this, g);
    // Merge of two canonically sorted term lists.
    Polynomial p;
    p.ring_ = ring_;
    p.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& ord = canonical_order();
    while (i < terms_.size() && j < g.terms_.size()) {
        int c = ord.compare(terms_[i].mono, g.terms_[j].mono);
        if (c > 0) {
            p.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            p.terms_.push_back(g.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + g.terms_[j].coeff;
            if (s != 0) p.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) p.terms_.push_back(g.terms_[j]);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    return *this + (-g);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_ring(*this, g);
    std::map<std::vector<int>, Rational> acc;
    for (const Term& a : terms_) {
        for (const Term& b : g.terms_) {
            Monomial m = a.mono * b.mono;
            Rational c = a.coeff * b.coeff;
            auto [it, inserted] = acc.emplace(m.exponents(), c);
            if (!inserted) it->second += c;
        }
    }
    Polynomial p;
    p.ring_ = ring_;
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({Monomial(e), c});
    sort_canonical(p.terms_);
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return zero(ring_);
    Polynomial p;
    p.ring_ = ring_;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
    return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    if (c == 0) return zero(ring_);
    Polynomial p;
    p.ring_ = ring_;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    // Multiplication by a fixed monomial preserves grevlex order.
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = (e >>= 1) ? base * base : base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (!ring_ || !g.ring_) return terms_.empty() && g.terms_.empty();
    if (!ring_->same_ring(*g.ring_)) return false;
    if (terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != g.terms_[i].mono ||
            terms_[i].coeff != g.terms_[i].coeff)
            return false;
    return true;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

std::optional<long> Polynomial::homogeneous_degree(std::size_t comp) const {
    if (terms_.empty()) return std::nullopt;
    const auto& w = ring_->gradings().at(comp);
    long d = terms_[0].mono.weighted_degree(w);
    for (const Term& t : terms_)
        if (t.mono.weighted_degree(w) != d) return std::nullopt;
    return d;
}

std::optional<std::vector<long>> Polynomial::multidegree() const {
    if (terms_.empty()) return std::nullopt;
    std::vector<long> deg;
    for (std::size_t c = 0; c < ring_->ngradings(); ++c) {
        auto d = homogeneous_degree(c);
        if (!d) return std::nullopt;
        deg.push_back(*d);
    }
    return deg;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        int e = t.mono[var];
        if (e == 0) continue;
        std::vector<int> m = t.mono.exponents();
        m[var] -= 1;
        out.push_back({Monomial(std::move(m)), t.coeff * e});
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars())
        throw_input("substitute: expected one image per variable");
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    for (const Polynomial& im : images)
        if (!im.ring()->same_ring(*target))
            throw_input("substitute: images live in different rings");

    // Cache powers of each image as needed.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t v, int e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * images[v]);
        return cache[e];
    };

    Polynomial result = Polynomial::zero(target);
    for (const Term& t : terms_) {
        Polynomial m = Polynomial::constant(target, t.coeff);
        for (std::size_t v = 0; v < images.size(); ++v)
            if (t.mono[v] > 0) m = m * power(v, t.mono[v]);
        result = result + m;
    }
    return result;
}

Polynomial Polynomial::rename(const RingPtr& target,
                              const std::vector<std::size_t>& var_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<int> e(target->nvars(), 0);
        for (std::size_t v = 0; v < var_map.size(); ++v) {
            if (t.mono[v] == 0) continue;
            e[var_map[v]] = t.mono[v];
        }
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(target, std::move(out));
}

int Polynomial::compare(const Polynomial& g) const {
    const auto& ord = canonical_order();
    std::size_t n = std::min(terms_.size(), g.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ord.compare(terms_[i].mono, g.terms_[i].mono);
        if (c != 0) return c;
        if (terms_[i].coeff != g.terms_[i].coeff)
            return terms_[i].coeff < g.terms_[i].coeff ? -1 : 1;
    }
    if (terms_.size() != g.terms_.size())
        return terms_.size() < g.terms_.size() ? -1 : 1;
    return 0;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool unit_coeff = (c == 1);
        bool printed_coeff = false;
        if (!unit_coeff || t.mono.is_one()) {
            os << c.get_str();
            printed_coeff = true;
        }
        for (std::size_t v = 0; v < t.mono.size(); ++v) {
            int e = t.mono[v];
            if (e == 0) continue;
            if (printed_coeff) os << "*";
            printed_coeff = true;
            os << ring_->variable(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::optional<long> homogeneous_degree_checked(const Polynomial& f,
                                               std::size_t comp) {
    if (f.is_zero())
        throw_input("homogeneous_degree: zero polynomial has no degree");
    return f.homogeneous_degree(comp);
}

Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& images,
                      const RingPtr& target) {
    const RingPtr& ring = f.ring();
    // Variables that actually occur need an image; the rest map to zero.
    std::vector<bool> occurs(ring->nvars(), false);
    for (const Term& t : f.terms())
        for (std::size_t v = 0; v < ring->nvars(); ++v)
            if (t.mono[v] > 0) occurs[v] = true;

    std::vector<Polynomial> vec;
    vec.reserve(ring->nvars());
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        auto it = images.find(ring->variable(v));
        if (it == images.end()) {
            if (occurs[v])
                throw_input("substitute: missing image for variable '" +
                            ring->variable(v) + "'");
            vec.push_back(Polynomial::zero(target));
        } else {
            vec.push_back(it->second);
        }
    }
    return f.substitute(vec);
}

} // namespace scrollreg
