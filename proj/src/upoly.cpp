#include "scrollreg/upoly.hpp"

#include <sstream>

#include "scrollreg/errors.hpp"

namespace scrollreg {

UPoly UPoly::operator+(const UPoly& g) const {
    std::vector<Rational> r(std::max(c_.size(), g.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r[i] += g.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& g) const {
    std::vector<Rational> r(std::max(c_.size(), g.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r[i] -= g.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& g) const {
    if (is_zero() || g.is_zero()) return UPoly();
    std::vector<Rational> r(c_.size() + g.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < g.c_.size(); ++j) r[i + j] += c_[i] * g.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& a) const {
    if (a == 0) return UPoly();
    std::vector<Rational> r(c_);
    for (Rational& x : r) x *= a;
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return UPoly();
    return scaled(Rational(1) / c_.back());
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(r));
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

void UPoly::divmod(const UPoly& f, const UPoly& g, UPoly& q, UPoly& r) {
    if (g.is_zero()) throw_input("univariate division by zero");
    std::vector<Rational> rem(f.c_);
    std::vector<Rational> quo;
    int dg = g.degree();
    Rational lg = g.leading();
    if (static_cast<int>(rem.size()) - 1 >= dg)
        quo.assign(rem.size() - dg, Rational(0));
    while (static_cast<int>(rem.size()) - 1 >= dg) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (static_cast<int>(rem.size()) - 1 < dg) break;
        std::size_t shift = rem.size() - 1 - dg;
        Rational c = rem.back() / lg;
        quo[shift] = c;
        for (int i = 0; i <= dg; ++i) rem[shift + i] -= c * g.c_[i];
    }
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

UPoly UPoly::mod(const UPoly& g) const {
    UPoly q, r;
    divmod(*this, g, q, r);
    return r;
}

UPoly UPoly::gcd(const UPoly& f, const UPoly& g) {
    UPoly a = f, b = g;
    while (!b.is_zero()) {
        UPoly r = a.mod(b);
        a = b;
        b = r;
    }
    return a.monic();
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
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

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    if (f.is_zero()) throw_input("squarefree decomposition of zero");
    std::vector<std::pair<UPoly, int>> out;
    UPoly a = f.monic();
    if (a.degree() == 0) return out;
    // Yun's algorithm.
    UPoly d = a.derivative();
    UPoly g = UPoly::gcd(a, d);
    UPoly w, y, q, r;
    UPoly::divmod(a, g, w, r);
    UPoly::divmod(d, g, y, r);
    int k = 1;
    while (w.degree() > 0) {
        UPoly z = y - w.derivative();
        UPoly h = UPoly::gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h, k);
        UPoly::divmod(w, h, q, r);
        w = q;
        UPoly::divmod(z, h, y, r);
        ++k;
    }
    return out;
}

} // namespace scrollreg
