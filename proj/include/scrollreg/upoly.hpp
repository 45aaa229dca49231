#ifndef SCROLLREG_UPOLY_HPP
#define SCROLLREG_UPOLY_HPP

#include <string>
#include <vector>

#include "scrollreg/rational.hpp"

namespace scrollreg {

/// Dense univariate polynomial over Q, coefficients in increasing degree
/// order with no trailing zeros. Small utility type for dehomogenized binary
/// forms, Hilbert polynomials, and arithmetic modulo a squarefree modulus.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        trim();
    }
    static UPoly constant(const Rational& a) {
        return a == 0 ? UPoly() : UPoly({a});
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    UPoly operator+(const UPoly& g) const;
    UPoly operator-(const UPoly& g) const;
    UPoly operator*(const UPoly& g) const;
    UPoly scaled(const Rational& a) const;
    UPoly monic() const;
    UPoly derivative() const;
    Rational eval(const Rational& x) const;

    /// Quotient and remainder; g must be nonzero.
    static void divmod(const UPoly& f, const UPoly& g, UPoly& q, UPoly& r);
    UPoly mod(const UPoly& g) const;

    /// Monic gcd via the Euclidean algorithm.
    static UPoly gcd(const UPoly& f, const UPoly& g);

    bool operator==(const UPoly& g) const { return c_ == g.c_; }

    std::string to_string(const std::string& var) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Yun squarefree decomposition of a nonzero f: returns pairs (g_k, k) with
/// f = lc * prod g_k^k, the g_k squarefree, pairwise coprime, monic, and
/// nonconstant.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

} // namespace scrollreg

#endif
