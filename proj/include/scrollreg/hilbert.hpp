#ifndef SCROLLREG_HILBERT_HPP
#define SCROLLREG_HILBERT_HPP

#include "scrollreg/groebner.hpp"
#include "scrollreg/upoly.hpp"

namespace scrollreg {

/// Dense integer-coefficient univariate polynomial (Hilbert numerators).
class ZPoly {
  public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
        trim();
    }
    static ZPoly one() { return ZPoly({Integer(1)}); }

    const std::vector<Integer>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Integer coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Integer(0);
    }
    Integer eval_at_one() const;

    ZPoly operator+(const ZPoly& g) const;
    ZPoly operator-(const ZPoly& g) const;
    /// this * T^k
    ZPoly shifted(int k) const;
    /// this * (1 - T^d)
    ZPoly times_one_minus_power(int d) const;
    /// Exact quotient by (1 - T); caller guarantees divisibility.
    ZPoly divide_by_one_minus_t() const;

    bool operator==(const ZPoly& g) const { return c_ == g.c_; }
    std::string to_string(const std::string& var = "T") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

/// Hilbert-series data of R/I computed from the lead-term ideal: the series
/// numerator over (1-T)^nvars, the Krull dimension, the degree and the
/// Hilbert polynomial of the projective scheme. The unit ideal is flagged as
/// the empty scheme (projective dimension -1 by convention).
struct HilbertData {
    ZPoly numerator;        // over (1 - T)^nvars
    std::size_t nvars = 0;
    int krull_dimension = 0;
    long degree = 0;        // positive for a nonempty scheme
    UPoly hilbert_polynomial;
    bool empty = false;

    int projective_dimension() const { return krull_dimension - 1; }

    /// Coefficient of T^m in the Hilbert series, i.e. dim (R/I)_m.
    Integer series_coefficient(int m) const;
};

/// Numerator of the Hilbert series of R/(monomial ideal) over (1-T)^nvars.
ZPoly hilbert_numerator(std::vector<Monomial> lead_terms, std::size_t nvars);

HilbertData hilbert_data(const Ideal& ideal, const GbOptions& opts = {});
HilbertData hilbert_data(const GroebnerBasis& gb);

} // namespace scrollreg

#endif
