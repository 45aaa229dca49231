#ifndef SCROLLREG_LINALG_HPP
#define SCROLLREG_LINALG_HPP

#include <cstdint>
#include <vector>

#include "scrollreg/polynomial.hpp"

namespace scrollreg {

/// All monomials of the given total degree, in a deterministic order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

/// Rank of a dense rational matrix reduced modulo p (rows of equal length).
/// Throws if a denominator is divisible by p; callers retry with the next
/// prime from rank_primes(). A modular rank never exceeds the rational rank,
/// which is what the positive-certification uses in the resolution checker.
long rank_mod_p(const std::vector<std::vector<Rational>>& rows, std::int64_t p);

/// Fixed prime ladder for modular rank computations.
const std::vector<std::int64_t>& rank_primes();

/// Exact rank over Q by fraction-free style Gaussian elimination; intended
/// for small matrices.
long rank_exact(std::vector<std::vector<Rational>> rows);

/// Incremental exact echelon basis over Q; add() reports whether the vector
/// enlarged the span.
class RowSpan {
  public:
    bool add(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    long rank() const { return static_cast<long>(rows_.size()); }

  private:
    void reduce(std::vector<Rational>& v) const;
    std::vector<std::vector<Rational>> rows_; // echelon, pivot normalized to 1
    std::vector<std::size_t> pivots_;
};

} // namespace scrollreg

#endif
