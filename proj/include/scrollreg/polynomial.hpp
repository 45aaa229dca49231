#ifndef SCROLLREG_POLYNOMIAL_HPP
#define SCROLLREG_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scrollreg/rational.hpp"
#include "scrollreg/ring.hpp"

namespace scrollreg {

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical form: no zero coefficients, terms sorted descending under the
/// ring's default grevlex order. Equality is structural. Immutable in spirit;
/// all operations return new values.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c);
    /// Canonicalizes: merges duplicate monomials, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    /// Constant term (coefficient of the unit monomial).
    Rational constant_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    /// Total degree under the standard grading; -1 for the zero polynomial.
    int total_degree() const;

    /// Degree under grading component `comp` if homogeneous, nullopt if not.
    /// The zero polynomial is homogeneous of every degree; returns nullopt.
    std::optional<long> homogeneous_degree(std::size_t comp = 0) const;

    /// Degree vector across all grading components, nullopt if inhomogeneous
    /// in any component or zero.
    std::optional<std::vector<long>> multidegree() const;

    /// Partial derivative with respect to variable `var`.
    Polynomial derivative(std::size_t var) const;

    /// Image under the ring map sending variable i to images[i]; all images
    /// must live in one common target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Same polynomial in `target`, variable i of this ring mapping to
    /// variable var_map[i] of the target.
    Polynomial rename(const RingPtr& target,
                      const std::vector<std::size_t>& var_map) const;

    std::string to_string() const;

    /// Deterministic three-way comparison of canonical forms (for sorting;
    /// not a monomial order). Compares term lists lexicographically.
    int compare(const Polynomial& g) const;

  private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Total weighted degree of f under grading component comp, requiring
/// homogeneity. Errors on zero input; returns nullopt when inhomogeneous.
std::optional<long> homogeneous_degree_checked(const Polynomial& f,
                                               std::size_t comp = 0);

void require_same_ring(const Polynomial& f, const Polynomial& g);

/// Parses the expression grammar
///   expr := ('-')? term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base := integer ('/' uint)? | identifier | '(' expr ')'
/// Identifiers must be ring variables. Throws ParseError with position on
/// syntax errors and unknown identifiers. The rational-literal form p/q is
/// accepted so that printed canonical forms always parse back.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Map-keyed substitution; every variable occurring in f needs an image.
Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& images,
                      const RingPtr& target);

} // namespace scrollreg

#endif
