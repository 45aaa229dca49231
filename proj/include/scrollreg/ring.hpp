#ifndef SCROLLREG_RING_HPP
#define SCROLLREG_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scrollreg/errors.hpp"

namespace scrollreg {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// A polynomial ring over Q: an ordered list of named variables together with
/// one or more integer gradings. Grading component 0 is the ring's standard
/// grading and defaults to all ones. Rings are immutable; operations that
/// change the variable set build a new ring.
class PolyRing {
  public:
    static RingPtr make(std::vector<std::string> variables);
    static RingPtr make(std::vector<std::string> variables,
                        std::vector<std::vector<int>> gradings);

    std::size_t nvars() const { return variables_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::string& variable(std::size_t i) const { return variables_[i]; }
    const std::vector<std::vector<int>>& gradings() const { return gradings_; }
    std::size_t ngradings() const { return gradings_.size(); }

    std::optional<std::size_t> var_index(std::string_view name) const;

    /// Structural equality: same names in the same order, same gradings.
    bool same_ring(const PolyRing& other) const {
        return variables_ == other.variables_ && gradings_ == other.gradings_;
    }

    /// Subring on the given variable indices (order preserved); gradings are
    /// restricted columnwise.
    RingPtr subring(const std::vector<std::size_t>& keep) const;

  private:
    PolyRing(std::vector<std::string> vars, std::vector<std::vector<int>> grads);

    std::vector<std::string> variables_;
    std::vector<std::vector<int>> gradings_;
};

/// Exponent vector, one entry per ring variable.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {}
    static Monomial one(std::size_t nvars) {
        return Monomial(std::vector<int>(nvars, 0));
    }

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    bool is_one() const {
        for (int v : e_)
            if (v != 0) return false;
        return true;
    }

    int total_degree() const {
        int d = 0;
        for (int v : e_) d += v;
        return d;
    }

    long weighted_degree(const std::vector<int>& weights) const {
        long d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i)
            d += static_cast<long>(weights[i]) * e_[i];
        return d;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& m) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && m.e_[i] > 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        std::vector<int> r(e_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += m.e_[i];
        return Monomial(std::move(r));
    }

    /// Exact quotient; caller guarantees m.divides(*this).
    Monomial divide_by(const Monomial& m) const {
        std::vector<int> r(e_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= m.e_[i];
        return Monomial(std::move(r));
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        std::vector<int> r(a.e_);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (b.e_[i] > r[i]) r[i] = b.e_[i];
        return Monomial(std::move(r));
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        std::vector<int> r(a.e_);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (b.e_[i] < r[i]) r[i] = b.e_[i];
        return Monomial(std::move(r));
    }

    bool operator==(const Monomial& other) const = default;

  private:
    std::vector<int> e_;
};

/// Total multiplicative well-order on monomials. Four kinds: graded reverse
/// lexicographic (the default everywhere), lexicographic, block elimination
/// (front block beats back block, grevlex within each), and weighted with a
/// tie-break order.
class MonomialOrder {
  public:
    enum class Kind { grevlex, lex, block, weighted };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
    /// front_mask[i] != 0 marks variable i as part of the eliminated block.
    static MonomialOrder block_elimination(std::vector<char> front_mask);
    static MonomialOrder block_elimination(std::size_t nvars,
                                           const std::vector<std::size_t>& front);
    static MonomialOrder weighted(std::vector<int> weights,
                                  const MonomialOrder& tie_break);

    Kind kind() const { return kind_; }
    const std::vector<char>& front_mask() const { return front_; }

    /// Negative if a < b, zero if equal, positive if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) < 0;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) > 0;
    }

    std::string describe() const;

    bool operator==(const MonomialOrder& other) const;

  private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<int> weights_;
    std::vector<char> front_;
    std::shared_ptr<const MonomialOrder> tie_;
};

} // namespace scrollreg

#endif
