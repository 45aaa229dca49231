#ifndef SCROLLREG_GROEBNER_HPP
#define SCROLLREG_GROEBNER_HPP

#include <chrono>
#include <optional>
#include <vector>

#include "scrollreg/polynomial.hpp"

namespace scrollreg {

/// Homogeneous ideal given by generators. The engine computes with the
/// generators as given; zero generators are dropped on construction.
struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;

    static Ideal make(RingPtr ring, std::vector<Polynomial> gens);
};

/// Throws unless every generator is homogeneous with respect to the ring's
/// standard grading (component 0). Used at public input boundaries.
void require_standard_homogeneous(const Ideal& ideal);

/// Reduced Groebner basis: elements monic, sorted ascending by leading
/// monomial, no term of any element divisible by the leading monomial of
/// another.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial> elements;
};

struct GbOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static GbOptions with_budget_seconds(double seconds) {
        GbOptions o;
        o.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(seconds));
        return o;
    }
    void check() const;
};

/// Remainder of f on division by G: no term of the result is divisible by
/// any leading monomial of G, and f minus the result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool in_ideal(const Polynomial& f, const GroebnerBasis& G);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

/// Buchberger completion with the normal selection strategy and the
/// coprimality and chain criteria; returns the reduced basis. Deterministic
/// for fixed input.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GbOptions& opts = {});

inline GroebnerBasis buchberger(const Ideal& ideal, const GbOptions& opts = {}) {
    return buchberger(ideal, MonomialOrder::grevlex(), opts);
}

/// Reduced-basis equality under a fixed order; decides ideal equality.
bool ideal_equal(const Ideal& a, const Ideal& b, const GbOptions& opts = {});

/// Elimination ideal: generators of the intersection of the ideal with the
/// subring on the retained variables, computed with a block order. The result
/// lives in the subring; an empty drop set returns the input unchanged.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                const GbOptions& opts = {});

/// Colon ideal (I : J).
Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GbOptions& opts = {});

/// Saturation (I : J^infinity) as the stable value of iterated quotients.
Ideal saturate(const Ideal& I, const Ideal& J, const GbOptions& opts = {});

/// The irrelevant maximal ideal (all variables).
Ideal irrelevant_ideal(const RingPtr& ring);

/// Kernel of the ring map source -> target sending variable i of the source
/// ring to images[i]. All nonzero images must be homogeneous of one common
/// multidegree under the target ring's gradings. The kernel is the saturated
/// vanishing ideal of the closure of the image, returned in the source ring.
Ideal kernel_of_ring_map(const RingPtr& source,
                         const std::vector<Polynomial>& images,
                         const GbOptions& opts = {});

} // namespace scrollreg

#endif
