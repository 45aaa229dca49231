#ifndef SCROLLREG_MODULE_GB_HPP
#define SCROLLREG_MODULE_GB_HPP

#include <memory>
#include <vector>

#include "scrollreg/groebner.hpp"

namespace scrollreg {

/// Element of a free module R^rank, one polynomial per component.
struct VecPoly {
    std::vector<Polynomial> comps;

    bool is_zero() const {
        for (const Polynomial& p : comps)
            if (!p.is_zero()) return false;
        return true;
    }
    static VecPoly zero(const RingPtr& ring, std::size_t rank) {
        VecPoly v;
        v.comps.assign(rank, Polynomial::zero(ring));
        return v;
    }
    /// Deterministic three-way comparison, componentwise.
    int compare(const VecPoly& other) const {
        for (std::size_t i = 0; i < comps.size(); ++i) {
            int c = comps[i].compare(other.comps[i]);
            if (c != 0) return c;
        }
        return 0;
    }
    bool operator==(const VecPoly& other) const {
        return compare(other) == 0;
    }
};

/// Incremental Groebner engine over a free module R^rank. Components with
/// index < nmain form an eliminated block: any term in a main component beats
/// any term in the remaining components, so basis elements supported outside
/// the main block generate the intersection with that submodule. Within a
/// block, terms compare by the ring order, ties broken by component index
/// (earlier components larger). With nmain == rank this is a plain module
/// Groebner engine.
class ModuleGbEngine {
  public:
    ModuleGbEngine(RingPtr ring, std::size_t rank, std::size_t nmain,
                   MonomialOrder ring_order, GbOptions opts = {},
                   std::vector<int> component_degrees = {});
    ~ModuleGbEngine();
    ModuleGbEngine(ModuleGbEngine&&) noexcept;

    /// Adds a generator and completes the basis.
    void add(const VecPoly& v);

    /// Full remainder against the current basis.
    VecPoly normal_form(const VecPoly& v) const;

    bool contains(const VecPoly& v) const { return normal_form(v).is_zero(); }

    /// Minimal, tail-reduced, content-normalized basis in deterministic order.
    std::vector<VecPoly> reduced_basis() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Generators of the syzygy module of the given columns (elements of
/// R^rank): all v = (v_1..v_k) with sum v_j * columns[j] = 0. Computed by an
/// augmented-module elimination; the result is a Groebner basis of the
/// syzygy module, normalized and deterministically ordered.
std::vector<VecPoly> module_syzygies(const std::vector<VecPoly>& columns,
                                     std::size_t rank,
                                     const MonomialOrder& ring_order,
                                     const GbOptions& opts = {});

} // namespace scrollreg

#endif
