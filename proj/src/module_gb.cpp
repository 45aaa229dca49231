#include "scrollreg/module_gb.hpp"

#include <algorithm>
#include <set>

namespace scrollreg {

namespace {

// Work representation: per component a term list sorted descending under the
// ring order. The overall leading term is the maximum of the component
// fronts under the block/component order.
struct WV {
    std::vector<std::vector<Term>> c;

    bool empty() const {
        for (const auto& comp : c)
            if (!comp.empty()) return false;
        return true;
    }
};

struct ModOrder {
    const MonomialOrder* ring_order;
    std::size_t nmain;

    // (comp1,m1) vs (comp2,m2); positive when the first is larger.
    int compare(std::size_t comp1, const Monomial& m1, std::size_t comp2,
                const Monomial& m2) const {
        bool main1 = comp1 < nmain, main2 = comp2 < nmain;
        if (main1 != main2) return main1 ? 1 : -1;
        int c = ring_order->compare(m1, m2);
        if (c != 0) return c;
        if (comp1 != comp2) return comp1 < comp2 ? 1 : -1;
        return 0;
    }
};

struct Lead {
    std::size_t comp = 0;
    Monomial mono;
    Rational coeff;
    bool valid = false;
};

Lead find_lead(const WV& v, const ModOrder& ord) {
    Lead best;
    for (std::size_t comp = 0; comp < v.c.size(); ++comp) {
        if (v.c[comp].empty()) continue;
        const Term& t = v.c[comp].front();
        if (!best.valid ||
            ord.compare(comp, t.mono, best.comp, best.mono) > 0) {
            best.comp = comp;
            best.mono = t.mono;
            best.coeff = t.coeff;
            best.valid = true;
        }
    }
    return best;
}

std::vector<Term> to_sorted(const Polynomial& p, const MonomialOrder& ord) {
    std::vector<Term> w(p.terms().begin(), p.terms().end());
    std::sort(w.begin(), w.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.mono, b.mono);
    });
    return w;
}

WV to_work(const VecPoly& v, const MonomialOrder& ord) {
    WV w;
    w.c.reserve(v.comps.size());
    for (const Polynomial& p : v.comps) w.c.push_back(to_sorted(p, ord));
    return w;
}

VecPoly from_work(const RingPtr& ring, const WV& w) {
    VecPoly v;
    v.comps.reserve(w.c.size());
    for (const auto& comp : w.c)
        v.comps.push_back(Polynomial::from_terms(ring, comp));
    return v;
}

// comp list -= coeff * mono * g (both sorted under ord).
std::vector<Term> sub_scaled_list(const std::vector<Term>& p, const Rational& c,
                                  const Monomial& m, const std::vector<Term>& g,
                                  const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() && j < g.size()) {
        Monomial gm = g[j].mono * m;
        int cmp = ord.compare(p[i].mono, gm);
        if (cmp > 0) {
            out.push_back(p[i++]);
        } else if (cmp < 0) {
            out.push_back({std::move(gm), -c * g[j].coeff});
            ++j;
        } else {
            Rational s = p[i].coeff - c * g[j].coeff;
            if (s != 0) out.push_back({p[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < p.size(); ++i) out.push_back(p[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].mono * m, -c * g[j].coeff});
    return out;
}

void sub_scaled_vec(WV& p, const Rational& c, const Monomial& m, const WV& g,
                    const MonomialOrder& ord) {
    for (std::size_t comp = 0; comp < p.c.size(); ++comp)
        if (!g.c[comp].empty())
            p.c[comp] = sub_scaled_list(p.c[comp], c, m, g.c[comp], ord);
}

void make_primitive_vec(WV& v, const Lead& lead) {
    std::vector<Rational> cs;
    for (const auto& comp : v.c)
        for (const Term& t : comp) cs.push_back(t.coeff);
    Rational c = rational_content(cs);
    if (c == 0) return;
    if (lead.valid && lead.coeff < 0) c = -c;
    if (c == 1) return;
    for (auto& comp : v.c)
        for (Term& t : comp) t.coeff /= c;
}

} // namespace

struct ModuleGbEngine::Impl {
    RingPtr ring;
    std::size_t rank;
    MonomialOrder ring_order;
    ModOrder mord;
    GbOptions opts;
    std::vector<int> shifts; // degree of each component's generator

    struct Entry {
        WV vec;
        Lead lead;
    };
    std::vector<Entry> basis;

    struct PairKey {
        long deg;
        std::size_t comp;
        Monomial lcm;
        std::size_t i, j;
    };
    struct PairLess {
        const MonomialOrder* ord;
        bool operator()(const PairKey& a, const PairKey& b) const {
            if (a.deg != b.deg) return a.deg < b.deg;
            if (a.comp != b.comp) return a.comp < b.comp;
            int c = ord->compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<PairKey, PairLess> pairs;

    Impl(RingPtr r, std::size_t rk, std::size_t nmain, MonomialOrder ord,
         GbOptions o, std::vector<int> sh)
        : ring(std::move(r)), rank(rk), ring_order(std::move(ord)),
          mord{&ring_order, nmain}, opts(std::move(o)), shifts(std::move(sh)),
          pairs(PairLess{&ring_order}) {
        if (shifts.empty()) shifts.assign(rank, 0);
    }

    long pair_degree(const Monomial& lcm, std::size_t comp) const {
        return lcm.total_degree() + shifts[comp];
    }

    PairKey make_pair(std::size_t i, std::size_t j) const {
        PairKey p;
        p.i = i;
        p.j = j;
        p.comp = basis[i].lead.comp;
        p.lcm = Monomial::lcm(basis[i].lead.mono, basis[j].lead.mono);
        p.deg = pair_degree(p.lcm, p.comp);
        return p;
    }

    bool pending(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        return pairs.count(make_pair(a, b)) > 0;
    }

    WV divide_full(WV p) const {
        WV remainder;
        remainder.c.assign(rank, {});
        std::size_t guard = 0;
        while (true) {
            if (((++guard) & 0xff) == 0) opts.check();
            Lead lead = find_lead(p, mord);
            if (!lead.valid) break;
            const Entry* red = nullptr;
            for (const Entry& e : basis)
                if (e.lead.comp == lead.comp && e.lead.mono.divides(lead.mono)) {
                    red = &e;
                    break;
                }
            if (!red) {
                remainder.c[lead.comp].push_back({lead.mono, lead.coeff});
                p.c[lead.comp].erase(p.c[lead.comp].begin());
                continue;
            }
            Rational c = lead.coeff / red->lead.coeff;
            Monomial m = lead.mono.divide_by(red->lead.mono);
            sub_scaled_vec(p, c, m, red->vec, ring_order);
        }
        // Remainder components were emitted in decreasing order already.
        return remainder;
    }

    void insert(WV w, Lead lead) {
        Entry e;
        e.vec = std::move(w);
        e.lead = std::move(lead);
        std::size_t t = basis.size();
        for (std::size_t k = 0; k < t; ++k)
            if (basis[k].lead.comp == e.lead.comp) {
                PairKey p;
                p.i = k;
                p.j = t;
                p.comp = e.lead.comp;
                p.lcm = Monomial::lcm(basis[k].lead.mono, e.lead.mono);
                p.deg = pair_degree(p.lcm, p.comp);
                pairs.insert(std::move(p));
            }
        basis.push_back(std::move(e));
    }

    void complete() {
        while (!pairs.empty()) {
            opts.check();
            PairKey p = *pairs.begin();
            pairs.erase(pairs.begin());
            const Entry& f = basis[p.i];
            const Entry& g = basis[p.j];
            // Chain criterion (the coprimality criterion is not valid at
            // module level and is not applied).
            bool skip = false;
            for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == p.i || k == p.j) continue;
                if (basis[k].lead.comp != p.comp) continue;
                if (!basis[k].lead.mono.divides(p.lcm)) continue;
                if (!pending(p.i, k) && !pending(p.j, k)) skip = true;
            }
            if (skip) continue;
            Monomial mf = p.lcm.divide_by(f.lead.mono);
            Monomial mg = p.lcm.divide_by(g.lead.mono);
            // g.lc * mf * f - f.lc * mg * g
            WV s = WV{std::vector<std::vector<Term>>(rank)};
            sub_scaled_vec(s, -g.lead.coeff, mf, f.vec, ring_order);
            sub_scaled_vec(s, f.lead.coeff, mg, g.vec, ring_order);
            WV r = divide_full(std::move(s));
            Lead lead = find_lead(r, mord);
            if (!lead.valid) continue;
            make_primitive_vec(r, lead);
            lead = find_lead(r, mord);
            insert(std::move(r), std::move(lead));
        }
    }
};

ModuleGbEngine::ModuleGbEngine(RingPtr ring, std::size_t rank,
                               std::size_t nmain, MonomialOrder ring_order,
                               GbOptions opts, std::vector<int> component_degrees)
    : impl_(std::make_unique<Impl>(std::move(ring), rank, nmain,
                                   std::move(ring_order), std::move(opts),
                                   std::move(component_degrees))) {}

ModuleGbEngine::~ModuleGbEngine() = default;
ModuleGbEngine::ModuleGbEngine(ModuleGbEngine&&) noexcept = default;

void ModuleGbEngine::add(const VecPoly& v) {
    if (v.comps.size() != impl_->rank)
        throw_input("module engine: rank mismatch");
    WV w = to_work(v, impl_->ring_order);
    Lead lead = find_lead(w, impl_->mord);
    if (!lead.valid) return;
    make_primitive_vec(w, lead);
    lead = find_lead(w, impl_->mord);
    impl_->insert(std::move(w), std::move(lead));
    impl_->complete();
}

VecPoly ModuleGbEngine::normal_form(const VecPoly& v) const {
    return from_work(impl_->ring,
                     impl_->divide_full(to_work(v, impl_->ring_order)));
}

std::vector<VecPoly> ModuleGbEngine::reduced_basis() const {
    const auto& impl = *impl_;
    // Minimal lead terms first.
    std::vector<std::size_t> idx(impl.basis.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = impl.mord.compare(impl.basis[a].lead.comp,
                                  impl.basis[a].lead.mono,
                                  impl.basis[b].lead.comp,
                                  impl.basis[b].lead.mono);
        return c != 0 ? c < 0 : a < b;
    });
    std::vector<std::size_t> minimal;
    for (std::size_t k : idx) {
        bool redundant = false;
        for (std::size_t kept : minimal) {
            const Lead& lk = impl.basis[kept].lead;
            const Lead& lc = impl.basis[k].lead;
            if (lk.comp == lc.comp && lk.mono.divides(lc.mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(k);
    }
    // Tail-reduce each against the others.
    std::vector<VecPoly> out;
    for (std::size_t pos = 0; pos < minimal.size(); ++pos) {
        Impl sub(impl.ring, impl.rank, impl.mord.nmain, impl.ring_order,
                 impl.opts, impl.shifts);
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != pos) sub.basis.push_back(impl.basis[minimal[l]]);
        WV r = sub.divide_full(impl.basis[minimal[pos]].vec);
        Lead lead = find_lead(r, sub.mord);
        make_primitive_vec(r, lead);
        out.push_back(from_work(impl.ring, r));
    }
    return out;
}

std::vector<VecPoly> module_syzygies(const std::vector<VecPoly>& columns,
                                     std::size_t rank,
                                     const MonomialOrder& ring_order,
                                     const GbOptions& opts) {
    if (columns.empty()) return {};
    RingPtr ring;
    for (const VecPoly& col : columns) {
        if (col.comps.size() != rank)
            throw_input("module_syzygies: column rank mismatch");
        for (const Polynomial& p : col.comps)
            if (p.ring()) ring = p.ring();
    }
    if (!ring) throw_input("module_syzygies: empty input");

    const std::size_t k = columns.size();
    ModuleGbEngine engine(ring, rank + k, rank, ring_order, opts);
    for (std::size_t j = 0; j < k; ++j) {
        VecPoly aug = VecPoly::zero(ring, rank + k);
        for (std::size_t c = 0; c < rank; ++c) aug.comps[c] = columns[j].comps[c];
        aug.comps[rank + j] = Polynomial::constant(ring, Rational(1));
        engine.add(aug);
    }
    std::vector<VecPoly> out;
    for (const VecPoly& v : engine.reduced_basis()) {
        bool main_zero = true;
        for (std::size_t c = 0; c < rank && main_zero; ++c)
            if (!v.comps[c].is_zero()) main_zero = false;
        if (!main_zero) continue;
        VecPoly syz;
        syz.comps.assign(v.comps.begin() + rank, v.comps.end());
        out.push_back(std::move(syz));
    }
    std::sort(out.begin(), out.end(), [](const VecPoly& a, const VecPoly& b) {
        return a.compare(b) < 0;
    });
    return out;
}

} // namespace scrollreg
