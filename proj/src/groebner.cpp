#include "scrollreg/groebner.hpp"

#include <algorithm>
#include <set>

#include "scrollreg/module_gb.hpp"

namespace scrollreg {

void GbOptions::check() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw Error(ErrorKind::certification,
                    "computation budget exceeded (increase --budget-seconds)");
}

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> gens) {
    Ideal I;
    I.ring = std::move(ring);
    for (Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring()->same_ring(*I.ring))
            throw_input("ideal generator lives in a different ring");
        I.generators.push_back(std::move(g));
    }
    return I;
}

void require_standard_homogeneous(const Ideal& ideal) {
    for (const Polynomial& g : ideal.generators)
        if (!g.homogeneous_degree(0))
            throw_input("generator is not homogeneous: " + g.to_string());
}

namespace {

// Engine representation: term list sorted descending under the active order,
// kept integer-primitive with positive leading coefficient to control
// coefficient growth during completion.
using WP = std::vector<Term>;

WP to_work(const Polynomial& f, const MonomialOrder& ord) {
    WP w(f.terms().begin(), f.terms().end());
    std::sort(w.begin(), w.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.mono, b.mono);
    });
    return w;
}

Polynomial from_work(const RingPtr& ring, WP w) {
    return Polynomial::from_terms(ring, std::move(w));
}

void make_primitive(WP& p) {
    if (p.empty()) return;
    std::vector<Rational> cs;
    cs.reserve(p.size());
    for (const Term& t : p) cs.push_back(t.coeff);
    Rational c = rational_content(cs);
    if (p.front().coeff < 0) c = -c;
    if (c == 1) return;
    for (Term& t : p) t.coeff /= c;
}

void make_monic(WP& p) {
    if (p.empty()) return;
    Rational lc = p.front().coeff;
    if (lc == 1) return;
    for (Term& t : p) t.coeff /= lc;
}

// p -= c * m * g, all term lists sorted under ord.
WP sub_scaled(const WP& p, const Rational& c, const Monomial& m, const WP& g,
              const MonomialOrder& ord) {
    WP out;
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

struct BasisEntry {
    WP poly;
    Monomial lm;
    Rational lc;
};

// Full division: the remainder has no term divisible by any basis leading
// monomial. Reducer choice: first basis entry (in index order) whose leading
// monomial divides.
WP divide_full(WP p, const std::vector<BasisEntry>& basis,
               const MonomialOrder& ord, const GbOptions& opts) {
    WP remainder;
    std::size_t guard = 0;
    while (!p.empty()) {
        if (((++guard) & 0x3ff) == 0) opts.check();
        const Term& lead = p.front();
        const BasisEntry* red = nullptr;
        for (const BasisEntry& b : basis)
            if (b.lm.divides(lead.mono)) {
                red = &b;
                break;
            }
        if (!red) {
            remainder.push_back(lead);
            p.erase(p.begin());
            continue;
        }
        Rational c = lead.coeff / red->lc;
        Monomial m = lead.mono.divide_by(red->lm);
        p = sub_scaled(p, c, m, red->poly, ord);
    }
    return remainder;
}

struct PairKey {
    int deg;
    Monomial lcm;
    std::size_t i, j;
};

struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

class RingEngine {
  public:
    RingEngine(const MonomialOrder& ord, const GbOptions& opts)
        : ord_(ord), opts_(opts), pairs_(PairLess{&ord_}) {}

    void add_generator(const Polynomial& f) {
        WP w = to_work(f, ord_);
        if (w.empty()) return;
        make_primitive(w);
        insert(std::move(w));
        complete();
    }

    const std::vector<BasisEntry>& basis() const { return basis_; }

    WP normal_form(const Polynomial& f) const {
        return divide_full(to_work(f, ord_), basis_, ord_, opts_);
    }

    std::vector<Polynomial> reduced_basis(const RingPtr& ring) {
        // Minimal: keep only elements whose leading monomial is not divisible
        // by another kept one. Process sorted ascending by leading monomial.
        std::vector<std::size_t> idx(basis_.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            int c = ord_.compare(basis_[a].lm, basis_[b].lm);
            return c != 0 ? c < 0 : a < b;
        });
        std::vector<BasisEntry> minimal;
        for (std::size_t k : idx) {
            bool redundant = false;
            for (const BasisEntry& kept : minimal)
                if (kept.lm.divides(basis_[k].lm)) {
                    redundant = true;
                    break;
                }
            if (!redundant) minimal.push_back(basis_[k]);
        }
        // Tail-reduce each element against the others, then make monic.
        std::vector<Polynomial> out;
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<BasisEntry> others;
            for (std::size_t l = 0; l < minimal.size(); ++l)
                if (l != k) others.push_back(minimal[l]);
            WP r = divide_full(minimal[k].poly, others, ord_, opts_);
            make_monic(r);
            out.push_back(from_work(ring, std::move(r)));
        }
        return out;
    }

  private:
    void insert(WP w) {
        BasisEntry e;
        e.lm = w.front().mono;
        e.lc = w.front().coeff;
        e.poly = std::move(w);
        std::size_t t = basis_.size();
        for (std::size_t k = 0; k < t; ++k) {
            PairKey p;
            p.i = k;
            p.j = t;
            p.lcm = Monomial::lcm(basis_[k].lm, e.lm);
            p.deg = p.lcm.total_degree();
            pairs_.insert(std::move(p));
        }
        basis_.push_back(std::move(e));
    }

    bool pending(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        PairKey p;
        p.i = a;
        p.j = b;
        p.lcm = Monomial::lcm(basis_[a].lm, basis_[b].lm);
        p.deg = p.lcm.total_degree();
        return pairs_.count(p) > 0;
    }

    void complete() {
        while (!pairs_.empty()) {
            opts_.check();
            PairKey p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            const BasisEntry& f = basis_[p.i];
            const BasisEntry& g = basis_[p.j];
            // Coprimality criterion.
            if (f.lm.coprime(g.lm)) continue;
            // Chain criterion: some other basis element divides the lcm and
            // both of its pairs with f and g were already treated.
            bool skip = false;
            for (std::size_t k = 0; k < basis_.size() && !skip; ++k) {
                if (k == p.i || k == p.j) continue;
                if (!basis_[k].lm.divides(p.lcm)) continue;
                if (!pending(p.i, k) && !pending(p.j, k)) skip = true;
            }
            if (skip) continue;
            // S-polynomial, cross-scaled to stay integral.
            Monomial mf = p.lcm.divide_by(f.lm);
            Monomial mg = p.lcm.divide_by(g.lm);
            WP s = sub_scaled({}, -g.lc, mf, f.poly, ord_);
            s = sub_scaled(s, f.lc, mg, g.poly, ord_);
            WP r = divide_full(std::move(s), basis_, ord_, opts_);
            if (r.empty()) continue;
            make_primitive(r);
            insert(std::move(r));
        }
    }

    MonomialOrder ord_;
    GbOptions opts_;
    std::vector<BasisEntry> basis_;
    std::set<PairKey, PairLess> pairs_;
};

} // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (!f.ring()->same_ring(*G.ring))
        throw_input("normal_form: ring mismatch");
    std::vector<BasisEntry> basis;
    for (const Polynomial& g : G.elements) {
        if (g.is_zero()) continue;
        BasisEntry e;
        e.poly = to_work(g, G.order);
        e.lm = e.poly.front().mono;
        e.lc = e.poly.front().coeff;
        basis.push_back(std::move(e));
    }
    GbOptions opts;
    return from_work(f.ring(), divide_full(to_work(f, G.order), basis, G.order, opts));
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& G) {
    return normal_form(f, G).is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero())
        throw_input("s_polynomial of a zero polynomial");
    WP wf = to_work(f, order), wg = to_work(g, order);
    Monomial lcm = Monomial::lcm(wf.front().mono, wg.front().mono);
    Monomial mf = lcm.divide_by(wf.front().mono);
    Monomial mg = lcm.divide_by(wg.front().mono);
    Rational cf = Rational(1) / wf.front().coeff;
    Rational cg = Rational(1) / wg.front().coeff;
    WP s = sub_scaled({}, -cf, mf, wf, order);
    s = sub_scaled(s, cg, mg, wg, order);
    return from_work(f.ring(), std::move(s));
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GbOptions& opts) {
    RingEngine engine(order, opts);
    // Feed generators in canonical order for determinism.
    std::vector<Polynomial> gens = ideal.generators;
    std::sort(gens.begin(), gens.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  return a.compare(b) < 0;
              });
    for (const Polynomial& g : gens) engine.add_generator(g);
    GroebnerBasis G;
    G.ring = ideal.ring;
    G.order = order;
    G.elements = engine.reduced_basis(ideal.ring);
    return G;
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GbOptions& opts) {
    if (!a.ring->same_ring(*b.ring)) return false;
    GroebnerBasis ga = buchberger(a, MonomialOrder::grevlex(), opts);
    GroebnerBasis gb = buchberger(b, MonomialOrder::grevlex(), opts);
    return ga.elements == gb.elements;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                const GbOptions& opts) {
    if (drop.empty()) return ideal;
    const RingPtr& ring = ideal.ring;
    std::vector<std::size_t> front;
    for (const std::string& name : drop) {
        auto idx = ring->var_index(name);
        if (!idx) throw_input("eliminate: unknown variable '" + name + "'");
        front.push_back(*idx);
    }
    std::sort(front.begin(), front.end());
    front.erase(std::unique(front.begin(), front.end()), front.end());

    MonomialOrder order = MonomialOrder::block_elimination(ring->nvars(), front);
    GroebnerBasis G = buchberger(ideal, order, opts);

    std::vector<std::size_t> keep;
    std::vector<char> dropped(ring->nvars(), 0);
    for (std::size_t i : front) dropped[i] = 1;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (!dropped[i]) keep.push_back(i);
    RingPtr sub = ring->subring(keep);

    std::vector<std::size_t> var_map(ring->nvars(), 0);
    for (std::size_t k = 0; k < keep.size(); ++k) var_map[keep[k]] = k;

    auto retained = [&](const Polynomial& g) {
        for (const Term& t : g.terms())
            for (std::size_t i : front)
                if (t.mono[i] > 0) return false;
        return true;
    };
    std::vector<Polynomial> out;
    for (const Polynomial& g : G.elements)
        if (retained(g)) out.push_back(g.rename(sub, var_map));
    return Ideal::make(sub, std::move(out));
}

Ideal irrelevant_ideal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        gens.push_back(Polynomial::variable(ring, i));
    return Ideal::make(ring, std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GbOptions& opts) {
    if (!I.ring->same_ring(*J.ring)) throw_input("ideal_quotient: ring mismatch");
    if (J.generators.empty())
        throw_input("ideal_quotient: quotient by the zero ideal");
    if (I.generators.empty()) return I;

    // (I : J) from one syzygy computation: rows indexed by the generators of
    // J, columns are (f_1,...,f_s)^t followed by g_i placed in each single
    // row. First coordinates of the syzygies are exactly the p with
    // p*f_j in I for all j.
    const std::size_t s = J.generators.size();
    std::vector<VecPoly> cols;
    VecPoly c0;
    c0.comps = J.generators;
    cols.push_back(std::move(c0));
    for (std::size_t row = 0; row < s; ++row)
        for (const Polynomial& g : I.generators) {
            VecPoly v;
            v.comps.assign(s, Polynomial::zero(I.ring));
            v.comps[row] = g;
            cols.push_back(std::move(v));
        }

    std::vector<VecPoly> syz =
        module_syzygies(cols, s, MonomialOrder::grevlex(), opts);
    std::vector<Polynomial> gens;
    for (const VecPoly& v : syz)
        if (!v.comps[0].is_zero()) gens.push_back(v.comps[0]);
    Ideal raw = Ideal::make(I.ring, std::move(gens));
    // Canonical generators.
    GroebnerBasis G = buchberger(raw, MonomialOrder::grevlex(), opts);
    Ideal out;
    out.ring = I.ring;
    out.generators = G.elements;
    return out;
}

Ideal saturate(const Ideal& I, const Ideal& J, const GbOptions& opts) {
    Ideal cur = I;
    GroebnerBasis cur_gb = buchberger(cur, MonomialOrder::grevlex(), opts);
    while (true) {
        opts.check();
        Ideal next = ideal_quotient(cur, J, opts);
        GroebnerBasis next_gb = buchberger(next, MonomialOrder::grevlex(), opts);
        if (next_gb.elements == cur_gb.elements) return cur;
        cur = std::move(next);
        cur_gb = std::move(next_gb);
    }
}

Ideal kernel_of_ring_map(const RingPtr& source,
                         const std::vector<Polynomial>& images,
                         const GbOptions& opts) {
    if (images.size() != source->nvars())
        throw_input("kernel_of_ring_map: expected one image per source variable");
    const RingPtr* target = nullptr;
    for (const Polynomial& f : images) {
        if (!target) target = &f.ring();
        if (!f.ring()->same_ring(**target))
            throw_input("kernel_of_ring_map: images live in different rings");
    }
    if (!target) throw_input("kernel_of_ring_map: no images");

    // All nonzero images must share one multidegree under the target grading.
    std::optional<std::vector<long>> common;
    for (const Polynomial& f : images) {
        if (f.is_zero()) continue;
        auto deg = f.multidegree();
        if (!deg) throw_input("kernel_of_ring_map: inconsistent image degrees "
                              "(inhomogeneous image)");
        if (!common) common = deg;
        if (*common != *deg)
            throw_input("kernel_of_ring_map: inconsistent image degrees");
    }
    if (!common)
        common = std::vector<long>((*target)->ngradings(), 0);

    // Combined ring: target variables first (the block to eliminate), then
    // source variables, each source variable weighted by the common image
    // multidegree so the graph ideal is homogeneous.
    std::vector<std::string> names = (*target)->variables();
    for (const std::string& v : source->variables()) {
        if ((*target)->var_index(v))
            throw_input("kernel_of_ring_map: variable name clash '" + v + "'");
        names.push_back(v);
    }
    std::vector<std::vector<int>> grads;
    for (std::size_t c = 0; c < (*target)->ngradings(); ++c) {
        std::vector<int> row = (*target)->gradings()[c];
        for (std::size_t i = 0; i < source->nvars(); ++i)
            row.push_back(static_cast<int>((*common)[c]));
        grads.push_back(std::move(row));
    }
    RingPtr combined = PolyRing::make(names, grads);

    std::vector<std::size_t> target_map((*target)->nvars());
    for (std::size_t i = 0; i < target_map.size(); ++i) target_map[i] = i;

    std::vector<Polynomial> graph;
    for (std::size_t i = 0; i < source->nvars(); ++i) {
        Polynomial xi = Polynomial::variable(combined, (*target)->nvars() + i);
        Polynomial fi = images[i].rename(combined, target_map);
        graph.push_back(xi - fi);
    }
    Ideal graph_ideal = Ideal::make(combined, std::move(graph));
    Ideal ker = eliminate(graph_ideal, (*target)->variables(), opts);
    // eliminate() returns the subring on the retained variables, which has
    // the combined grading restricted to the source block; rebuild over the
    // caller's source ring.
    std::vector<std::size_t> id_map(source->nvars());
    for (std::size_t i = 0; i < id_map.size(); ++i) id_map[i] = i;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : ker.generators)
        gens.push_back(g.rename(source, id_map));
    return Ideal::make(source, std::move(gens));
}

} // namespace scrollreg
