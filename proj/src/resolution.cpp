#include "scrollreg/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "scrollreg/linalg.hpp"

namespace scrollreg {

GradedMatrix::GradedMatrix(RingPtr ring, std::vector<int> row_degrees,
                           std::vector<int> column_degrees,
                           std::vector<Polynomial> entries)
    : ring_(std::move(ring)), row_degrees_(std::move(row_degrees)),
      column_degrees_(std::move(column_degrees)), entries_(std::move(entries)) {
    if (entries_.size() != row_degrees_.size() * column_degrees_.size())
        throw_input("graded matrix: entry count mismatch");
}

VecPoly GradedMatrix::column(std::size_t c) const {
    VecPoly v;
    v.comps.reserve(rows());
    for (std::size_t r = 0; r < rows(); ++r) v.comps.push_back(entry(r, c));
    return v;
}

GradedMatrix GradedMatrix::transpose() const {
    std::vector<Polynomial> e;
    e.reserve(entries_.size());
    for (std::size_t c = 0; c < cols(); ++c)
        for (std::size_t r = 0; r < rows(); ++r) e.push_back(entry(r, c));
    // Transposed degrees are negated so entry degrees stay consistent:
    // deg = col - row becomes (-row) - (-col).
    std::vector<int> rd, cd;
    for (int d : column_degrees_) rd.push_back(-d);
    for (int d : row_degrees_) cd.push_back(-d);
    return GradedMatrix(ring_, std::move(cd), std::move(rd), std::move(e));
}

bool GradedMatrix::is_homogeneous() const {
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) {
            const Polynomial& e = entry(r, c);
            if (e.is_zero()) continue;
            auto d = e.homogeneous_degree(0);
            if (!d || *d != column_degrees_[c] - row_degrees_[r]) return false;
        }
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> GradedMatrix::find_unit()
    const {
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) {
            const Polynomial& e = entry(r, c);
            if (!e.is_zero() && e.is_constant()) return std::make_pair(r, c);
        }
    return std::nullopt;
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.cols() != b.rows()) throw_input("compose: shape mismatch");
    std::vector<Polynomial> e;
    e.reserve(a.rows() * b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Polynomial s = Polynomial::zero(a.ring());
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.entry(r, k).is_zero() || b.entry(k, c).is_zero()) continue;
                s = s + a.entry(r, k) * b.entry(k, c);
            }
            e.push_back(std::move(s));
        }
    return GradedMatrix(a.ring(), a.row_degrees(), b.column_degrees(),
                        std::move(e));
}

bool GradedMatrix::is_zero() const {
    for (const Polynomial& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

GradedMatrix syzygy_matrix(const GradedMatrix& M, const GbOptions& opts) {
    if (!M.is_homogeneous())
        throw_input("syzygy_matrix: matrix entries are not homogeneous for "
                    "the given degrees");
    std::vector<VecPoly> columns;
    for (std::size_t c = 0; c < M.cols(); ++c) columns.push_back(M.column(c));

    std::vector<VecPoly> syz;
    if (!columns.empty())
        syz = module_syzygies(columns, M.rows(), MonomialOrder::grevlex(), opts);

    // Degree of each syzygy column under the shifts given by M's columns.
    struct Col {
        int degree;
        VecPoly v;
    };
    std::vector<Col> cols;
    for (VecPoly& v : syz) {
        std::optional<int> deg;
        for (std::size_t j = 0; j < v.comps.size(); ++j) {
            if (v.comps[j].is_zero()) continue;
            auto d = v.comps[j].homogeneous_degree(0);
            if (!d) throw_certification("syzygy is not homogeneous");
            int total = static_cast<int>(*d) + M.column_degrees()[j];
            if (deg && *deg != total)
                throw_certification("syzygy has mixed degrees");
            deg = total;
        }
        if (!deg) continue;
        cols.push_back({*deg, std::move(v)});
    }
    std::sort(cols.begin(), cols.end(), [](const Col& a, const Col& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.v.compare(b.v) < 0;
    });

    std::vector<int> col_degrees;
    std::vector<Polynomial> entries(M.cols() * cols.size(),
                                    Polynomial::zero(M.ring()));
    for (std::size_t k = 0; k < cols.size(); ++k) col_degrees.push_back(cols[k].degree);
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t j = 0; j < M.cols(); ++j)
            entries[j * cols.size() + k] = cols[k].v.comps[j];
    return GradedMatrix(M.ring(), M.column_degrees(), std::move(col_degrees),
                        std::move(entries));
}

std::vector<Polynomial> minimal_generators(const Ideal& ideal,
                                           const GbOptions& opts) {
    GroebnerBasis G = buchberger(ideal, MonomialOrder::grevlex(), opts);
    std::vector<Polynomial> cands = G.elements;
    std::sort(cands.begin(), cands.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  int da = a.total_degree(), db = b.total_degree();
                  if (da != db) return da < db;
                  return a.compare(b) < 0;
              });
    ModuleGbEngine engine(ideal.ring, 1, 1, MonomialOrder::grevlex(), opts);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : cands) {
        VecPoly v;
        v.comps.push_back(g);
        if (engine.contains(v)) continue;
        kept.push_back(g);
        engine.add(v);
    }
    return kept;
}

namespace {

// Greedy minimal generating subset of homogeneous module elements,
// degree-ascending, membership tested against the incrementally generated
// submodule.
std::vector<std::size_t> minimal_column_subset(const GradedMatrix& M,
                                               const GbOptions& opts) {
    std::vector<std::size_t> order(M.cols());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (M.column_degrees()[a] != M.column_degrees()[b])
            return M.column_degrees()[a] < M.column_degrees()[b];
        return a < b;
    });
    ModuleGbEngine engine(M.ring(), M.rows(), M.rows(),
                          MonomialOrder::grevlex(), opts,
                          std::vector<int>(M.row_degrees()));
    std::vector<std::size_t> kept;
    for (std::size_t c : order) {
        VecPoly v = M.column(c);
        if (engine.contains(v)) continue;
        kept.push_back(c);
        engine.add(v);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

GradedMatrix keep_columns(const GradedMatrix& M,
                          const std::vector<std::size_t>& keep) {
    std::vector<int> cd;
    std::vector<Polynomial> e;
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c : keep) e.push_back(M.entry(r, c));
    for (std::size_t c : keep) cd.push_back(M.column_degrees()[c]);
    return GradedMatrix(M.ring(), M.row_degrees(), std::move(cd), std::move(e));
}

} // namespace

Resolution free_resolution(const Ideal& ideal, const ResolutionOptions& opts) {
    require_standard_homogeneous(ideal);
    Resolution res;
    res.ring = ideal.ring;

    std::vector<Polynomial> gens = minimal_generators(ideal, opts.gb);
    std::vector<int> degs;
    for (const Polynomial& g : gens) {
        auto d = g.homogeneous_degree(0);
        degs.push_back(static_cast<int>(*d));
    }
    res.maps.emplace_back(ideal.ring, std::vector<int>{0}, degs, gens);
    if (gens.empty()) return res;

    std::size_t limit = ideal.ring->nvars() + opts.max_length_slack;
    while (res.maps.size() < limit) {
        GradedMatrix syz = syzygy_matrix(res.maps.back(), opts.gb);
        if (syz.cols() == 0) break;
        if (opts.minimal_steps)
            syz = keep_columns(syz, minimal_column_subset(syz, opts.gb));
        res.maps.push_back(std::move(syz));
    }
    return res;
}

namespace {

void erase_row(GradedMatrix& M, std::size_t r, GradedMatrix& out) {
    std::vector<int> rd;
    std::vector<Polynomial> e;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (i == r) continue;
        rd.push_back(M.row_degrees()[i]);
        for (std::size_t c = 0; c < M.cols(); ++c) e.push_back(M.entry(i, c));
    }
    out = GradedMatrix(M.ring(), std::move(rd), M.column_degrees(), std::move(e));
}

void erase_col(GradedMatrix& M, std::size_t col, GradedMatrix& out) {
    std::vector<int> cd;
    std::vector<Polynomial> e;
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (c == col) continue;
            e.push_back(M.entry(r, c));
        }
    for (std::size_t c = 0; c < M.cols(); ++c)
        if (c != col) cd.push_back(M.column_degrees()[c]);
    out = GradedMatrix(M.ring(), M.row_degrees(), std::move(cd), std::move(e));
}

} // namespace

Resolution minimize(Resolution res) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i < res.maps.size() && !changed; ++i) {
            auto unit = res.maps[i].find_unit();
            if (!unit) continue;
            changed = true;
            std::size_t r = unit->first, c = unit->second;
            GradedMatrix& d = res.maps[i];
            Rational u = d.entry(r, c).constant_term();

            // Column operations clear row r; track the induced row updates
            // on the next differential.
            for (std::size_t c2 = 0; c2 < d.cols(); ++c2) {
                if (c2 == c || d.entry(r, c2).is_zero()) continue;
                Polynomial lambda = d.entry(r, c2).scaled(Rational(1) / u);
                for (std::size_t rr = 0; rr < d.rows(); ++rr)
                    d.entry(rr, c2) = d.entry(rr, c2) - lambda * d.entry(rr, c);
                if (i + 1 < res.maps.size()) {
                    GradedMatrix& nxt = res.maps[i + 1];
                    for (std::size_t cc = 0; cc < nxt.cols(); ++cc)
                        nxt.entry(c, cc) =
                            nxt.entry(c, cc) + lambda * nxt.entry(c2, cc);
                }
            }
            // Row operations clear column c; track the induced column
            // updates on the previous differential.
            for (std::size_t r2 = 0; r2 < d.rows(); ++r2) {
                if (r2 == r || d.entry(r2, c).is_zero()) continue;
                Polynomial mu = d.entry(r2, c).scaled(Rational(1) / u);
                d.entry(r2, c) = Polynomial::zero(d.ring());
                GradedMatrix& prv = res.maps[i - 1];
                for (std::size_t rr = 0; rr < prv.rows(); ++rr)
                    prv.entry(rr, r) = prv.entry(rr, r) + mu * prv.entry(rr, r2);
            }

            // The cancelled pair must now be isolated.
            if (i + 1 < res.maps.size())
                for (std::size_t cc = 0; cc < res.maps[i + 1].cols(); ++cc)
                    if (!res.maps[i + 1].entry(c, cc).is_zero())
                        throw_certification("minimize: residual entry after "
                                            "cancellation");
            for (std::size_t rr = 0; rr < res.maps[i - 1].rows(); ++rr)
                if (!res.maps[i - 1].entry(rr, r).is_zero())
                    throw_certification("minimize: residual entry after "
                                        "cancellation");

            GradedMatrix tmp;
            erase_row(res.maps[i], r, tmp);
            erase_col(tmp, c, res.maps[i]);
            erase_col(res.maps[i - 1], r, tmp);
            res.maps[i - 1] = tmp;
            if (i + 1 < res.maps.size()) {
                erase_row(res.maps[i + 1], c, tmp);
                res.maps[i + 1] = tmp;
            }
        }
    }
    while (res.maps.size() > 1 && res.maps.back().cols() == 0)
        res.maps.pop_back();
    return res;
}

BettiTable betti_table(const Resolution& res) {
    for (std::size_t i = 1; i < res.maps.size(); ++i)
        if (res.maps[i].find_unit())
            throw_input("betti_table: resolution is not minimal "
                        "(constant entry in differential " + std::to_string(i) +
                        "); minimize first");
    BettiTable t;
    for (std::size_t i = 0; i < res.maps.size(); ++i)
        for (int d : res.maps[i].column_degrees())
            ++t.entries[{static_cast<int>(i), d}];
    return t;
}

RegularityResult regularity(const BettiTable& table) {
    RegularityResult r;
    if (table.empty()) {
        r.zero_ideal = true;
        return r;
    }
    bool first = true;
    for (const auto& [key, count] : table.entries) {
        if (count == 0) continue;
        int v = key.second - key.first;
        if (first || v > r.value) r.value = v;
        first = false;
    }
    return r;
}

std::string BettiTable::to_text() const {
    if (entries.empty()) return "(empty)\n";
    int imax = 0, smin = 0, smax = 0;
    bool first = true;
    for (const auto& [key, count] : entries) {
        (void)count;
        imax = std::max(imax, key.first);
        int s = key.second - key.first;
        if (first) {
            smin = smax = s;
            first = false;
        } else {
            smin = std::min(smin, s);
            smax = std::max(smax, s);
        }
    }
    std::ostringstream os;
    os << "    ";
    for (int i = 0; i <= imax; ++i) os << "\t" << i;
    os << "\n";
    for (int s = smin; s <= smax; ++s) {
        os << s << ":";
        for (int i = 0; i <= imax; ++i) {
            long b = beta(i, s + i);
            os << "\t";
            if (b == 0)
                os << ".";
            else
                os << b;
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// Rows of the degree-m piece of a graded map: one row per (column generator,
// monomial) pair, coordinates indexed by (row generator, monomial).
std::vector<std::vector<Rational>> graded_piece_rows(const GradedMatrix& M,
                                                     int m) {
    std::size_t nvars = M.ring()->nvars();
    std::vector<std::vector<Monomial>> row_monos(M.rows());
    std::vector<std::size_t> offset(M.rows() + 1, 0);
    std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index;
    std::size_t total = 0;
    for (std::size_t r = 0; r < M.rows(); ++r) {
        offset[r] = total;
        row_monos[r] = monomials_of_degree(nvars, m - M.row_degrees()[r]);
        for (const Monomial& mono : row_monos[r])
            index[{r, mono.exponents()}] = total++;
    }
    offset[M.rows()] = total;

    std::vector<std::vector<Rational>> rows;
    for (std::size_t c = 0; c < M.cols(); ++c) {
        for (const Monomial& mu :
             monomials_of_degree(nvars, m - M.column_degrees()[c])) {
            std::vector<Rational> row(total, Rational(0));
            bool nonzero = false;
            for (std::size_t r = 0; r < M.rows(); ++r) {
                const Polynomial& e = M.entry(r, c);
                for (const Term& t : e.terms()) {
                    auto it = index.find({r, (t.mono * mu).exponents()});
                    if (it == index.end())
                        throw_certification("graded piece: inhomogeneous entry");
                    row[it->second] += t.coeff;
                    nonzero = true;
                }
            }
            (void)nonzero;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

long graded_rank(const GradedMatrix& M, int m, std::int64_t p) {
    if (M.cols() == 0 || M.rows() == 0) return 0;
    auto rows = graded_piece_rows(M, m);
    if (rows.empty()) return 0;
    return rank_mod_p(rows, p);
}

long piece_dimension(const RingPtr& ring, const std::vector<int>& degs, int m) {
    long n = 0;
    for (int d : degs)
        n += static_cast<long>(monomials_of_degree(ring->nvars(), m - d).size());
    return n;
}

} // namespace

ResolutionCheck check_resolution(const Resolution& res,
                                 std::optional<int> degree_cap) {
    ResolutionCheck out;
    auto fail = [&](const std::string& msg) {
        out.ok = false;
        out.failures.push_back(msg);
    };

    if (res.maps.empty()) {
        fail("empty resolution");
        return out;
    }
    if (res.maps[0].rows() != 1 || res.maps[0].row_degrees()[0] != 0)
        fail("augmentation map must be a single row in degree 0");
    for (std::size_t i = 0; i < res.maps.size(); ++i) {
        if (!res.maps[i].is_homogeneous())
            fail("differential " + std::to_string(i) +
                 " has inhomogeneous entries");
        if (i >= 1) {
            if (res.maps[i].rows() != res.maps[i - 1].cols() ||
                res.maps[i].row_degrees() != res.maps[i - 1].column_degrees())
                fail("differential " + std::to_string(i) +
                     " does not match the previous free module");
            else if (!GradedMatrix::compose(res.maps[i - 1], res.maps[i])
                          .is_zero())
                fail("composition of differentials " + std::to_string(i - 1) +
                     " and " + std::to_string(i) + " is nonzero");
        }
    }
    if (res.maps.size() > res.ring->nvars())
        fail("length exceeds the number of ring variables");
    if (!out.ok) return out;

    int maxdeg = 0;
    for (const GradedMatrix& m : res.maps)
        for (int d : m.column_degrees()) maxdeg = std::max(maxdeg, d);
    int cap = degree_cap ? *degree_cap : maxdeg + 2;
    out.degree_cap = cap;

    int mindeg = cap;
    for (int d : res.maps[0].column_degrees()) mindeg = std::min(mindeg, d);

    for (std::size_t i = 0; i < res.maps.size(); ++i) {
        for (int m = mindeg; m <= cap; ++m) {
            long dim = piece_dimension(res.ring, res.maps[i].column_degrees(), m);
            if (dim == 0) continue;
            bool certified = false;
            for (std::int64_t p : rank_primes()) {
                try {
                    long r_here = graded_rank(res.maps[i], m, p);
                    long r_next = i + 1 < res.maps.size()
                                      ? graded_rank(res.maps[i + 1], m, p)
                                      : 0;
                    if (r_here + r_next == dim) {
                        certified = true;
                        break;
                    }
                } catch (const Error&) {
                    continue; // bad prime; retry
                }
            }
            if (!certified)
                fail("exactness fails at homological position " +
                     std::to_string(i) + " in degree " + std::to_string(m));
        }
    }
    return out;
}

} // namespace scrollreg
