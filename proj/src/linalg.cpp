#include "scrollreg/linalg.hpp"

#include <algorithm>

namespace scrollreg {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> e(nvars, 0);
    // Recursive enumeration in lexicographic order of exponent vectors.
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == nvars) {
            e[pos] = remaining;
            out.emplace_back(e);
            return;
        }
        for (int d = remaining; d >= 0; --d) {
            e[pos] = d;
            self(self, pos + 1, remaining - d);
        }
        e[pos] = 0;
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    return out;
}

const std::vector<std::int64_t>& rank_primes() {
    static const std::vector<std::int64_t> primes = {
        2147483629, 2147483587, 2147483563, 1073741789};
    return primes;
}

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t r = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = (__int128)r * base % p;
        base = (__int128)base * base % p;
        exp >>= 1;
    }
    return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    return mod_pow(((a % p) + p) % p, p - 2, p);
}

std::int64_t reduce_mod(const Rational& q, std::int64_t p) {
    Integer num = q.get_num(), den = q.get_den();
    Integer pz(static_cast<unsigned long>(p));
    Integer dm = den % pz;
    if (dm == 0) throw Error(ErrorKind::certification, "bad prime in modular rank");
    Integer nm = num % pz;
    std::int64_t n = nm.get_si();
    std::int64_t d = dm.get_si();
    n = ((n % p) + p) % p;
    return (__int128)n * mod_inv(d, p) % p;
}

} // namespace

long rank_mod_p(const std::vector<std::vector<Rational>>& rows, std::int64_t p) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    std::vector<std::vector<std::int64_t>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<std::int64_t> r(ncols);
        for (std::size_t j = 0; j < ncols; ++j) r[j] = reduce_mod(row[j], p);
        m.push_back(std::move(r));
    }
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        std::int64_t inv = mod_inv(m[row][col], p);
        for (std::size_t j = col; j < ncols; ++j)
            m[row][j] = (__int128)m[row][j] * inv % p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            std::int64_t f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) {
                m[i][j] = (m[i][j] - (__int128)f * m[row][j]) % p;
                if (m[i][j] < 0) m[i][j] += p;
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

long rank_exact(std::vector<std::vector<Rational>> rows) {
    RowSpan span;
    long rank = 0;
    for (auto& r : rows)
        if (span.add(std::move(r))) ++rank;
    return rank;
}

void RowSpan::reduce(std::vector<Rational>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t piv = pivots_[k];
        if (piv < v.size() && v[piv] != 0) {
            Rational f = v[piv];
            const auto& row = rows_[k];
            for (std::size_t j = piv; j < v.size(); ++j)
                if (row[j] != 0) v[j] -= f * row[j];
        }
    }
}

bool RowSpan::add(std::vector<Rational> v) {
    reduce(v);
    std::size_t piv = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv == v.size()) return false;
    Rational inv = Rational(1) / v[piv];
    for (std::size_t j = piv; j < v.size(); ++j)
        if (v[j] != 0) v[j] *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool RowSpan::contains(std::vector<Rational> v) const {
    reduce(v);
    for (const Rational& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace scrollreg
