#include "scrollreg/ring.hpp"

#include <algorithm>
#include <set>

namespace scrollreg {

PolyRing::PolyRing(std::vector<std::string> vars,
                   std::vector<std::vector<int>> grads)
    : variables_(std::move(vars)), gradings_(std::move(grads)) {}

RingPtr PolyRing::make(std::vector<std::string> variables) {
    std::vector<std::vector<int>> grads;
    grads.emplace_back(variables.size(), 1);
    return make(std::move(variables), std::move(grads));
}

RingPtr PolyRing::make(std::vector<std::string> variables,
                       std::vector<std::vector<int>> gradings) {
    if (variables.empty()) throw_input("a polynomial ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw_input("empty variable name");
        if (!seen.insert(v).second)
            throw_input("duplicate variable name '" + v + "'");
    }
    if (gradings.empty()) throw_input("at least one grading component required");
    for (const auto& row : gradings)
        if (row.size() != variables.size())
            throw_input("grading row length does not match variable count");
    return RingPtr(new PolyRing(std::move(variables), std::move(gradings)));
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return i;
    return std::nullopt;
}

RingPtr PolyRing::subring(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> vars;
    vars.reserve(keep.size());
    for (std::size_t i : keep) vars.push_back(variables_[i]);
    std::vector<std::vector<int>> grads;
    grads.reserve(gradings_.size());
    for (const auto& row : gradings_) {
        std::vector<int> r;
        r.reserve(keep.size());
        for (std::size_t i : keep) r.push_back(row[i]);
        grads.push_back(std::move(r));
    }
    return make(std::move(vars), std::move(grads));
}

namespace {

int grevlex_compare(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the monomial with the larger exponent at the last
    // differing position is the smaller one.
    for (std::size_t i = a.size(); i-- > 0;) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0 ? -1 : 1;
    }
    return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = a[i] - b[i];
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
}

// grevlex restricted to the variables selected by mask (want != 0 selects the
// front block, want == 0 the back block).
int grevlex_masked_compare(const Monomial& a, const Monomial& b,
                           const std::vector<char>& mask, bool front) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (static_cast<bool>(mask[i]) == front) {
            da += a[i];
            db += b[i];
        }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (static_cast<bool>(mask[i]) != front) continue;
        int d = a[i] - b[i];
        if (d != 0) return d > 0 ? -1 : 1;
    }
    return 0;
}

} // namespace

MonomialOrder MonomialOrder::block_elimination(std::vector<char> front_mask) {
    MonomialOrder o(Kind::block);
    o.front_ = std::move(front_mask);
    return o;
}

MonomialOrder MonomialOrder::block_elimination(
    std::size_t nvars, const std::vector<std::size_t>& front) {
    std::vector<char> mask(nvars, 0);
    for (std::size_t i : front) {
        if (i >= nvars) throw_input("block order: variable index out of range");
        mask[i] = 1;
    }
    return block_elimination(std::move(mask));
}

MonomialOrder MonomialOrder::weighted(std::vector<int> weights,
                                      const MonomialOrder& tie_break) {
    MonomialOrder o(Kind::weighted);
    o.weights_ = std::move(weights);
    o.tie_ = std::make_shared<const MonomialOrder>(tie_break);
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::grevlex:
            return grevlex_compare(a, b);
        case Kind::lex:
            return lex_compare(a, b);
        case Kind::block: {
            int c = grevlex_masked_compare(a, b, front_, true);
            if (c != 0) return c;
            return grevlex_masked_compare(a, b, front_, false);
        }
        case Kind::weighted: {
            long wa = a.weighted_degree(weights_);
            long wb = b.weighted_degree(weights_);
            if (wa != wb) return wa < wb ? -1 : 1;
            return tie_->compare(a, b);
        }
    }
    return 0;
}

std::string MonomialOrder::describe() const {
    switch (kind_) {
        case Kind::grevlex:
            return "grevlex";
        case Kind::lex:
            return "lex";
        case Kind::block: {
            std::string s = "block(front={";
            bool first = true;
            for (std::size_t i = 0; i < front_.size(); ++i)
                if (front_[i]) {
                    if (!first) s += ",";
                    s += std::to_string(i);
                    first = false;
                }
            return s + "})";
        }
        case Kind::weighted:
            return "weighted(" + tie_->describe() + ")";
    }
    return "?";
}

bool MonomialOrder::operator==(const MonomialOrder& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::grevlex:
        case Kind::lex:
            return true;
        case Kind::block:
            return front_ == other.front_;
        case Kind::weighted:
            return weights_ == other.weights_ && *tie_ == *other.tie_;
    }
    return false;
}

} // namespace scrollreg
