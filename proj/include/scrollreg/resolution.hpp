#ifndef SCROLLREG_RESOLUTION_HPP
#define SCROLLREG_RESOLUTION_HPP

#include <map>
#include <optional>
#include <string>

#include "scrollreg/hilbert.hpp"
#include "scrollreg/module_gb.hpp"

namespace scrollreg {

/// Matrix of polynomials presenting a graded map of free modules. Rows carry
/// the target generator degrees, columns the source generator degrees; every
/// nonzero entry must be homogeneous of degree column_degree - row_degree.
class GradedMatrix {
  public:
    GradedMatrix() = default;
    GradedMatrix(RingPtr ring, std::vector<int> row_degrees,
                 std::vector<int> column_degrees,
                 std::vector<Polynomial> entries);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return row_degrees_.size(); }
    std::size_t cols() const { return column_degrees_.size(); }
    const std::vector<int>& row_degrees() const { return row_degrees_; }
    const std::vector<int>& column_degrees() const { return column_degrees_; }

    const Polynomial& entry(std::size_t r, std::size_t c) const {
        return entries_[r * cols() + c];
    }
    Polynomial& entry(std::size_t r, std::size_t c) {
        return entries_[r * cols() + c];
    }

    VecPoly column(std::size_t c) const;
    GradedMatrix transpose() const;

    /// Nonzero entries homogeneous of degree coldeg - rowdeg?
    bool is_homogeneous() const;
    /// Indices (r, c) of entries that are nonzero constants.
    std::optional<std::pair<std::size_t, std::size_t>> find_unit() const;

    static GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);
    bool is_zero() const;

  private:
    RingPtr ring_;
    std::vector<int> row_degrees_;
    std::vector<int> column_degrees_;
    std::vector<Polynomial> entries_; // row-major
};

/// Chain of differentials resolving a homogeneous ideal:
///   ... -> F_2 -> F_1 -> F_0 -> R,
/// maps[0] is the 1 x (number of generators) augmentation F_0 -> R and
/// maps[i] for i >= 1 the differential F_i -> F_{i-1}. Consecutive maps
/// compose to zero; the length (number of free modules) is bounded by the
/// number of ring variables for the minimal resolution.
struct Resolution {
    RingPtr ring;
    std::vector<GradedMatrix> maps;

    std::size_t length() const { return maps.size(); }
};

/// Graded Betti numbers beta_{i,j} of the resolved ideal: beta_{0,j} counts
/// minimal generators of degree j.
struct BettiTable {
    std::map<std::pair<int, int>, long> entries;

    bool empty() const { return entries.empty(); }
    long beta(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    bool operator==(const BettiTable& other) const {
        return entries == other.entries;
    }

    std::string to_text() const;
};

/// Columns generate the kernel of M as a graded module; M * result = 0.
GradedMatrix syzygy_matrix(const GradedMatrix& M, const GbOptions& opts = {});

struct ResolutionOptions {
    GbOptions gb;
    /// Prune each syzygy step to a minimal generating set. The default gives
    /// the minimal free resolution directly; switching it off keeps the raw
    /// Groebner-basis syzygies (possibly redundant) at each step.
    bool minimal_steps = true;
    /// Hard stop on the number of free modules.
    std::size_t max_length_slack = 2;
};

/// Free resolution of I by iterated syzygies starting from a minimal
/// generating set of I.
Resolution free_resolution(const Ideal& ideal, const ResolutionOptions& opts = {});

/// Cancels unit entries in the differentials until none remain; graded ranks
/// then equal the minimal Betti numbers. Pivot choice: first map, topmost
/// row, leftmost column; repeated to a fixpoint.
Resolution minimize(Resolution res);

/// Requires a minimal resolution (no constant entries in any differential).
BettiTable betti_table(const Resolution& res);

struct RegularityResult {
    int value = 0;
    bool zero_ideal = false; // empty table; value 0 by convention
};
RegularityResult regularity(const BettiTable& table);

/// Structural verification: homogeneity of all entries, consecutive
/// compositions zero, length bound, and degree-capped exactness of every
/// graded piece by modular rank computation. The default cap is the largest
/// internal degree in the table plus two.
struct ResolutionCheck {
    bool ok = true;
    std::vector<std::string> failures;
    int degree_cap = 0;
};
ResolutionCheck check_resolution(const Resolution& res,
                                 std::optional<int> degree_cap = std::nullopt);

/// Minimal generators of a homogeneous ideal (degree-ascending greedy
/// selection via incremental Groebner membership).
std::vector<Polynomial> minimal_generators(const Ideal& ideal,
                                           const GbOptions& opts = {});

} // namespace scrollreg

#endif
