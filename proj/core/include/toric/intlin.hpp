#pragma once

#include <optional>

#include "toric/fourier_motzkin.hpp"
#include "toric/matrix.hpp"

namespace toric {

/// Row Hermite normal form  h = u * m  with unimodular u.  Pivots positive,
/// entries above a pivot reduced into [0, pivot); zero rows trail.
struct RowHNF {
    IntMatrix h;
    IntMatrix u;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};
RowHNF row_hnf(const IntMatrix& m);

/// Column HNF  h = m * v  (the transpose story); canonical form of the
/// column lattice of m.  Zero columns are dropped.
struct ColHNF {
    IntMatrix h;
    IntMatrix v;
    size_t rank = 0;
    std::vector<size_t> pivot_rows;
};
ColHNF col_hnf(const IntMatrix& m);

/// Smith normal form  s = u * a * v  with u, v unimodular, s diagonal with
/// d_1 | d_2 | ... | d_r > 0.
struct SmithNF {
    IntMatrix s, u, v;
    size_t rank = 0;
    std::vector<Int> divisors;
};
SmithNF smith_normal_form(const IntMatrix& a);

size_t matrix_rank(const IntMatrix& a);

/// Columns form a saturated lattice basis of Ker_Z(A), canonicalized by
/// column HNF.  Full-rank input yields an n x 0 transform.
struct GaleTransform {
    IntMatrix matrix;  // n x (n - rank A)
    IVec row(size_t i) const { return matrix.row(i); }
};
GaleTransform gale_transform(const IntMatrix& a);

/// Strictly positive rational combination of the rows: (y . A)_j > 0 for
/// every column j.  Exists iff Ker_Z(A) meets the nonnegative orthant only
/// in the origin.
struct GradingCertificate {
    RVec y;
};
std::optional<GradingCertificate> grading_certificate(const IntMatrix& a);

/// Checks (y . A)_j > 0 for all j.
bool certificate_valid(const IntMatrix& a, const GradingCertificate& y);
GradingCertificate require_grading(const IntMatrix& a);

/// One integer solution of A x = b, if any.
std::optional<IVec> solve_integer(const IntMatrix& a, const IVec& b);

/// z with  g * z = v  when v lies in the column lattice of g.
std::optional<IVec> lattice_coordinates(const IntMatrix& g, const IVec& v);
bool lattice_contains(const IntMatrix& g, const IVec& v);

/// Exhaustive enumeration of { x in N^n : A x = b }.  Finite because the
/// certificate bounds every coordinate by (y.b)/(y.A)_i.  The search runs
/// over kernel-lattice coordinates with Fourier-Motzkin bounds, which visits
/// the same set without walking the full coordinate box.
class FiberEnumerator {
public:
    FiberEnumerator(const IntMatrix& a, const GradingCertificate& y);
    std::vector<IVec> enumerate(const IVec& b) const;
    const IntMatrix& kernel_basis() const { return kernel_; }

private:
    IntMatrix a_;
    IntMatrix kernel_;  // n x k
};

std::vector<IVec> fiber_enumerate(const IntMatrix& a, const GradingCertificate& y,
                                  const IVec& b);

/// v divided by the gcd of its entries; rejects the zero vector.
IVec primitive_part(const IVec& v);

}  // namespace toric
