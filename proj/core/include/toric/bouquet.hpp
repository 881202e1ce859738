#pragma once

#include <set>

#include "toric/intlin.hpp"
#include "toric/kernel_vector.hpp"

namespace toric {

enum class BouquetKind { Free, Mixed, NonMixed };

/// Connected component of the bouquet graph: columns whose Gale rows are
/// mutual rational multiples (free columns form one bouquet).  cvec is the
/// c_B vector, supported on the members, first member entry positive.
struct Bouquet {
    std::vector<size_t> members;  // ascending column indices (0-based)
    BouquetKind kind = BouquetKind::Free;
    IVec cvec;  // length n, zero outside members
};

/// Which vector to place on the free bouquet; any nonzero vector with a
/// positive first coordinate is admissible and downstream results must not
/// depend on the choice, so an alternative is kept for testing.
enum class FreeCvecStyle { Ones, Ramp };

struct BouquetDecomposition {
    std::vector<Bouquet> bouquets;  // ordered by smallest member index
    std::set<size_t> signature;     // 1-based indices of NonMixed bouquets
    size_t ncols = 0;

    size_t size() const { return bouquets.size(); }
};

/// errors with "not positively graded" when no grading certificate exists.
BouquetDecomposition bouquet_decomposition(const IntMatrix& a,
                                           FreeCvecStyle style = FreeCvecStyle::Ones);

/// Columns a_{B_i} = sum_j (c_{B_i})_j a_j, one per bouquet.
IntMatrix bouquet_matrix(const IntMatrix& a, const BouquetDecomposition& dec);
IntMatrix bouquet_matrix(const IntMatrix& a);

/// Kernel isomorphism D between Ker_Z(A_B) and Ker_Z(A):
/// forward sends u to the vector with c_{ij} u_i at member j of bouquet i.
class DMap {
public:
    DMap(const IntMatrix& a, const BouquetDecomposition& dec);

    /// u in Ker_Z(A_B)  ->  D(u) in Ker_Z(A).
    IVec forward(const IVec& u) const;
    /// x in Ker_Z(A)  ->  D^{-1}(x) in Ker_Z(A_B); exact division enforced.
    IVec inverse(const IVec& x) const;

    const IntMatrix& source() const { return source_; }  // A_B
    const IntMatrix& target() const { return target_; }  // A

private:
    IntMatrix source_, target_;
    std::vector<std::vector<size_t>> members_;
    std::vector<IVec> coeffs_;  // c_{i1}, ..., c_{ik_i} per bouquet
};

bool is_simple(const IntMatrix& a);

}  // namespace toric
