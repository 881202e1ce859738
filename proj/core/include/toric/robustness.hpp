#pragma once

#include "toric/codim2.hpp"
#include "toric/groebner.hpp"

namespace toric {

/// Downward-closed family of subsets of [s], always containing the empty
/// face.  Faces are 1-based index sets.
struct SimplicialComplex {
    size_t ground = 0;
    std::set<std::set<size_t>> faces;

    bool is_face(const std::set<size_t>& f) const { return faces.count(f) > 0; }
};

/// Second Lawrence lifting [[T,0],[I,I]] of T.
IntMatrix lambda_matrix(const IntMatrix& t);

/// Lambda(T) with row m+i and column s+i removed for each i in omega
/// (1-based).
IntMatrix lambda_omega(const IntMatrix& t, const std::set<size_t>& omega);

/// The T_omega-indispensable set: Graver elements of T whose image under
/// the kernel isomorphism is indispensable in the canonical representative
/// Lambda(T)_omega.  Requires T simple.
BasisSet s_omega(const IntMatrix& t, const std::set<size_t>& omega);

/// Strongly-robustness complex: all omega with S_omega(T) = Gr(T), found by
/// testing Lambda(T)_omega for strong robustness, by increasing cardinality
/// with downward-closure pruning.  With codim2_fast, face tests run through
/// the Hilbert-basis route and the central polygon prunes the ground set
/// (codimension 2 only).
SimplicialComplex delta_complex(const IntMatrix& t, bool codim2_fast = false);

/// Generalized Lawrence input: T plus one primitive vector c_i per column
/// (first entry positive) and integer lambda_i with lambda_i . c_i = 1.
struct GLMSpec {
    IntMatrix t;
    std::vector<IVec> c;
    std::vector<IVec> lambda;
};

/// Block matrix whose bouquet decomposition realizes cvec = c_i on bouquet
/// i and whose bouquet ideal kernel equals Ker_Z(T).
IntMatrix generalized_lawrence(const GLMSpec& spec);

}  // namespace toric
