#pragma once

#include "toric/bouquet.hpp"

namespace toric {

/// Graver basis: all kernel vectors with no proper conformal decomposition,
/// computed by Pottier-style completion over the kernel lattice basis.
BasisSet graver(const IntMatrix& a);

/// Fiber of degree b with the common-support edge rule; vertices carry the
/// connected component they fall in.
struct FiberGraph {
    IVec degree;
    std::vector<IVec> fiber;
    std::vector<size_t> component;  // per fiber member
    size_t ncomponents = 0;
};
FiberGraph fiber_graph(const FiberEnumerator& fibers, const IVec& b);

/// Canonical minimal Markov basis: per Graver degree, a star of moves
/// between the lexicographically smallest member of each fiber component.
BasisSet minimal_markov(const IntMatrix& a);

/// Union of all minimal Markov bases: every cross-component difference on
/// every Markov degree fiber.
BasisSet universal_markov(const IntMatrix& a);

/// Decides whether u = v +_sc w for nonzero kernel vectors v, w
/// (v_i > 0 => w_i >= 0 and w_i < 0 => v_i <= 0), by exhaustive search:
/// v+ runs over the box below u+, v- over the matching fiber.
bool has_semiconformal_decomposition(const IVec& u, const IntMatrix& a);

/// Graver elements with no proper semiconformal decomposition; this is the
/// intersection of all minimal Markov bases.
BasisSet indispensable_set(const IntMatrix& a);

/// Support-minimal Graver elements, primitive-normalized.
BasisSet circuits(const IntMatrix& a);

/// True iff the Graver basis is a minimal generating set, i.e. every Graver
/// element is indispensable.
bool is_strongly_robust(const IntMatrix& a);

}  // namespace toric
