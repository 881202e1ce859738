#pragma once

#include "toric/groebner.hpp"

namespace toric::bruteforce {

/// All nonzero kernel vectors with every |coordinate| <= bound.
std::vector<IVec> kernel_vectors_in_box(const IntMatrix& a, const Int& bound);

/// Graver basis by definition: box kernel vectors that admit no proper
/// conformal decomposition, sign-normalized.  Only exact within the box.
BasisSet graver_box_oracle(const IntMatrix& a, const Int& bound);

/// Greedy conformal decomposition of v over gens; true when it reaches 0.
bool conformal_decomposes(const IVec& v, const BasisSet& gens);

/// Fiber by the literal coordinate-box method: x_i <= (y.b)/(y.A)_i.
std::vector<IVec> fiber_box_oracle(const IntMatrix& a, const GradingCertificate& y,
                                   const IVec& b);

/// BFS connectivity of a fiber under moves +-M.
bool fiber_connected(const std::vector<IVec>& fiber, const BasisSet& moves);

/// Markov property: every Graver-degree fiber is connected under +-M.
bool is_markov_basis(const IntMatrix& a, const GradingCertificate& y, const BasisSet& moves,
                     const BasisSet& graver_set);

/// Every minimal Markov basis of a tiny instance, by enumerating spanning
/// trees on fiber components and all representative choices per edge.
/// Throws when the count would exceed the cap.
std::vector<BasisSet> all_minimal_markov(const IntMatrix& a, size_t cap = 200000);

/// Binomial reduction by plain monomial division against marked pairs;
/// true when x^p - x^q reduces to zero.  Division steps strictly decrease
/// each side in any admissible order, so no orientation data is needed.
bool reduces_to_zero(IVec p, IVec q, const std::vector<MarkedBinomial>& basis);

/// Independent reduced-Groebner-basis check: elements in the kernel, marks
/// consistent, no lead divides any monomial of another element, all S-pairs
/// reduce to zero, and every box kernel binomial reduces to zero.
bool check_reduced_groebner(const IntMatrix& a, const WeightOrder& ord,
                            const std::vector<MarkedBinomial>& gb, const Int& box_bound);

/// gcd of all k x k minors of an n x k matrix (k = cols); equals 1 exactly
/// when the column lattice is saturated in Z^n.
Int maximal_minor_gcd(const IntMatrix& g);

}  // namespace toric::bruteforce
