#pragma once

#include "toric/bases.hpp"

namespace toric {

/// Weight order: nonnegative rational weights refined by the fixed
/// lexicographic order x_1 > x_2 > ... on ties.
struct WeightOrder {
    RVec w;

    /// -1 / 0 / +1 comparison of monomials x^alpha vs x^beta.
    int compare(const IVec& alpha, const IVec& beta) const;
};

/// Binomial x^{u+} - x^{u-} with a marked leading side; u stored
/// sign-normalized, lead_plus tells which monomial leads.
struct MarkedBinomial {
    KernelVector u;
    bool lead_plus = true;

    const IVec& lead() const { return lead_plus ? u.plus : u.minus; }
    const IVec& trail() const { return lead_plus ? u.minus : u.plus; }

    bool operator==(const MarkedBinomial& o) const {
        return u == o.u && lead_plus == o.lead_plus;
    }
    bool operator<(const MarkedBinomial& o) const {
        if (!(u == o.u)) return u < o.u;
        return lead_plus < o.lead_plus;
    }
};

/// The unique reduced Groebner basis of I_A under the given order,
/// by binomial Buchberger seeded with the Graver basis.
std::vector<MarkedBinomial> reduced_groebner(const IntMatrix& a, const WeightOrder& ord);

/// Per-bouquet data of the weight transport: counts of signs in the target
/// cvec and the dot products of the source cvec parts with w.
struct MixedProfile {
    size_t r_plus = 0, r_minus = 0;
    Rat cplus_dot_w, cminus_dot_w;
};
std::vector<MixedProfile> mixed_profiles(const BouquetDecomposition& source,
                                         const BouquetDecomposition& target,
                                         const WeightOrder& w);

/// Weight w' on the columns of a2 with  w'.D2(u) = w.D1(u)  for every
/// u in the shared bouquet-ideal kernel.  a1, a2 must have matching bouquet
/// structure (same bouquet ideal kernel, same per-index kinds).
WeightOrder transport_weight(const WeightOrder& w, const IntMatrix& a1,
                             const IntMatrix& a2);

}  // namespace toric
