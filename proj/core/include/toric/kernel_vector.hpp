#pragma once

#include "toric/matrix.hpp"

namespace toric {

/// Element of Ker_Z(A) with its positive/negative parts cached.
/// u = plus - minus with disjoint supports.
struct KernelVector {
    IVec v;
    IVec plus, minus;

    KernelVector() = default;
    explicit KernelVector(IVec coords)
        : v(std::move(coords)), plus(pos_part(v)), minus(neg_part(v)) {}

    size_t size() const { return v.size(); }
    bool is_zero() const { return toric::is_zero(v); }

    /// Conformal divisibility: this.plus <= o.plus and this.minus <= o.minus.
    bool conformally_divides(const KernelVector& o) const {
        return leq(plus, o.plus) && leq(minus, o.minus);
    }

    bool operator==(const KernelVector& o) const { return v == o.v; }
    bool operator<(const KernelVector& o) const { return lex_less(v, o.v); }
};

inline KernelVector operator+(const KernelVector& a, const KernelVector& b) {
    return KernelVector(add(a.v, b.v));
}
inline KernelVector operator-(const KernelVector& a, const KernelVector& b) {
    return KernelVector(sub(a.v, b.v));
}
inline KernelVector operator-(const KernelVector& a) { return KernelVector(neg(a.v)); }

/// Canonical finite set of kernel vectors: sign-normalized (first nonzero
/// coordinate positive), lexicographically sorted, no duplicates.
class BasisSet {
public:
    BasisSet() = default;
    static BasisSet from_vectors(std::vector<IVec> vs);

    const std::vector<KernelVector>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(const IVec& v) const;
    bool is_subset_of(const BasisSet& o) const;

    std::vector<IVec> vectors() const;

    bool operator==(const BasisSet& o) const { return elems_ == o.elems_; }
    bool operator!=(const BasisSet& o) const { return !(*this == o); }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

private:
    std::vector<KernelVector> elems_;
};

}  // namespace toric
