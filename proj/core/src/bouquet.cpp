#include "toric/bouquet.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

// Canonical direction of a nonzero integer vector: primitive, first nonzero
// entry positive.  Two nonzero vectors are mutual rational multiples exactly
// when their directions agree.
IVec direction(const IVec& v) { return sign_normalize(primitive_part(v)); }

}  // namespace

BouquetDecomposition bouquet_decomposition(const IntMatrix& a, FreeCvecStyle style) {
    require_grading(a);
    const size_t n = a.cols();
    GaleTransform gale = gale_transform(a);

    std::vector<size_t> free_members;
    std::map<IVec, std::vector<size_t>> classes;  // direction -> members
    for (size_t i = 0; i < n; ++i) {
        IVec b = gale.row(i);
        if (is_zero(b))
            free_members.push_back(i);
        else
            classes[direction(b)].push_back(i);
    }

    std::vector<Bouquet> bouquets;
    for (auto& [dir, members] : classes) {
        Bouquet bq;
        bq.members = members;  // ascending by construction
        // coordinate l: the support of the direction is shared by all members
        size_t l = 0;
        while (dir[l] == 0) ++l;
        Int g = 0;
        for (size_t m : members) g = gcd_int(g, gale.matrix(m, l));
        const int eps = sgn(gale.matrix(members.front(), l));
        bq.cvec.assign(n, Int(0));
        bool has_pos = false, has_neg = false;
        for (size_t m : members) {
            Int c = gale.matrix(m, l) / g;
            if (eps < 0) c = -c;
            bq.cvec[m] = c;
            (c > 0 ? has_pos : has_neg) = true;
        }
        bq.kind = (has_pos && has_neg) ? BouquetKind::Mixed : BouquetKind::NonMixed;
        bouquets.push_back(std::move(bq));
    }
    if (!free_members.empty()) {
        Bouquet bq;
        bq.members = free_members;
        bq.kind = BouquetKind::Free;
        bq.cvec.assign(n, Int(0));
        for (size_t j = 0; j < free_members.size(); ++j)
            bq.cvec[free_members[j]] = (style == FreeCvecStyle::Ones) ? Int(1) : Int(j + 1);
        bouquets.push_back(std::move(bq));
    }

    std::sort(bouquets.begin(), bouquets.end(),
              [](const Bouquet& x, const Bouquet& y) { return x.members.front() < y.members.front(); });

    BouquetDecomposition dec;
    dec.bouquets = std::move(bouquets);
    dec.ncols = n;
    for (size_t i = 0; i < dec.bouquets.size(); ++i)
        if (dec.bouquets[i].kind == BouquetKind::NonMixed) dec.signature.insert(i + 1);
    return dec;
}

IntMatrix bouquet_matrix(const IntMatrix& a, const BouquetDecomposition& dec) {
    IntMatrix ab(a.rows(), dec.size());
    for (size_t i = 0; i < dec.size(); ++i) {
        IVec col = a.apply(dec.bouquets[i].cvec);
        ab.set_col(i, col);
    }
    return ab;
}

IntMatrix bouquet_matrix(const IntMatrix& a) {
    return bouquet_matrix(a, bouquet_decomposition(a));
}

DMap::DMap(const IntMatrix& a, const BouquetDecomposition& dec)
    : source_(bouquet_matrix(a, dec)), target_(a) {
    for (const Bouquet& b : dec.bouquets) {
        members_.push_back(b.members);
        IVec cs;
        cs.reserve(b.members.size());
        for (size_t m : b.members) cs.push_back(b.cvec[m]);
        coeffs_.push_back(std::move(cs));
    }
}

IVec DMap::forward(const IVec& u) const {
    if (u.size() != source_.cols()) throw Error("d_map: wrong source dimension");
    if (!is_zero(source_.apply(u))) throw Error("d_map: input not in Ker(A_B)");
    IVec x(target_.cols(), Int(0));
    for (size_t i = 0; i < members_.size(); ++i)
        for (size_t j = 0; j < members_[i].size(); ++j)
            x[members_[i][j]] = coeffs_[i][j] * u[i];
    return x;
}

IVec DMap::inverse(const IVec& x) const {
    if (x.size() != target_.cols()) throw Error("d_map: wrong target dimension");
    if (!is_zero(target_.apply(x))) throw Error("d_map: input not in Ker(A)");
    IVec u(members_.size(), Int(0));
    for (size_t i = 0; i < members_.size(); ++i) {
        const Int& c1 = coeffs_[i][0];
        const Int& x1 = x[members_[i][0]];
        if (x1 % c1 != 0) throw Error("d_map: inverse image is not integral");
        u[i] = x1 / c1;
        for (size_t j = 0; j < members_[i].size(); ++j)
            if (x[members_[i][j]] != coeffs_[i][j] * u[i])
                throw Error("d_map: input is not in the image of D");
    }
    return u;
}

bool is_simple(const IntMatrix& a) {
    BouquetDecomposition dec = bouquet_decomposition(a);
    for (const Bouquet& b : dec.bouquets)
        if (b.members.size() > 1) return false;
    return true;
}

}  // namespace toric
