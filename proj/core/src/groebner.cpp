#include "toric/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace toric {

int WeightOrder::compare(const IVec& alpha, const IVec& beta) const {
    Rat d = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (alpha[i] != beta[i]) d += w[i] * Rat(alpha[i] - beta[i]);
    int s = sgn(d);
    if (s != 0) return s;
    for (size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != beta[i]) return alpha[i] > beta[i] ? 1 : -1;
    return 0;
}

namespace {

// working binomial: coprime monomial pair, lead > trail
struct Elem {
    IVec lead, trail;
};

bool divides(const IVec& a, const IVec& b) { return leq(a, b); }

void strip_common(IVec& p, IVec& q) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0 && q[i] > 0) {
            Int m = std::min(p[i], q[i]);
            p[i] -= m;
            q[i] -= m;
        }
    }
}

// Full normal form of the binomial x^p - x^q against the current set.
// Returns false when it reduces to zero.
bool reduce_binomial(IVec& p, IVec& q, const std::vector<Elem>& set,
                     const WeightOrder& ord) {
    strip_common(p, q);
    for (;;) {
        if (p == q) return false;  // both zero after stripping
        if (ord.compare(p, q) < 0) std::swap(p, q);
        bool step = false;
        for (const Elem& e : set) {
            if (divides(e.lead, p)) {
                p = add(sub(p, e.lead), e.trail);
                strip_common(p, q);
                step = true;
                break;
            }
        }
        if (step) continue;
        for (const Elem& e : set) {
            if (divides(e.lead, q)) {
                q = add(sub(q, e.lead), e.trail);
                strip_common(p, q);
                step = true;
                break;
            }
        }
        if (!step) return true;
    }
}

IVec lcm_exp(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

}  // namespace

std::vector<MarkedBinomial> reduced_groebner(const IntMatrix& a, const WeightOrder& ord) {
    if (ord.w.size() != a.cols()) throw Error("weight vector has wrong length");
    for (const Rat& wi : ord.w)
        if (sgn(wi) < 0) throw Error("weights must be non-negative");
    GradingCertificate cert = require_grading(a);

    std::vector<Elem> basis;
    for (const KernelVector& g : graver(a)) {
        Elem e{g.plus, g.minus};
        if (ord.compare(e.lead, e.trail) < 0) std::swap(e.lead, e.trail);
        basis.push_back(std::move(e));
    }

    // pair queue, normal strategy: ascending grading value of the lcm
    using Key = std::tuple<Rat, IVec, size_t, size_t>;
    auto key_less = [](const Key& x, const Key& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
        if (std::get<1>(x) != std::get<1>(y)) return lex_less(std::get<1>(x), std::get<1>(y));
        if (std::get<2>(x) != std::get<2>(y)) return std::get<2>(x) < std::get<2>(y);
        return std::get<3>(x) < std::get<3>(y);
    };
    std::set<Key, decltype(key_less)> pairs(key_less);
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            IVec g = lcm_exp(basis[i].lead, basis[j].lead);
            // coprime leads reduce to zero (product criterion)
            if (g == add(basis[i].lead, basis[j].lead)) continue;
            pairs.emplace(dot(cert.y, g), std::move(g), i, j);
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        auto [deg, g, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        IVec p = add(sub(g, basis[i].lead), basis[i].trail);
        IVec q = add(sub(g, basis[j].lead), basis[j].trail);
        if (!reduce_binomial(p, q, basis, ord)) continue;
        if (ord.compare(p, q) < 0) std::swap(p, q);
        basis.push_back(Elem{p, q});
        push_pairs(basis.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<size_t> order_idx(basis.size());
    for (size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](size_t x, size_t y) {
        int c = ord.compare(basis[x].lead, basis[y].lead);
        if (c != 0) return c < 0;
        return ord.compare(basis[x].trail, basis[y].trail) < 0;
    });
    std::vector<Elem> minimal;
    for (size_t idx : order_idx) {
        bool covered = false;
        for (const Elem& kept : minimal)
            if (divides(kept.lead, basis[idx].lead)) {
                covered = true;
                break;
            }
        if (!covered) minimal.push_back(basis[idx]);
    }

    // tail reduction
    for (Elem& e : minimal) {
        for (;;) {
            bool step = false;
            for (const Elem& f : minimal) {
                if (&f == &e) continue;
                if (divides(f.lead, e.trail)) {
                    e.trail = add(sub(e.trail, f.lead), f.trail);
                    step = true;
                    break;
                }
            }
            if (!step) break;
        }
    }

    std::vector<MarkedBinomial> out;
    out.reserve(minimal.size());
    for (const Elem& e : minimal) {
        IVec u = sub(e.lead, e.trail);
        bool plus_leads = first_nonzero_sign(u) > 0;
        MarkedBinomial mb{KernelVector(sign_normalize(u)), plus_leads};
        // in a reduced basis of a toric ideal the two monomials are coprime
        if (mb.lead() != e.lead)
            throw std::logic_error("reduced basis element is not a pure binomial");
        out.push_back(std::move(mb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MixedProfile> mixed_profiles(const BouquetDecomposition& source,
                                         const BouquetDecomposition& target,
                                         const WeightOrder& w) {
    std::vector<MixedProfile> out;
    out.reserve(source.size());
    for (size_t i = 0; i < source.size(); ++i) {
        MixedProfile mp;
        const Bouquet& b1 = source.bouquets[i];
        for (size_t m : b1.members) {
            if (b1.cvec[m] > 0)
                mp.cplus_dot_w += Rat(b1.cvec[m]) * w.w[m];
            else if (b1.cvec[m] < 0)
                mp.cminus_dot_w += Rat(-b1.cvec[m]) * w.w[m];
        }
        const Bouquet& b2 = target.bouquets[i];
        for (size_t m : b2.members) {
            if (b2.cvec[m] > 0)
                ++mp.r_plus;
            else if (b2.cvec[m] < 0)
                ++mp.r_minus;
        }
        mp.cplus_dot_w.canonicalize();
        mp.cminus_dot_w.canonicalize();
        out.push_back(std::move(mp));
    }
    return out;
}

WeightOrder transport_weight(const WeightOrder& w, const IntMatrix& a1,
                             const IntMatrix& a2) {
    if (w.w.size() != a1.cols()) throw Error("weight vector has wrong length");
    for (const Rat& wi : w.w)
        if (sgn(wi) < 0) throw Error("weights must be non-negative");

    BouquetDecomposition dec1 = bouquet_decomposition(a1);
    BouquetDecomposition dec2 = bouquet_decomposition(a2);
    if (dec1.size() != dec2.size() || dec1.signature != dec2.signature)
        throw Error("mismatched bouquet structure or signature");
    for (size_t i = 0; i < dec1.size(); ++i)
        if (dec1.bouquets[i].kind != dec2.bouquets[i].kind)
            throw Error("mismatched bouquet structure or signature");
    // the two bouquet ideals must share their kernel lattice
    IntMatrix k1 = gale_transform(bouquet_matrix(a1, dec1)).matrix;
    IntMatrix k2 = gale_transform(bouquet_matrix(a2, dec2)).matrix;
    if (k1 != k2) throw Error("mismatched bouquet structure or signature");

    std::vector<MixedProfile> prof = mixed_profiles(dec1, dec2, w);
    RVec w2(a2.cols(), Rat(0));
    for (size_t i = 0; i < dec2.size(); ++i) {
        const Bouquet& b2 = dec2.bouquets[i];
        for (size_t m : b2.members) {
            const Int& c = b2.cvec[m];
            Rat val;
            if (c > 0)
                val = prof[i].cplus_dot_w / (Rat(c) * Rat(long(prof[i].r_plus)));
            else
                val = prof[i].cminus_dot_w / (Rat(-c) * Rat(long(prof[i].r_minus)));
            val.canonicalize();
            w2[m] = val;
        }
    }
    return WeightOrder{std::move(w2)};
}

}  // namespace toric
