#include "toric/bases.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

// ---------------------------------------------------------------- BasisSet

BasisSet BasisSet::from_vectors(std::vector<IVec> vs) {
    BasisSet b;
    std::set<IVec> seen;
    for (IVec& v : vs) {
        if (is_zero(v)) continue;
        IVec n = sign_normalize(std::move(v));
        if (seen.insert(n).second) b.elems_.emplace_back(KernelVector(std::move(n)));
    }
    std::sort(b.elems_.begin(), b.elems_.end());
    return b;
}

bool BasisSet::contains(const IVec& v) const {
    KernelVector probe(sign_normalize(v));
    return std::binary_search(elems_.begin(), elems_.end(), probe);
}

bool BasisSet::is_subset_of(const BasisSet& o) const {
    for (const KernelVector& k : elems_)
        if (!o.contains(k.v)) return false;
    return true;
}

std::vector<IVec> BasisSet::vectors() const {
    std::vector<IVec> vs;
    vs.reserve(elems_.size());
    for (const KernelVector& k : elems_) vs.push_back(k.v);
    return vs;
}

// ------------------------------------------------------------------ Graver

namespace {

Int one_norm(const IVec& v) {
    Int s = 0;
    for (const Int& x : v) s += abs_int(x);
    return s;
}

struct QueueCmp {
    bool operator()(const IVec& a, const IVec& b) const {
        Int na = one_norm(a), nb = one_norm(b);
        if (na != nb) return na < nb;
        return lex_less(a, b);
    }
};

// Conformal normal form: subtract members of f that divide v conformally
// until none does.  Each step strictly shrinks the 1-norm.
KernelVector normal_form(KernelVector v, const std::vector<KernelVector>& f) {
    for (;;) {
        if (v.is_zero()) return v;
        bool reduced = false;
        for (const KernelVector& g : f) {
            if (g.conformally_divides(v)) {
                v = v - g;
                reduced = true;
                break;
            }
        }
        if (!reduced) return v;
    }
}

}  // namespace

BasisSet graver(const IntMatrix& a) {
    require_grading(a);
    IntMatrix lattice = gale_transform(a).matrix;
    const size_t k = lattice.cols();
    if (k == 0) return BasisSet{};

    std::vector<KernelVector> f;
    std::set<IVec, QueueCmp> queue;
    for (size_t j = 0; j < k; ++j) {
        IVec c = lattice.col(j);
        queue.insert(c);
        queue.insert(neg(c));
    }

    while (!queue.empty()) {
        IVec head = *queue.begin();
        queue.erase(queue.begin());
        KernelVector r = normal_form(KernelVector(std::move(head)), f);
        if (r.is_zero()) continue;
        for (const KernelVector& g : f) {
            IVec s = add(r.v, g.v);
            if (!is_zero(s)) queue.insert(std::move(s));
        }
        f.push_back(r);
        f.push_back(-r);
    }

    // keep the conformally minimal elements
    std::vector<IVec> minimal;
    for (size_t i = 0; i < f.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < f.size() && !dominated; ++j)
            if (j != i && f[j].conformally_divides(f[i])) dominated = true;
        if (!dominated) minimal.push_back(f[i].v);
    }
    return BasisSet::from_vectors(std::move(minimal));
}

// ------------------------------------------------------------------ Markov

FiberGraph fiber_graph(const FiberEnumerator& fibers, const IVec& b) {
    FiberGraph g;
    g.degree = b;
    g.fiber = fibers.enumerate(b);
    const size_t n = g.fiber.size();
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (supports_intersect(g.fiber[i], g.fiber[j])) {
                size_t ri = find(i), rj = find(j);
                if (ri != rj) parent[ri] = rj;
            }
    std::map<size_t, size_t> relabel;
    g.component.resize(n);
    for (size_t i = 0; i < n; ++i) {
        size_t root = find(i);
        auto [it, fresh] = relabel.emplace(root, relabel.size());
        g.component[i] = it->second;
    }
    g.ncomponents = relabel.size();
    return g;
}

namespace {

// Markov degrees: A.u+ over the Graver basis, in increasing grading value.
std::vector<IVec> markov_degrees(const IntMatrix& a, const GradingCertificate& cert,
                                 const BasisSet& gr) {
    std::set<IVec> degs;
    for (const KernelVector& g : gr) degs.insert(a.apply(g.plus));
    std::vector<IVec> out(degs.begin(), degs.end());
    std::stable_sort(out.begin(), out.end(), [&](const IVec& x, const IVec& y) {
        Rat gx = dot(cert.y, x), gy = dot(cert.y, y);
        if (gx != gy) return gx < gy;
        return lex_less(x, y);
    });
    return out;
}

struct MarkovResult {
    std::vector<IVec> minimal, universal;
};

MarkovResult markov_scan(const IntMatrix& a) {
    GradingCertificate cert = require_grading(a);
    BasisSet gr = graver(a);
    FiberEnumerator fibers(a, cert);
    MarkovResult res;
    for (const IVec& b : markov_degrees(a, cert, gr)) {
        FiberGraph fg = fiber_graph(fibers, b);
        if (fg.ncomponents <= 1) continue;
        // lexicographically smallest representative of each component
        std::vector<const IVec*> rep(fg.ncomponents, nullptr);
        for (size_t i = 0; i < fg.fiber.size(); ++i) {
            const IVec*& r = rep[fg.component[i]];
            if (!r || lex_less(fg.fiber[i], *r)) r = &fg.fiber[i];
        }
        std::vector<const IVec*> reps(rep.begin(), rep.end());
        std::sort(reps.begin(), reps.end(),
                  [](const IVec* x, const IVec* y) { return lex_less(*x, *y); });
        for (size_t j = 1; j < reps.size(); ++j)
            res.minimal.push_back(sub(*reps[0], *reps[j]));
        for (size_t i = 0; i < fg.fiber.size(); ++i)
            for (size_t j = i + 1; j < fg.fiber.size(); ++j)
                if (fg.component[i] != fg.component[j])
                    res.universal.push_back(sub(fg.fiber[i], fg.fiber[j]));
    }
    return res;
}

}  // namespace

BasisSet minimal_markov(const IntMatrix& a) {
    return BasisSet::from_vectors(markov_scan(a).minimal);
}

BasisSet universal_markov(const IntMatrix& a) {
    return BasisSet::from_vectors(markov_scan(a).universal);
}

// ---------------------------------------------------------- indispensables

namespace {

bool has_semiconformal_impl(const KernelVector& u, const FiberEnumerator& fibers,
                            const IntMatrix& a) {
    const size_t n = u.size();
    // odometer over candidates for v+ in the box [0, u+]
    std::vector<size_t> supp = support(u.plus);
    IVec p(n, Int(0));
    for (;;) {
        std::vector<IVec> fiber = fibers.enumerate(a.apply(p));
        for (const IVec& nn : fiber) {
            bool disjoint = true;
            for (size_t i = 0; i < n && disjoint; ++i)
                if (p[i] != 0 && nn[i] != 0) disjoint = false;
            if (!disjoint) continue;
            IVec v = sub(p, nn);
            if (is_zero(v)) continue;
            IVec w = sub(u.v, v);
            if (is_zero(w)) continue;
            // v_i > 0 => w_i >= 0 and w_i < 0 => v_i <= 0 collapse to a
            // single forbidden pattern
            bool semi = true;
            for (size_t i = 0; i < n && semi; ++i)
                if (v[i] > 0 && w[i] < 0) semi = false;
            if (semi) return true;
        }
        // advance the odometer
        size_t d = 0;
        while (d < supp.size()) {
            size_t i = supp[d];
            if (p[i] < u.plus[i]) {
                ++p[i];
                break;
            }
            p[i] = 0;
            ++d;
        }
        if (d == supp.size()) break;
    }
    return false;
}

}  // namespace

bool has_semiconformal_decomposition(const IVec& u, const IntMatrix& a) {
    if (is_zero(u)) throw Error("semiconformal test on the zero vector");
    if (!is_zero(a.apply(u))) throw Error("vector is not in the kernel");
    GradingCertificate cert = require_grading(a);
    FiberEnumerator fibers(a, cert);
    return has_semiconformal_impl(KernelVector(u), fibers, a);
}

BasisSet indispensable_set(const IntMatrix& a) {
    GradingCertificate cert = require_grading(a);
    BasisSet gr = graver(a);
    FiberEnumerator fibers(a, cert);
    std::vector<IVec> keep;
    for (const KernelVector& g : gr)
        if (!has_semiconformal_impl(g, fibers, a)) keep.push_back(g.v);
    return BasisSet::from_vectors(std::move(keep));
}

bool is_strongly_robust(const IntMatrix& a) {
    GradingCertificate cert = require_grading(a);
    BasisSet gr = graver(a);
    FiberEnumerator fibers(a, cert);
    for (const KernelVector& g : gr)
        if (has_semiconformal_impl(g, fibers, a)) return false;
    return true;
}

// ---------------------------------------------------------------- circuits

BasisSet circuits(const IntMatrix& a) {
    BasisSet gr = graver(a);
    std::vector<IVec> keep;
    for (const KernelVector& g : gr) {
        bool minimal = true;
        for (const KernelVector& h : gr) {
            if (&h == &g) continue;
            bool subset = true, strict = false;
            for (size_t i = 0; i < g.size() && subset; ++i) {
                if (h.v[i] != 0 && g.v[i] == 0) subset = false;
                if (h.v[i] == 0 && g.v[i] != 0) strict = true;
            }
            if (subset && strict) {
                minimal = false;
                break;
            }
        }
        if (minimal) keep.push_back(primitive_part(g.v));
    }
    return BasisSet::from_vectors(std::move(keep));
}

}  // namespace toric
