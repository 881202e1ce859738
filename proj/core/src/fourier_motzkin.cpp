#include "toric/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

// Divide through by the gcd of all coefficients and the rhs.  Safe for both
// rational and integer semantics.
LinIneq normalized(LinIneq q) {
    Int g = gcd_all(q.coeffs);
    g = gcd_int(g, q.rhs);
    if (g > 1) {
        for (Int& c : q.coeffs) c /= g;
        q.rhs /= g;
    }
    return q;
}

size_t trailing_var(const LinIneq& q) {
    for (size_t j = q.coeffs.size(); j-- > 0;)
        if (q.coeffs[j] != 0) return j;
    return size_t(-1);  // variable-free
}

}  // namespace

IneqSystem fm_eliminate(const IneqSystem& sys, size_t var) {
    std::vector<const LinIneq*> pos, negs;
    std::set<LinIneq> out;
    for (const LinIneq& q : sys) {
        int s = sgn(q.coeffs[var]);
        if (s > 0)
            pos.push_back(&q);
        else if (s < 0)
            negs.push_back(&q);
        else
            out.insert(q);
    }
    for (const LinIneq* p : pos) {
        for (const LinIneq* n : negs) {
            const Int a = p->coeffs[var];
            const Int b = -n->coeffs[var];
            LinIneq c;
            c.coeffs.resize(p->coeffs.size());
            for (size_t j = 0; j < c.coeffs.size(); ++j)
                c.coeffs[j] = b * p->coeffs[j] + a * n->coeffs[j];
            c.rhs = b * p->rhs + a * n->rhs;
            out.insert(normalized(c));
        }
    }
    return IneqSystem(out.begin(), out.end());
}

std::vector<IneqSystem> fm_cascade(const IneqSystem& sys, size_t nvars) {
    std::vector<IneqSystem> cas(nvars + 1);
    cas[nvars] = sys;
    for (size_t v = nvars; v-- > 0;) cas[v] = fm_eliminate(cas[v + 1], v);
    return cas;
}

RatBounds fm_rational_bounds(const IneqSystem& sys, size_t var, const RVec& fixed) {
    RatBounds b;
    for (const LinIneq& q : sys) {
        if (trailing_var(q) != var) continue;
        Rat residual(q.rhs);
        for (size_t j = 0; j < var; ++j)
            if (q.coeffs[j] != 0) residual -= Rat(q.coeffs[j]) * fixed[j];
        Rat bound = residual / Rat(q.coeffs[var]);
        bound.canonicalize();
        if (q.coeffs[var] > 0) {
            if (!b.lo || bound > *b.lo) b.lo = bound;
        } else {
            if (!b.hi || bound < *b.hi) b.hi = bound;
        }
    }
    return b;
}

IntBounds fm_integer_bounds(const IneqSystem& sys, size_t var, const IVec& fixed) {
    IntBounds b;
    for (const LinIneq& q : sys) {
        if (trailing_var(q) != var) continue;
        Int residual = q.rhs;
        for (size_t j = 0; j < var; ++j)
            if (q.coeffs[j] != 0) residual -= q.coeffs[j] * fixed[j];
        Int bound;
        if (q.coeffs[var] > 0) {
            mpz_cdiv_q(bound.get_mpz_t(), residual.get_mpz_t(), q.coeffs[var].get_mpz_t());
            if (!b.lo || bound > *b.lo) b.lo = bound;
        } else {
            mpz_fdiv_q(bound.get_mpz_t(), residual.get_mpz_t(), q.coeffs[var].get_mpz_t());
            if (!b.hi || bound < *b.hi) b.hi = bound;
        }
    }
    return b;
}

bool fm_constant_rows_ok(const IneqSystem& sys0) {
    for (const LinIneq& q : sys0) {
        if (trailing_var(q) != size_t(-1)) continue;
        if (q.rhs > 0) return false;
    }
    return true;
}

std::optional<RVec> fm_solve(const IneqSystem& sys, size_t nvars) {
    auto cas = fm_cascade(sys, nvars);
    if (!fm_constant_rows_ok(cas[0])) return std::nullopt;
    RVec point;
    point.reserve(nvars);
    for (size_t v = 0; v < nvars; ++v) {
        RatBounds b = fm_rational_bounds(cas[v + 1], v, point);
        if (b.empty()) return std::nullopt;  // cannot happen after FM, kept as a guard
        if (b.lo)
            point.push_back(*b.lo);
        else if (b.hi)
            point.push_back(*b.hi);
        else
            point.push_back(Rat(0));
    }
    return point;
}

}  // namespace toric
