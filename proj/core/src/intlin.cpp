#include "toric/intlin.hpp"

#include <algorithm>

namespace toric {

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    IVec ra = m.row(a), rb = m.row(b);
    m.set_row(a, rb);
    m.set_row(b, ra);
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    IVec ca = m.col(a), cb = m.col(b);
    m.set_col(a, cb);
    m.set_col(b, ca);
}

void negate_row(IntMatrix& m, size_t i) {
    for (size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// row_i -= q * row_r
void row_axpy(IntMatrix& m, size_t i, size_t r, const Int& q) {
    if (q == 0) return;
    for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
}

void col_axpy(IntMatrix& m, size_t i, size_t r, const Int& q) {
    if (q == 0) return;
    for (size_t j = 0; j < m.rows(); ++j) m(j, i) -= q * m(j, r);
}

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

RowHNF row_hnf(const IntMatrix& m) {
    const size_t R = m.rows(), C = m.cols();
    RowHNF out{m, IntMatrix::identity(R), 0, {}};
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    size_t r = 0;
    for (size_t c = 0; c < C && r < R; ++c) {
        // Euclid on the column until only row r is nonzero at c.
        for (;;) {
            size_t best = size_t(-1);
            for (size_t i = r; i < R; ++i) {
                if (h(i, c) == 0) continue;
                if (best == size_t(-1) || abs_int(h(i, c)) < abs_int(h(best, c))) best = i;
            }
            if (best == size_t(-1)) break;
            swap_rows(h, r, best);
            swap_rows(u, r, best);
            bool residue = false;
            for (size_t i = r + 1; i < R; ++i) {
                if (h(i, c) == 0) continue;
                Int q = fdiv(h(i, c), h(r, c));
                row_axpy(h, i, r, q);
                row_axpy(u, i, r, q);
                if (h(i, c) != 0) residue = true;
            }
            if (!residue) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (size_t i = 0; i < r; ++i) {
            Int q = fdiv(h(i, c), h(r, c));
            row_axpy(h, i, r, q);
            row_axpy(u, i, r, q);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

ColHNF col_hnf(const IntMatrix& m) {
    RowHNF r = row_hnf(m.transpose());
    ColHNF out;
    out.h = r.h.transpose();
    out.v = r.u.transpose();
    out.rank = r.rank;
    out.pivot_rows = r.pivot_cols;
    return out;
}

SmithNF smith_normal_form(const IntMatrix& a) {
    const size_t R = a.rows(), C = a.cols();
    SmithNF out{a, IntMatrix::identity(R), IntMatrix::identity(C), 0, {}};
    IntMatrix& s = out.s;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;

    size_t t = 0;
    while (t < R && t < C) {
        // smallest nonzero entry of the working submatrix into position (t,t)
        size_t pi = size_t(-1), pj = size_t(-1);
        for (size_t i = t; i < R; ++i)
            for (size_t j = t; j < C; ++j) {
                if (s(i, j) == 0) continue;
                if (pi == size_t(-1) || abs_int(s(i, j)) < abs_int(s(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == size_t(-1)) break;
        swap_rows(s, t, pi);
        swap_rows(u, t, pi);
        swap_cols(s, t, pj);
        swap_cols(v, t, pj);

        for (;;) {
            // clear column t
            bool col_dirty = true;
            while (col_dirty) {
                size_t best = t;
                for (size_t i = t + 1; i < R; ++i)
                    if (s(i, t) != 0 && (s(t, t) == 0 || abs_int(s(i, t)) < abs_int(s(t, t))))
                        best = i;
                if (best != t) {
                    swap_rows(s, t, best);
                    swap_rows(u, t, best);
                }
                col_dirty = false;
                for (size_t i = t + 1; i < R; ++i) {
                    if (s(i, t) == 0) continue;
                    Int q = fdiv(s(i, t), s(t, t));
                    row_axpy(s, i, t, q);
                    row_axpy(u, i, t, q);
                    if (s(i, t) != 0) col_dirty = true;
                }
            }
            // clear row t; may dirty the column again
            bool row_dirty = true;
            while (row_dirty) {
                size_t best = t;
                for (size_t j = t + 1; j < C; ++j)
                    if (s(t, j) != 0 && (s(t, t) == 0 || abs_int(s(t, j)) < abs_int(s(t, t))))
                        best = j;
                if (best != t) {
                    swap_cols(s, t, best);
                    swap_cols(v, t, best);
                }
                row_dirty = false;
                for (size_t j = t + 1; j < C; ++j) {
                    if (s(t, j) == 0) continue;
                    Int q = fdiv(s(t, j), s(t, t));
                    col_axpy(s, j, t, q);
                    col_axpy(v, j, t, q);
                    if (s(t, j) != 0) row_dirty = true;
                }
            }
            bool col_clear = true;
            for (size_t i = t + 1; i < R; ++i)
                if (s(i, t) != 0) col_clear = false;
            if (col_clear) break;
        }

        // enforce divisibility of the remaining block by s(t,t)
        bool restart = false;
        for (size_t i = t + 1; i < R && !restart; ++i)
            for (size_t j = t + 1; j < C && !restart; ++j)
                if (s(i, j) % s(t, t) != 0) {
                    // fold row i into row t and redo the stage
                    for (size_t jj = 0; jj < C; ++jj) s(t, jj) += s(i, jj);
                    for (size_t jj = 0; jj < R; ++jj) u(t, jj) += u(i, jj);
                    restart = true;
                }
        if (restart) continue;

        if (s(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
        ++t;
    }
    out.rank = t;
    for (size_t i = 0; i < t; ++i) out.divisors.push_back(s(i, i));
    return out;
}

size_t matrix_rank(const IntMatrix& a) { return row_hnf(a).rank; }

GaleTransform gale_transform(const IntMatrix& a) {
    SmithNF snf = smith_normal_form(a);
    const size_t n = a.cols();
    const size_t k = n - snf.rank;
    IntMatrix basis(n, k);
    for (size_t j = 0; j < k; ++j) basis.set_col(j, snf.v.col(snf.rank + j));
    if (k == 0) return GaleTransform{basis};

    IntMatrix canon = col_hnf(basis).h;  // full column rank, no zero columns
    // A . G = 0 exactly; anything else is an internal fault
    for (size_t j = 0; j < k; ++j)
        if (!is_zero(a.apply(canon.col(j))))
            throw std::logic_error("gale_transform: kernel violation");
    return GaleTransform{canon};
}

std::optional<GradingCertificate> grading_certificate(const IntMatrix& a) {
    const size_t m = a.rows(), n = a.cols();
    IneqSystem sys;
    sys.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        LinIneq q;
        q.coeffs = a.col(j);
        q.rhs = 1;
        sys.push_back(q);
    }
    auto y = fm_solve(sys, m);
    if (!y) return std::nullopt;
    return GradingCertificate{*y};
}

bool certificate_valid(const IntMatrix& a, const GradingCertificate& cert) {
    if (cert.y.size() != a.rows()) return false;
    for (size_t j = 0; j < a.cols(); ++j) {
        Rat s = 0;
        for (size_t i = 0; i < a.rows(); ++i) s += cert.y[i] * Rat(a(i, j));
        if (sgn(s) <= 0) return false;
    }
    return true;
}

GradingCertificate require_grading(const IntMatrix& a) {
    auto c = grading_certificate(a);
    if (!c) throw Error("not positively graded");
    return *c;
}

std::optional<IVec> solve_integer(const IntMatrix& a, const IVec& b) {
    if (b.size() != a.rows()) throw Error("rhs size mismatch");
    ColHNF ch = col_hnf(a);
    IVec t(a.cols(), Int(0));
    for (size_t j = 0; j < ch.rank; ++j) {
        const size_t p = ch.pivot_rows[j];
        Int res = b[p];
        for (size_t j2 = 0; j2 < j; ++j2) res -= ch.h(p, j2) * t[j2];
        if (res % ch.h(p, j) != 0) return std::nullopt;
        t[j] = res / ch.h(p, j);
    }
    if (ch.h.cols() > 0) {
        if (ch.h.apply(t) != b) return std::nullopt;
    } else if (!is_zero(b)) {
        return std::nullopt;
    }
    return ch.v.apply(t);
}

std::optional<IVec> lattice_coordinates(const IntMatrix& g, const IVec& v) {
    if (g.cols() == 0) {
        if (is_zero(v)) return IVec{};
        return std::nullopt;
    }
    return solve_integer(g, v);
}

bool lattice_contains(const IntMatrix& g, const IVec& v) {
    return lattice_coordinates(g, v).has_value();
}

FiberEnumerator::FiberEnumerator(const IntMatrix& a, const GradingCertificate& y) : a_(a) {
    if (!certificate_valid(a, y)) throw Error("invalid grading certificate");
    kernel_ = gale_transform(a).matrix;
}

std::vector<IVec> FiberEnumerator::enumerate(const IVec& b) const {
    std::vector<IVec> out;
    auto x0 = solve_integer(a_, b);
    if (!x0) return out;
    const size_t n = a_.cols(), k = kernel_.cols();
    if (k == 0) {
        bool nonneg = true;
        for (const Int& x : *x0)
            if (x < 0) nonneg = false;
        if (nonneg) out.push_back(*x0);
        return out;
    }

    IneqSystem sys;
    sys.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        LinIneq q;
        q.coeffs = kernel_.row(i);
        q.rhs = -(*x0)[i];
        sys.push_back(q);
    }
    auto cas = fm_cascade(sys, k);
    if (!fm_constant_rows_ok(cas[0])) return out;

    IVec z;
    z.reserve(k);
    auto dfs = [&](auto&& self, size_t level) -> void {
        if (level == k) {
            IVec x = *x0;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < k; ++j) x[i] += kernel_(i, j) * z[j];
            out.push_back(std::move(x));
            return;
        }
        IntBounds bd = fm_integer_bounds(cas[level + 1], level, z);
        if (!bd.lo || !bd.hi)
            throw std::logic_error("fiber enumeration hit an unbounded direction");
        for (Int zv = *bd.lo; zv <= *bd.hi; ++zv) {
            z.push_back(zv);
            self(self, level + 1);
            z.pop_back();
        }
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<IVec> fiber_enumerate(const IntMatrix& a, const GradingCertificate& y,
                                  const IVec& b) {
    return FiberEnumerator(a, y).enumerate(b);
}

IVec primitive_part(const IVec& v) {
    Int g = gcd_all(v);
    if (g == 0) throw Error("primitive part of the zero vector");
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

}  // namespace toric
