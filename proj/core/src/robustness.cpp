#include "toric/robustness.hpp"

#include <algorithm>

namespace toric {

IntMatrix lambda_matrix(const IntMatrix& t) {
    const size_t m = t.rows(), s = t.cols();
    IntMatrix lm(m + s, 2 * s);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < s; ++j) lm(i, j) = t(i, j);
    for (size_t i = 0; i < s; ++i) {
        lm(m + i, i) = 1;
        lm(m + i, s + i) = 1;
    }
    return lm;
}

IntMatrix lambda_omega(const IntMatrix& t, const std::set<size_t>& omega) {
    const size_t m = t.rows(), s = t.cols();
    for (size_t i : omega)
        if (i < 1 || i > s) throw Error("omega index out of range");

    std::vector<size_t> kept;  // rows of the identity block that stay
    for (size_t i = 1; i <= s; ++i)
        if (!omega.count(i)) kept.push_back(i);

    IntMatrix out(m + kept.size(), s + kept.size());
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < s; ++j) out(i, j) = t(i, j);
    for (size_t r = 0; r < kept.size(); ++r) {
        out(m + r, kept[r] - 1) = 1;
        out(m + r, s + r) = 1;
    }
    return out;
}

namespace {

void require_simple(const IntMatrix& t) {
    if (!is_simple(t)) throw Error("matrix is not simple");
}

bool lambda_strongly_robust(const IntMatrix& t, const std::set<size_t>& omega,
                            bool codim2_fast) {
    IntMatrix rep = lambda_omega(t, omega);
    return codim2_fast ? is_strongly_robust_codim2(rep) : is_strongly_robust(rep);
}

}  // namespace

BasisSet s_omega(const IntMatrix& t, const std::set<size_t>& omega) {
    require_simple(t);
    IntMatrix rep = lambda_omega(t, omega);
    BouquetDecomposition dec = bouquet_decomposition(rep);
    DMap d(rep, dec);
    std::vector<IVec> pulled;
    for (const KernelVector& x : indispensable_set(rep))
        pulled.push_back(d.inverse(x.v));
    return BasisSet::from_vectors(std::move(pulled));
}

SimplicialComplex delta_complex(const IntMatrix& t, bool codim2_fast) {
    require_simple(t);
    const size_t s = t.cols();

    // ground-set pruning from the central polygon, codimension 2 only
    std::vector<bool> allowed(s + 1, true);
    if (codim2_fast) {
        CentralPolygon p = central_polygon(t);
        for (size_t i = 1; i <= s; ++i) allowed[i] = !p.vertex_flag[i - 1];
    }

    SimplicialComplex delta;
    delta.ground = s;
    if (!lambda_strongly_robust(t, {}, codim2_fast))
        throw std::logic_error("empty set failed the face test");
    delta.faces.insert(std::set<size_t>{});

    // subsets by increasing cardinality; test only when every maximal
    // proper subset is already a face
    std::vector<std::set<size_t>> current = {{}};
    for (size_t card = 1; card <= s && !current.empty(); ++card) {
        std::set<std::set<size_t>> candidates;
        for (const std::set<size_t>& f : current) {
            size_t start = f.empty() ? 1 : *f.rbegin() + 1;
            for (size_t i = start; i <= s; ++i) {
                if (!allowed[i]) continue;
                std::set<size_t> g = f;
                g.insert(i);
                candidates.insert(std::move(g));
            }
        }
        std::vector<std::set<size_t>> next;
        for (const std::set<size_t>& g : candidates) {
            bool closed = true;
            for (size_t i : g) {
                std::set<size_t> sub = g;
                sub.erase(i);
                if (!delta.faces.count(sub)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) continue;
            if (lambda_strongly_robust(t, g, codim2_fast)) {
                delta.faces.insert(g);
                next.push_back(g);
            }
        }
        current = std::move(next);
    }
    return delta;
}

IntMatrix generalized_lawrence(const GLMSpec& spec) {
    const size_t m = spec.t.rows(), s = spec.t.cols();
    if (spec.c.size() != s || spec.lambda.size() != s)
        throw Error("glm spec needs one c and one lambda per column");

    size_t ncols = 0, extra_rows = 0;
    for (size_t i = 0; i < s; ++i) {
        const IVec& c = spec.c[i];
        if (c.empty()) throw Error("empty c vector");
        if (c[0] <= 0) throw Error("c vector must have positive first entry");
        if (gcd_all(c) != 1) throw Error("c vector is not primitive");
        if (spec.lambda[i].size() != c.size())
            throw Error("lambda length differs from c length");
        if (dot(spec.lambda[i], c) != 1) throw Error("lambda identity fails");
        ncols += c.size();
        extra_rows += c.size() - 1;
    }

    IntMatrix d(m + extra_rows, ncols);
    size_t col0 = 0, row0 = m;
    for (size_t i = 0; i < s; ++i) {
        const IVec& c = spec.c[i];
        const IVec& lam = spec.lambda[i];
        const size_t mi = c.size();
        // top block: column j is lambda_ij * t_i
        for (size_t j = 0; j < mi; ++j)
            for (size_t r = 0; r < m; ++r) d(r, col0 + j) = lam[j] * spec.t(r, i);
        // proportionality rows: -c_ij x_{i1} + c_i1 x_{ij} = 0
        for (size_t j = 1; j < mi; ++j) {
            d(row0, col0) = -c[j];
            d(row0, col0 + j) = c[0];
            ++row0;
        }
        col0 += mi;
    }
    return d;
}

}  // namespace toric
