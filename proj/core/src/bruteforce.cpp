#include "toric/bruteforce.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric::bruteforce {

std::vector<IVec> kernel_vectors_in_box(const IntMatrix& a, const Int& bound) {
    // walk lattice coordinates z with |(G z)_i| <= bound via FM bounds
    IntMatrix g = gale_transform(a).matrix;
    const size_t n = a.cols(), k = g.cols();
    std::vector<IVec> out;
    if (k == 0) return out;
    IneqSystem sys;
    for (size_t i = 0; i < n; ++i) {
        LinIneq lo{g.row(i), -bound};           //  (Gz)_i >= -bound
        LinIneq hi{neg(g.row(i)), -bound};      // -(Gz)_i >= -bound
        sys.push_back(std::move(lo));
        sys.push_back(std::move(hi));
    }
    auto cas = fm_cascade(sys, k);
    if (!fm_constant_rows_ok(cas[0])) return out;
    IVec z;
    auto dfs = [&](auto&& self, size_t level) -> void {
        if (level == k) {
            IVec x(n, Int(0));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < k; ++j) x[i] += g(i, j) * z[j];
            if (!is_zero(x)) out.push_back(std::move(x));
            return;
        }
        IntBounds bd = fm_integer_bounds(cas[level + 1], level, z);
        if (!bd.lo || !bd.hi) throw std::logic_error("unbounded kernel box");
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

BasisSet graver_box_oracle(const IntMatrix& a, const Int& bound) {
    std::vector<IVec> all = kernel_vectors_in_box(a, bound);
    std::vector<KernelVector> kv;
    kv.reserve(all.size());
    for (IVec& v : all) kv.emplace_back(std::move(v));
    // scan by increasing 1-norm: a vector is conformally reducible exactly
    // when a previously accepted minimal element sits below it
    std::stable_sort(kv.begin(), kv.end(), [](const KernelVector& x, const KernelVector& y) {
        Int nx = 0, ny = 0;
        for (const Int& e : x.v) nx += abs_int(e);
        for (const Int& e : y.v) ny += abs_int(e);
        return nx < ny;
    });
    std::vector<KernelVector> minimal;
    std::vector<IVec> keep;
    for (const KernelVector& v : kv) {
        bool reducible = false;
        for (const KernelVector& m : minimal)
            if (!(m == v) && m.conformally_divides(v)) {
                reducible = true;
                break;
            }
        if (!reducible) {
            minimal.push_back(v);
            keep.push_back(v.v);
        }
    }
    return BasisSet::from_vectors(std::move(keep));
}

bool conformal_decomposes(const IVec& v, const BasisSet& gens) {
    KernelVector rest{v};
    for (;;) {
        if (rest.is_zero()) return true;
        bool step = false;
        for (const KernelVector& g : gens) {
            if (g.conformally_divides(rest)) {
                rest = rest - g;
                step = true;
                break;
            }
            KernelVector ng = -g;
            if (ng.conformally_divides(rest)) {
                rest = rest - ng;
                step = true;
                break;
            }
        }
        if (!step) return false;
    }
}

std::vector<IVec> fiber_box_oracle(const IntMatrix& a, const GradingCertificate& y,
                                   const IVec& b) {
    if (!certificate_valid(a, y)) throw Error("invalid grading certificate");
    const size_t n = a.cols();
    Rat yb = dot(y.y, b);
    std::vector<IVec> out;
    if (sgn(yb) < 0) return out;
    // per-coordinate cap floor((y.b)/(y.A)_i)
    IVec cap(n);
    for (size_t i = 0; i < n; ++i) {
        Rat ya = 0;
        for (size_t r = 0; r < a.rows(); ++r) ya += y.y[r] * Rat(a(r, i));
        Rat q = yb / ya;
        q.canonicalize();
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        cap[i] = fl;
    }
    IVec x(n, Int(0));
    auto dfs = [&](auto&& self, size_t i) -> void {
        if (i == n) {
            if (a.apply(x) == b) out.push_back(x);
            return;
        }
        for (Int v = 0; v <= cap[i]; ++v) {
            x[i] = v;
            self(self, i + 1);
        }
        x[i] = 0;
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool fiber_connected(const std::vector<IVec>& fiber, const BasisSet& moves) {
    if (fiber.size() <= 1) return true;
    std::map<IVec, size_t> index;
    for (size_t i = 0; i < fiber.size(); ++i) index[fiber[i]] = i;
    std::vector<bool> seen(fiber.size(), false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
        size_t at = stack.back();
        stack.pop_back();
        for (const KernelVector& m : moves) {
            for (int s = 0; s < 2; ++s) {
                IVec next = s ? add(fiber[at], m.v) : sub(fiber[at], m.v);
                bool nonneg = true;
                for (const Int& e : next)
                    if (e < 0) {
                        nonneg = false;
                        break;
                    }
                if (!nonneg) continue;
                auto it = index.find(next);
                if (it == index.end() || seen[it->second]) continue;
                seen[it->second] = true;
                ++reached;
                stack.push_back(it->second);
            }
        }
    }
    return reached == fiber.size();
}

bool is_markov_basis(const IntMatrix& a, const GradingCertificate& y, const BasisSet& moves,
                     const BasisSet& graver_set) {
    FiberEnumerator fibers(a, y);
    std::set<IVec> degrees;
    for (const KernelVector& g : graver_set) degrees.insert(a.apply(g.plus));
    for (const IVec& b : degrees)
        if (!fiber_connected(fibers.enumerate(b), moves)) return false;
    return true;
}

std::vector<BasisSet> all_minimal_markov(const IntMatrix& a, size_t cap) {
    GradingCertificate cert = require_grading(a);
    BasisSet gr = graver(a);
    FiberEnumerator fibers(a, cert);
    std::set<IVec> degrees;
    for (const KernelVector& g : gr) degrees.insert(a.apply(g.plus));

    // per disconnected fiber: all spanning selections (tree x representatives)
    std::vector<std::vector<std::vector<IVec>>> per_degree;  // degree -> selection -> moves
    for (const IVec& b : degrees) {
        FiberGraph fg = fiber_graph(fibers, b);
        const size_t t = fg.ncomponents;
        if (t <= 1) continue;
        std::vector<std::vector<IVec>> members(t);
        for (size_t i = 0; i < fg.fiber.size(); ++i)
            members[fg.component[i]].push_back(fg.fiber[i]);

        // spanning trees of K_t by edge subsets
        std::vector<std::pair<size_t, size_t>> edges;
        for (size_t i = 0; i < t; ++i)
            for (size_t j = i + 1; j < t; ++j) edges.emplace_back(i, j);
        std::vector<std::vector<std::pair<size_t, size_t>>> trees;
        std::vector<size_t> pick;
        auto is_tree = [&](const std::vector<size_t>& sel) {
            std::vector<size_t> parent(t);
            for (size_t i = 0; i < t; ++i) parent[i] = i;
            auto find = [&](size_t x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            size_t merges = 0;
            for (size_t e : sel) {
                size_t ri = find(edges[e].first), rj = find(edges[e].second);
                if (ri == rj) return false;
                parent[ri] = rj;
                ++merges;
            }
            return merges == t - 1;
        };
        auto choose = [&](auto&& self, size_t from) -> void {
            if (pick.size() == t - 1) {
                if (is_tree(pick)) {
                    std::vector<std::pair<size_t, size_t>> es;
                    for (size_t e : pick) es.push_back(edges[e]);
                    trees.push_back(std::move(es));
                }
                return;
            }
            for (size_t e = from; e < edges.size(); ++e) {
                pick.push_back(e);
                self(self, e + 1);
                pick.pop_back();
            }
        };
        choose(choose, 0);

        std::vector<std::vector<IVec>> selections;
        for (const auto& tree : trees) {
            // cartesian product of representative pairs per edge
            std::vector<std::vector<IVec>> sel{{}};
            for (const auto& [ci, cj] : tree) {
                std::vector<std::vector<IVec>> grown;
                for (const auto& partial : sel)
                    for (const IVec& p : members[ci])
                        for (const IVec& q : members[cj]) {
                            auto next = partial;
                            next.push_back(sub(p, q));
                            grown.push_back(std::move(next));
                        }
                sel = std::move(grown);
                if (sel.size() > cap) throw Error("too many minimal Markov bases to enumerate");
            }
            for (auto& moves : sel) selections.push_back(std::move(moves));
        }
        if (selections.size() > cap) throw Error("too many minimal Markov bases to enumerate");
        per_degree.push_back(std::move(selections));
    }

    std::vector<BasisSet> out;
    std::vector<IVec> acc;
    auto build = [&](auto&& self, size_t d) -> void {
        if (d == per_degree.size()) {
            out.push_back(BasisSet::from_vectors(acc));
            return;
        }
        for (const auto& sel : per_degree[d]) {
            size_t before = acc.size();
            for (const IVec& m : sel) acc.push_back(m);
            self(self, d + 1);
            acc.resize(before);
        }
        if (out.size() > cap) throw Error("too many minimal Markov bases to enumerate");
    };
    build(build, 0);
    return out;
}

bool reduces_to_zero(IVec p, IVec q, const std::vector<MarkedBinomial>& basis) {
    auto strip = [](IVec& x, IVec& y) {
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i] > 0 && y[i] > 0) {
                Int m = std::min(x[i], y[i]);
                x[i] -= m;
                y[i] -= m;
            }
    };
    strip(p, q);
    for (;;) {
        if (p == q) return true;
        bool step = false;
        for (IVec* side : {&p, &q}) {
            for (const MarkedBinomial& e : basis) {
                if (leq(e.lead(), *side)) {
                    *side = add(sub(*side, e.lead()), e.trail());
                    strip(p, q);
                    step = true;
                    break;
                }
            }
            if (step) break;
        }
        if (!step) return false;
    }
}

bool check_reduced_groebner(const IntMatrix& a, const WeightOrder& ord,
                            const std::vector<MarkedBinomial>& gb, const Int& box_bound) {
    for (const MarkedBinomial& e : gb) {
        if (!is_zero(a.apply(e.u.v))) return false;
        int c = ord.compare(e.lead(), e.trail());
        if (c <= 0) return false;
        for (const MarkedBinomial& f : gb) {
            if (&f == &e) continue;
            if (leq(f.lead(), e.lead()) || leq(f.lead(), e.trail())) return false;
        }
    }
    // Buchberger criterion on all pairs
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j) {
            IVec gamma(gb[i].lead().size());
            for (size_t k = 0; k < gamma.size(); ++k)
                gamma[k] = std::max(gb[i].lead()[k], gb[j].lead()[k]);
            IVec p = add(sub(gamma, gb[i].lead()), gb[i].trail());
            IVec q = add(sub(gamma, gb[j].lead()), gb[j].trail());
            if (!reduces_to_zero(std::move(p), std::move(q), gb)) return false;
        }
    // bounded membership: every boxed kernel binomial reduces to zero
    for (const IVec& v : kernel_vectors_in_box(a, box_bound))
        if (!reduces_to_zero(pos_part(v), neg_part(v), gb)) return false;
    return true;
}

namespace {

Int det_expand(const IntMatrix& m, std::vector<size_t>& rows, size_t col) {
    if (col == m.cols()) return 1;
    Int acc = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        size_t row = rows[r];
        if (m(row, col) == 0) continue;
        rows.erase(rows.begin() + r);
        Int minor = det_expand(m, rows, col + 1);
        rows.insert(rows.begin() + r, row);
        Int term = m(row, col) * minor;
        acc += (r % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

Int maximal_minor_gcd(const IntMatrix& g) {
    const size_t n = g.rows(), k = g.cols();
    if (k == 0 || k > n) return 0;
    Int acc = 0;
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (pick.size() == k) {
            std::vector<size_t> rows = pick;
            acc = gcd_int(acc, det_expand(g, rows, 0));
            return;
        }
        for (size_t r = from; r + (k - pick.size()) <= n; ++r) {
            pick.push_back(r);
            self(self, r + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return acc;
}

}  // namespace toric::bruteforce
