// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Runs the full pipeline on fixed reference examples plus randomized
// cross-validation against the brute-force reference implementations.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>

#include "toric/bruteforce.hpp"
#include "toric/io.hpp"
#include "toric/robustness.hpp"

using namespace toric;
using Clock = std::chrono::steady_clock;

namespace {

const IntMatrix kT24{{12, 9, 8, 0}, {0, 3, 4, 12}};
const IntMatrix kT789{{7, 8, 9}};

const std::vector<IVec> kGraver789 = {
    {0, 9, -8}, {1, -2, 1}, {1, 7, -7}, {2, 5, -6}, {3, 3, -5}, {4, 1, -4},
    {5, -1, -3}, {6, -3, -2}, {7, -5, -1}, {8, -7, 0}, {9, 0, -7},
};

struct Harness {
    int failures = 0;
    int index = 0;

    void run(const std::string& name, const std::function<bool()>& body) {
        ++index;
        auto t0 = Clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        auto ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << "  " << index << ". " << name << "  ["
                  << ms << " ms]" << note << "\n";
        if (!ok) ++failures;
    }
};

std::vector<std::set<size_t>> subsets_of(size_t s) {
    std::vector<std::set<size_t>> out;
    for (size_t mask = 0; mask < (size_t(1) << s); ++mask) {
        std::set<size_t> f;
        for (size_t i = 0; i < s; ++i)
            if (mask & (size_t(1) << i)) f.insert(i + 1);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<IntMatrix> random_graded(size_t count, unsigned seed, size_t max_coord) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim_n(3, 5), entry(-5, 5);
    std::vector<IntMatrix> out;
    while (out.size() < count) {
        size_t n = dim_n(rng);
        size_t m = 1 + rng() % (n - 1);
        IntMatrix a(m, n);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
        if (!grading_certificate(a)) continue;
        size_t k = a.cols() - matrix_rank(a);
        if (k == 0 || k > 3) continue;
        // keep the exhaustive box oracle affordable
        Int biggest = 0;
        for (const KernelVector& g : graver(a))
            for (const Int& x : g.v) biggest = std::max(biggest, abs_int(x));
        if (biggest > long(max_coord)) continue;
        out.push_back(std::move(a));
    }
    return out;
}

GLMSpec spec_for(const IntMatrix& t, std::vector<IVec> cs) {
    GLMSpec spec;
    spec.t = t;
    spec.c = std::move(cs);
    for (const IVec& c : spec.c) spec.lambda.push_back(solve_gcd_identity(c));
    return spec;
}

// c vectors realizing the signature omega over t: non-mixed blocks for
// omega members, mixed pairs elsewhere
std::vector<IVec> signature_blocks(const IntMatrix& t, const std::set<size_t>& omega,
                                   std::mt19937& rng) {
    std::uniform_int_distribution<int> mag(1, 3);
    std::vector<IVec> cs;
    for (size_t i = 1; i <= t.cols(); ++i) {
        if (omega.count(i))
            cs.push_back(rng() % 2 ? IVec{1, mag(rng)} : IVec{1});
        else
            cs.push_back(IVec{1, -mag(rng)});
    }
    return cs;
}

WeightOrder tie_free_weight(const IntMatrix& a, const BasisSet& gr, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(1, 60);
    for (;;) {
        RVec w(a.cols());
        for (Rat& x : w) x = d(rng);
        bool tie = false;
        for (const KernelVector& g : gr)
            if (sgn(dot(w, g.v)) == 0) tie = true;
        if (!tie) return WeightOrder{std::move(w)};
    }
}

}  // namespace

int main() {
    Harness h;

    h.run("Graver golden: graver((7 8 9)) equals the reference 11-vector table in < 1 s",
          [] {
              auto t0 = Clock::now();
              BasisSet gr = graver(kT789);
              double sec = std::chrono::duration<double>(Clock::now() - t0).count();
              return gr == BasisSet::from_vectors(kGraver789) && sec < 1.0;
          });

    h.run("S_omega tables: all 8 subsets of [3] match the reference tables", [] {
        std::map<std::set<size_t>, std::vector<IVec>> expect = {
            {{}, kGraver789},
            {{1},
             {{1, -2, 1}, {5, -1, -3}, {4, 1, -4}, {9, 0, -7}, {6, -3, -2}, {7, -5, -1},
              {8, -7, 0}}},
            {{2},
             {{1, -2, 1}, {5, -1, -3}, {4, 1, -4}, {0, 9, -8}, {1, 7, -7}, {2, 5, -6},
              {3, 3, -5}, {6, -3, -2}, {7, -5, -1}, {8, -7, 0}}},
            {{3},
             {{1, -2, 1}, {5, -1, -3}, {4, 1, -4}, {0, 9, -8}, {1, 7, -7}, {2, 5, -6},
              {3, 3, -5}, {9, 0, -7}}},
            {{1, 2},
             {{1, -2, 1}, {5, -1, -3}, {4, 1, -4}, {6, -3, -2}, {7, -5, -1}, {8, -7, 0}}},
            {{1, 3}, {{1, -2, 1}, {5, -1, -3}, {4, 1, -4}, {9, 0, -7}}},
            {{2, 3},
             {{1, -2, 1}, {5, -1, -3}, {4, 1, -4}, {0, 9, -8}, {1, 7, -7}, {2, 5, -6},
              {3, 3, -5}}},
            {{1, 2, 3}, {{1, -2, 1}, {5, -1, -3}, {4, 1, -4}}},
        };
        for (auto& [omega, vecs] : expect)
            if (s_omega(kT789, omega) != BasisSet::from_vectors(vecs)) return false;
        return true;
    });

    h.run("Delta golden: delta(2x4 T) = {{},{2},{4},{2,4}} on both paths in < 60 s", [] {
        auto t0 = Clock::now();
        SimplicialComplex slow = delta_complex(kT24, false);
        SimplicialComplex fast = delta_complex(kT24, true);
        double sec = std::chrono::duration<double>(Clock::now() - t0).count();
        std::set<std::set<size_t>> expect = {{}, {2}, {4}, {2, 4}};
        return slow.faces == expect && fast.faces == expect && sec < 60.0;
    });

    h.run("Lawrence lifts: strongly robust exactly for omega in {{2},{4},{2,4}}", [] {
        return is_strongly_robust(lambda_omega(kT24, {2})) &&
               is_strongly_robust(lambda_omega(kT24, {4})) &&
               is_strongly_robust(lambda_omega(kT24, {2, 4})) &&
               !is_strongly_robust(lambda_omega(kT24, {1})) &&
               !is_strongly_robust(lambda_omega(kT24, {3}));
    });

    h.run("Generalized Lawrence: reference construction gives kinds, cvecs, kernel, "
          "robustness",
          [] {
              GLMSpec spec = spec_for(kT24, {IVec{1, -1}, IVec{5, 6, 7, 8},
                                             IVec{2023, -2022, 11}, IVec{13, 14, 15}});
              spec.lambda = {IVec{1, 0}, IVec{-1, 1, 0, 0}, IVec{1, 1, 0}, IVec{0, -1, 1}};
              IntMatrix d = generalized_lawrence(spec);
              IntMatrix expect{
                  {12, 0, -9, 9, 0, 0, 8, 8, 0, 0, 0, 0},
                  {0, 0, -3, 3, 0, 0, 4, 4, 0, 0, -12, 12},
                  {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                  {0, 0, -6, 5, 0, 0, 0, 0, 0, 0, 0, 0},
                  {0, 0, -7, 0, 5, 0, 0, 0, 0, 0, 0, 0},
                  {0, 0, -8, 0, 0, 5, 0, 0, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0, 0, 2022, 2023, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0, 0, -11, 0, 2023, 0, 0, 0},
                  {0, 0, 0, 0, 0, 0, 0, 0, 0, -14, 13, 0},
                  {0, 0, 0, 0, 0, 0, 0, 0, 0, -15, 0, 13},
              };
              if (d != expect) return false;
              auto postconditions = [&](const IntMatrix& m) {
                  BouquetDecomposition dec = bouquet_decomposition(m);
                  if (dec.size() != 4) return false;
                  const BouquetKind want[4] = {BouquetKind::Mixed, BouquetKind::NonMixed,
                                               BouquetKind::Mixed, BouquetKind::NonMixed};
                  for (size_t i = 0; i < 4; ++i)
                      if (dec.bouquets[i].kind != want[i]) return false;
                  size_t col0 = 0;
                  for (size_t i = 0; i < 4; ++i) {
                      for (size_t k = 0; k < spec.c[i].size(); ++k)
                          if (dec.bouquets[i].cvec[col0 + k] != spec.c[i][k]) return false;
                      col0 += spec.c[i].size();
                  }
                  if (gale_transform(bouquet_matrix(m, dec)).matrix !=
                      gale_transform(kT24).matrix)
                      return false;
                  return is_strongly_robust_codim2(m);
              };
              return postconditions(d) && postconditions(expect);
          });

    h.run("Graver oracle equivalence on 20 random positively graded matrices", [] {
        for (const IntMatrix& a : random_graded(20, 20260810, 9)) {
            BasisSet gr = graver(a);
            Int bound = 1;
            for (const KernelVector& k : gr)
                for (const Int& x : k.v) bound = std::max(bound, abs_int(x));
            bound += 1;
            if (gr != bruteforce::graver_box_oracle(a, bound)) return false;
            for (const IVec& v : bruteforce::kernel_vectors_in_box(a, bound))
                if (!bruteforce::conformal_decomposes(v, gr)) return false;
        }
        return true;
    });

    h.run("Markov validity: 50 random fibers per matrix connect; bases nest", [] {
        std::mt19937 rng(1234);
        std::vector<IntMatrix> instances = random_graded(6, 55, 12);
        instances.push_back(kT789);
        instances.push_back(lambda_omega(kT24, {1}));
        std::uniform_int_distribution<int> xd(0, 4);
        for (const IntMatrix& a : instances) {
            GradingCertificate cert = require_grading(a);
            BasisSet ind = indispensable_set(a);
            BasisSet mm = minimal_markov(a);
            BasisSet um = universal_markov(a);
            BasisSet gr = graver(a);
            if (!ind.is_subset_of(mm) || !mm.is_subset_of(um) || !um.is_subset_of(gr))
                return false;
            FiberEnumerator fibers(a, cert);
            for (int it = 0; it < 50; ++it) {
                IVec x(a.cols());
                for (auto& xi : x) xi = xd(rng);
                if (!bruteforce::fiber_connected(fibers.enumerate(a.apply(x)), mm))
                    return false;
            }
        }
        return true;
    });

    h.run("Markov/Groebner correspondence across 5 T_omega-robust pairs, 3 orders", [] {
        std::mt19937 rng(777);
        struct Pair {
            IntMatrix t;
            std::set<size_t> omega;
        };
        std::vector<Pair> pairs = {
            {kT24, {2, 4}}, {kT24, {2}}, {kT24, {}}, {kT789, {1, 2, 3}}, {kT789, {2}},
        };
        int gb_checked = 0;
        for (const Pair& p : pairs) {
            IntMatrix a1 = lambda_omega(p.t, p.omega);
            IntMatrix a2 = generalized_lawrence(
                spec_for(p.t, signature_blocks(p.t, p.omega, rng)));
            DMap d1(a1, bouquet_decomposition(a1));
            DMap d2(a2, bouquet_decomposition(a2));

            BasisSet m1 = minimal_markov(a1);
            std::vector<IVec> mapped;
            for (const KernelVector& k : m1) mapped.push_back(d2.forward(d1.inverse(k.v)));
            BasisSet image = BasisSet::from_vectors(std::move(mapped));
            if (image.size() != m1.size()) return false;
            GradingCertificate cert2 = require_grading(a2);
            BasisSet gr2 = graver(a2);
            if (!bruteforce::is_markov_basis(a2, cert2, image, gr2)) return false;
            if (image.size() != minimal_markov(a2).size()) return false;

            std::vector<IVec> ind_mapped;
            for (const KernelVector& k : indispensable_set(a1))
                ind_mapped.push_back(d2.forward(d1.inverse(k.v)));
            if (BasisSet::from_vectors(std::move(ind_mapped)) != indispensable_set(a2))
                return false;

            if (gb_checked < 3) {
                BasisSet gr1 = graver(a1);
                WeightOrder w = tie_free_weight(a1, gr1, rng);
                WeightOrder w2 = transport_weight(w, a1, a2);
                auto gb1 = reduced_groebner(a1, w);
                auto gb2 = reduced_groebner(a2, w2);
                std::vector<MarkedBinomial> transported;
                for (const MarkedBinomial& e : gb1) {
                    IVec u = d1.inverse(e.u.v);
                    if (!e.lead_plus) u = neg(u);
                    IVec y = d2.forward(u);
                    transported.push_back(
                        MarkedBinomial{KernelVector(sign_normalize(y)),
                                       first_nonzero_sign(y) > 0});
                }
                std::sort(transported.begin(), transported.end());
                if (!(transported == gb2)) return false;
                ++gb_checked;
            }
        }
        return gb_checked >= 3;
    });

    h.run("Monotonicity: S_omega reverses inclusions on all 19 + 65 chains", [] {
        for (const IntMatrix& t : {kT789, kT24}) {
            auto subs = subsets_of(t.cols());
            std::map<std::set<size_t>, BasisSet> tables;
            for (const auto& w : subs) tables.emplace(w, s_omega(t, w));
            size_t chains = 0;
            for (const auto& w1 : subs)
                for (const auto& w2 : subs) {
                    if (w1 == w2 ||
                        !std::includes(w2.begin(), w2.end(), w1.begin(), w1.end()))
                        continue;
                    ++chains;
                    if (!tables.at(w2).is_subset_of(tables.at(w1))) return false;
                }
            if (chains != (t.cols() == 3 ? 19u : 65u)) return false;
        }
        return true;
    });

    h.run("Codim-2 equivalences on 10 random instances: bases, circuits, polygon", [] {
        std::mt19937 rng(31415);
        std::uniform_int_distribution<int> entry(-3, 3), nd(4, 5);
        std::vector<IntMatrix> instances;
        while (instances.size() < 10) {
            size_t n = nd(rng);
            IntMatrix a(n - 2, n);
            for (size_t i = 0; i < a.rows(); ++i)
                for (size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
            if (!grading_certificate(a)) continue;
            if (a.cols() - matrix_rank(a) != 2) continue;
            // keep the semiconformal search box of the generic path small
            Int biggest = 0;
            for (const KernelVector& g : graver(a))
                for (const Int& x : g.v) biggest = std::max(biggest, abs_int(x));
            if (biggest > 12) continue;
            instances.push_back(std::move(a));
        }
        for (const IntMatrix& a : instances) {
            auto [gr2, ind2] = graver_and_indispensable_codim2(a);
            if (gr2 != graver(a)) return false;
            if (ind2 != indispensable_set(a)) return false;
            bool fast = is_strongly_robust_codim2(a);
            if (fast != is_strongly_robust(a)) return false;
            if (circuits_codim2(a).is_subset_of(ind2) != fast) return false;
        }
        // polygon bound: every vertex of delta avoids polygon vertices
        for (const IntMatrix& t : {kT789, kT24}) {
            CentralPolygon p = central_polygon(t);
            SimplicialComplex d = delta_complex(t, true);
            for (const auto& f : d.faces)
                for (size_t i : f)
                    if (p.vertex_flag[i - 1]) return false;
        }
        return true;
    });

    h.run("Never void: the empty set is a face of every tested delta complex", [] {
        std::vector<IntMatrix> ts = {kT789, kT24, IntMatrix{{7, 8, 9, 0}, {0, 0, 0, 1}},
                                     IntMatrix{{1, 2, 3}}};
        for (const IntMatrix& t : ts) {
            if (!is_simple(t)) continue;
            SimplicialComplex d = delta_complex(t);
            if (!d.is_face({})) return false;
        }
        return true;
    });

    if (h.failures == 0) {
        std::cout << "all " << h.index << " acceptance criteria passed\n";
        return 0;
    }
    std::cout << h.failures << " of " << h.index << " criteria failed\n";
    return 1;
}
