#include <doctest.h>

#include <random>

#include "toric/bruteforce.hpp"
#include "toric/groebner.hpp"
#include "toric/io.hpp"
#include "toric/robustness.hpp"

using namespace toric;

namespace {

const IntMatrix kT24{{12, 9, 8, 0}, {0, 3, 4, 12}};

RVec ones(size_t n) { return RVec(n, Rat(1)); }

std::vector<MarkedBinomial> transport_basis(const std::vector<MarkedBinomial>& gb,
                                            const DMap& d1, const DMap& d2) {
    std::vector<MarkedBinomial> out;
    for (const MarkedBinomial& e : gb) {
        IVec u = d1.inverse(e.u.v);
        if (!e.lead_plus) u = neg(u);  // orient so the lead is the plus side
        IVec y = d2.forward(u);
        bool plus = first_nonzero_sign(y) > 0;
        out.push_back(MarkedBinomial{KernelVector(sign_normalize(y)), plus});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// a weight with no ties on the Graver basis keeps the transported order
// comparisons strict on both sides
WeightOrder tie_free_weight(const IntMatrix& a, const BasisSet& gr, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(1, 40);
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

TEST_CASE("weight order comparison with lex tiebreak") {
    WeightOrder w{RVec{Rat(1), Rat(0)}};
    CHECK(w.compare(IVec{1, 0}, IVec{0, 1}) > 0);
    CHECK(w.compare(IVec{0, 2}, IVec{0, 1}) > 0);  // tie on weight, lex decides
    CHECK(w.compare(IVec{0, 1}, IVec{0, 1}) == 0);
}

TEST_CASE("reduced basis of [[1,1]] under w=(1,0)") {
    auto gb = reduced_groebner(IntMatrix{{1, 1}}, WeightOrder{RVec{Rat(1), Rat(0)}});
    REQUIRE(gb.size() == 1);
    CHECK(gb[0].u.v == IVec{1, -1});
    CHECK(gb[0].lead_plus);
}

TEST_CASE("reduced basis of (7 8 9) under the all-ones order") {
    IntMatrix a{{7, 8, 9}};
    WeightOrder w{ones(3)};
    auto gb = reduced_groebner(a, w);
    // frozen after validating with the independent normal-form oracle below
    std::vector<MarkedBinomial> expect = {
        {KernelVector(IVec{0, 9, -8}), true}, {KernelVector(IVec{1, -2, 1}), true},
        {KernelVector(IVec{1, 7, -7}), true}, {KernelVector(IVec{2, 5, -6}), true},
        {KernelVector(IVec{3, 3, -5}), true}, {KernelVector(IVec{4, 1, -4}), true},
        {KernelVector(IVec{5, -1, -3}), true},
    };
    CHECK(gb == expect);
    CHECK(bruteforce::check_reduced_groebner(a, w, gb, 10));
}

TEST_CASE("weights must be nonnegative and well sized") {
    IntMatrix a{{1, 1}};
    CHECK_THROWS_AS(reduced_groebner(a, WeightOrder{RVec{Rat(-1), Rat(0)}}), Error);
    CHECK_THROWS_AS(reduced_groebner(a, WeightOrder{RVec{Rat(1)}}), Error);
}

TEST_CASE("strongly robust: every sampled reduced basis is the Graver basis") {
    IntMatrix a = lambda_omega(kT24, {2, 4});
    BasisSet gr = graver(a);
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> d(0, 9);
    for (int it = 0; it < 4; ++it) {
        RVec w(a.cols());
        for (Rat& x : w) x = d(rng);
        auto gb = reduced_groebner(a, WeightOrder{w});
        std::vector<IVec> vs;
        for (const MarkedBinomial& e : gb) vs.push_back(e.u.v);
        CHECK(BasisSet::from_vectors(vs) == gr);
    }
}

TEST_CASE("reduced basis generates: all Graver elements reduce to zero") {
    for (const IntMatrix& a : {IntMatrix{{7, 8, 9}}, lambda_omega(kT24, {1})}) {
        WeightOrder w{ones(a.cols())};
        auto gb = reduced_groebner(a, w);
        for (const KernelVector& g : graver(a))
            CHECK(bruteforce::reduces_to_zero(g.plus, g.minus, gb));
        // reducedness: no lead divides any monomial of another element
        for (const MarkedBinomial& e : gb)
            for (const MarkedBinomial& f : gb) {
                if (&e == &f) continue;
                CHECK(!leq(f.lead(), e.lead()));
                CHECK(!leq(f.lead(), e.trail()));
            }
    }
}

TEST_CASE("transport_weight on a simple matrix is the identity") {
    IntMatrix a{{7, 8, 9}};
    WeightOrder w{RVec{Rat(2), Rat(3), Rat(5)}};
    WeightOrder w2 = transport_weight(w, a, a);
    CHECK(w2.w == w.w);
}

TEST_CASE("transport_weight fixed point on the mixed pair example") {
    IntMatrix a{{1, 1, 0}, {0, 0, 1}};
    WeightOrder w{RVec{Rat(1), Rat(2), Rat(3)}};
    CHECK(transport_weight(w, a, a).w == w.w);
}

TEST_CASE("transport_weight rejects mismatched structures") {
    IntMatrix a = lambda_omega(kT24, {2, 4});
    IntMatrix b = lambda_omega(kT24, {2});
    WeightOrder w{ones(a.cols())};
    CHECK_THROWS_AS(transport_weight(w, a, b), Error);
}

TEST_CASE("mixed profiles count signs of the target cvec") {
    IntMatrix a = lambda_omega(kT24, {2, 4});
    BouquetDecomposition dec = bouquet_decomposition(a);
    WeightOrder w{ones(a.cols())};
    auto prof = mixed_profiles(dec, dec, w);
    REQUIRE(prof.size() == 4);
    CHECK(prof[0].r_plus == 1);
    CHECK(prof[0].r_minus == 1);  // mixed pair
    CHECK(prof[1].r_plus == 1);
    CHECK(prof[1].r_minus == 0);  // singleton non-mixed
}

TEST_CASE("transported weights satisfy w'.D2(u) = w.D1(u) on random kernel vectors") {
    IntMatrix a1 = lambda_omega(kT24, {2, 4});
    GLMSpec spec;
    spec.t = kT24;
    spec.c = {IVec{1, -1}, IVec{2, 3}, IVec{3, -1, -2}, IVec{1}};
    for (const IVec& c : spec.c) spec.lambda.push_back(solve_gcd_identity(c));
    IntMatrix a2 = generalized_lawrence(spec);

    BouquetDecomposition d1dec = bouquet_decomposition(a1);
    BouquetDecomposition d2dec = bouquet_decomposition(a2);
    DMap d1(a1, d1dec), d2(a2, d2dec);
    IntMatrix kerT = gale_transform(bouquet_matrix(a1, d1dec)).matrix;

    WeightOrder w = tie_free_weight(a1, graver(a1), 5);
    WeightOrder w2 = transport_weight(w, a1, a2);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> zd(-6, 6);
    for (int it = 0; it < 100; ++it) {
        IVec u(kerT.rows(), Int(0));
        for (size_t j = 0; j < kerT.cols(); ++j) {
            int z = zd(rng);
            for (size_t i = 0; i < kerT.rows(); ++i) u[i] += kerT(i, j) * z;
        }
        CHECK(dot(w2.w, d2.forward(u)) == dot(w.w, d1.forward(u)));
    }
}

TEST_CASE("transported reduced bases coincide with independently computed ones") {
    IntMatrix a1 = lambda_omega(kT24, {2, 4});
    GLMSpec spec;
    spec.t = kT24;
    spec.c = {IVec{1, -2}, IVec{3, 4}, IVec{2, -1}, IVec{1, 1, 1}};
    for (const IVec& c : spec.c) spec.lambda.push_back(solve_gcd_identity(c));
    IntMatrix a2 = generalized_lawrence(spec);

    DMap d1(a1, bouquet_decomposition(a1));
    DMap d2(a2, bouquet_decomposition(a2));
    for (unsigned seed : {1u, 2u, 3u}) {
        WeightOrder w = tie_free_weight(a1, graver(a1), seed);
        WeightOrder w2 = transport_weight(w, a1, a2);
        auto gb1 = reduced_groebner(a1, w);
        auto gb2 = reduced_groebner(a2, w2);
        CHECK(transport_basis(gb1, d1, d2) == gb2);
    }
}

TEST_CASE("random instances pass the independent reduced-basis checks") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(-4, 4), wd(0, 7);
    int done = 0;
    while (done < 5) {
        IntMatrix a(2, 4);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 4; ++j) a(i, j) = entry(rng);
        if (!grading_certificate(a)) continue;
        if (a.cols() == matrix_rank(a)) continue;
        BasisSet gr = graver(a);
        Int biggest = 0;
        for (const KernelVector& g : gr)
            for (const Int& x : g.v) biggest = std::max(biggest, abs_int(x));
        if (biggest > 10) continue;
        RVec w(4);
        for (Rat& x : w) x = wd(rng);
        auto gb = reduced_groebner(a, WeightOrder{w});
        CHECK(bruteforce::check_reduced_groebner(a, WeightOrder{w}, gb, biggest + 1));
        ++done;
    }
}
