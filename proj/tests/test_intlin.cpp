#include <doctest.h>

#include <random>

#include "toric/bruteforce.hpp"
#include "toric/intlin.hpp"

using namespace toric;

namespace {

IntMatrix random_matrix(std::mt19937& rng, size_t rows, size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("gale transform of the identity is empty") {
    GaleTransform g = gale_transform(IntMatrix::identity(3));
    CHECK(g.matrix.rows() == 3);
    CHECK(g.matrix.cols() == 0);
}

TEST_CASE("gale transform of the 2x4 matrix spans the reference lattice") {
    IntMatrix t{{12, 9, 8, 0}, {0, 3, 4, 12}};
    GaleTransform g = gale_transform(t);
    REQUIRE(g.matrix.cols() == 2);
    // lattice equality with a reference basis, both inclusions
    IntMatrix paper(4, 2);
    paper.set_col(0, IVec{2, 0, -3, 1});
    paper.set_col(1, IVec{3, -4, 0, 1});
    for (size_t j = 0; j < 2; ++j) {
        CHECK(lattice_contains(g.matrix, paper.col(j)));
        CHECK(lattice_contains(paper, g.matrix.col(j)));
    }
}

TEST_CASE("gale transform of (7 8 9): membership, rank, saturation") {
    IntMatrix t{{7, 8, 9}};
    GaleTransform g = gale_transform(t);
    REQUIRE(g.matrix.cols() == 2);
    CHECK(lattice_contains(g.matrix, IVec{1, -2, 1}));
    CHECK(lattice_contains(g.matrix, IVec{4, 1, -4}));
    CHECK(matrix_rank(g.matrix) == 2);
    // saturation: gcd of all maximal minors is 1
    CHECK(bruteforce::maximal_minor_gcd(g.matrix) == 1);
}

TEST_CASE("gale columns annihilate and capture random kernel vectors") {
    std::mt19937 rng(2024);
    size_t tested = 0;
    while (tested < 8) {
        IntMatrix a = random_matrix(rng, 2, 4, -4, 4);
        GaleTransform g = gale_transform(a);
        for (size_t j = 0; j < g.matrix.cols(); ++j)
            CHECK(is_zero(a.apply(g.matrix.col(j))));
        if (g.matrix.cols() == 0) continue;
        std::uniform_int_distribution<int> c(-6, 6);
        for (int k = 0; k < 100; ++k) {
            IVec z(g.matrix.cols());
            for (auto& zi : z) zi = c(rng);
            IVec v(a.cols(), Int(0));
            for (size_t i = 0; i < a.cols(); ++i)
                for (size_t j = 0; j < g.matrix.cols(); ++j) v[i] += g.matrix(i, j) * z[j];
            CHECK(is_zero(a.apply(v)));
            CHECK(lattice_contains(g.matrix, v));
        }
        CHECK(bruteforce::maximal_minor_gcd(g.matrix) == 1);
        ++tested;
    }
}

TEST_CASE("kernel vectors found by rational solving land in the Gale lattice") {
    // kernel of (7 8 9) written down independently and cleared of denominators
    IntMatrix a{{7, 8, 9}};
    IntMatrix g = gale_transform(a).matrix;
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int k = 0; k < 100; ++k) {
        // v = (x, y, z) with 7x + 8y + 9z = 0: pick x, y rational, solve z
        Rat x(d(rng)), y(d(rng), 2);
        Rat z = (Rat(-7) * x - Rat(8) * y) / 9;
        Int den = x.get_den() * y.get_den() * z.get_den();
        IVec v{Int(x * Rat(den)), Int(y * Rat(den)), Int(z * Rat(den))};
        if (is_zero(v)) continue;
        REQUIRE(is_zero(a.apply(v)));
        CHECK(lattice_contains(g, v));
    }
}

TEST_CASE("grading certificate examples") {
    SUBCASE("(7 8 9) has a certificate") {
        auto c = grading_certificate(IntMatrix{{7, 8, 9}});
        REQUIRE(c.has_value());
        CHECK(certificate_valid(IntMatrix{{7, 8, 9}}, *c));
    }
    SUBCASE("2x4 matrix is positively graded, y=(1,1) works") {
        IntMatrix t{{12, 9, 8, 0}, {0, 3, 4, 12}};
        auto c = grading_certificate(t);
        REQUIRE(c.has_value());
        CHECK(certificate_valid(t, *c));
        GradingCertificate ones{RVec{Rat(1), Rat(1)}};
        CHECK(certificate_valid(t, ones));  // y.A = (12,12,12,12)
    }
    SUBCASE("[[1,-1]] has no certificate") {
        CHECK(!grading_certificate(IntMatrix{{1, -1}}).has_value());
    }
}

TEST_CASE("grading certificate exists iff fiber of zero is trivial") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        IntMatrix a = random_matrix(rng, 2, 4, -3, 3);
        auto c = grading_certificate(a);
        if (c) {
            auto fiber = fiber_enumerate(a, *c, IVec(a.rows(), Int(0)));
            REQUIRE(fiber.size() == 1);
            CHECK(is_zero(fiber[0]));
        } else {
            // no certificate: a nonzero nonnegative kernel direction must
            // exist; find one exactly with Fourier-Motzkin
            IntMatrix g = gale_transform(a).matrix;
            IneqSystem sys;
            LinIneq total{IVec(g.cols(), Int(0)), Int(1)};
            for (size_t i = 0; i < g.rows(); ++i) {
                sys.push_back(LinIneq{g.row(i), Int(0)});
                total.coeffs = add(total.coeffs, g.row(i));
            }
            sys.push_back(total);
            CHECK(fm_solve(sys, g.cols()).has_value());
        }
    }
}

TEST_CASE("fiber enumeration examples for (7 8 9)") {
    IntMatrix a{{7, 8, 9}};
    GradingCertificate y = *grading_certificate(a);
    SUBCASE("b=24") {
        auto f = fiber_enumerate(a, y, IVec{24});
        REQUIRE(f.size() == 2);
        CHECK(f[0] == IVec{0, 3, 0});
        CHECK(f[1] == IVec{1, 1, 1});
    }
    SUBCASE("b=0") {
        auto f = fiber_enumerate(a, y, IVec{0});
        REQUIRE(f.size() == 1);
        CHECK(is_zero(f[0]));
    }
    SUBCASE("b=15") {
        auto f = fiber_enumerate(a, y, IVec{15});
        REQUIRE(f.size() == 1);
        CHECK(f[0] == IVec{1, 1, 0});
    }
    SUBCASE("invalid certificate is rejected") {
        GradingCertificate bad{RVec{Rat(-1)}};
        CHECK_THROWS_AS(fiber_enumerate(a, bad, IVec{24}), Error);
    }
}

TEST_CASE("fiber enumeration agrees with the coordinate-box oracle") {
    std::mt19937 rng(11);
    int done = 0;
    while (done < 12) {
        IntMatrix a = random_matrix(rng, 2, 4, -3, 3);
        auto c = grading_certificate(a);
        if (!c) continue;
        std::uniform_int_distribution<int> xd(0, 3);
        IVec x(a.cols());
        for (auto& xi : x) xi = xd(rng);
        IVec b = a.apply(x);
        auto fast = fiber_enumerate(a, *c, b);
        auto slow = bruteforce::fiber_box_oracle(a, *c, b);
        CHECK(fast == slow);
        for (const IVec& m : fast) CHECK(a.apply(m) == b);
        ++done;
    }
}

TEST_CASE("primitive part") {
    CHECK(primitive_part(IVec{2, -4, 2}) == IVec{1, -2, 1});
    CHECK(primitive_part(IVec{3, 5}) == IVec{3, 5});
    CHECK(primitive_part(IVec{-6, 0, -9}) == IVec{-2, 0, -3});
    CHECK_THROWS_AS(primitive_part(IVec{0, 0}), Error);
}

TEST_CASE("smith normal form divisors and transforms") {
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        IntMatrix a = random_matrix(rng, 3, 4, -5, 5);
        SmithNF s = smith_normal_form(a);
        CHECK(s.u.multiply(a).multiply(s.v) == s.s);
        for (size_t i = 0; i + 1 < s.divisors.size(); ++i) {
            CHECK(s.divisors[i] > 0);
            CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
        }
        CHECK(abs_int(bruteforce::maximal_minor_gcd(s.u)) == 1);
        CHECK(abs_int(bruteforce::maximal_minor_gcd(s.v)) == 1);
    }
}

TEST_CASE("row HNF is reduced with positive pivots") {
    IntMatrix a{{2, 0, -3, 1}, {3, -4, 0, 1}};
    RowHNF h = row_hnf(a);
    CHECK(h.rank == 2);
    CHECK(h.u.multiply(a) == h.h);
    for (size_t r = 0; r < h.rank; ++r) {
        const Int& p = h.h(r, h.pivot_cols[r]);
        CHECK(p > 0);
        for (size_t i = 0; i < r; ++i) {
            CHECK(h.h(i, h.pivot_cols[r]) >= 0);
            CHECK(h.h(i, h.pivot_cols[r]) < p);
        }
    }
}

TEST_CASE("solve_integer finds particular solutions exactly") {
    IntMatrix a{{7, 8, 9}};
    auto x = solve_integer(a, IVec{24});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == IVec{24});
    IntMatrix b{{2, 4}};
    CHECK(!solve_integer(b, IVec{3}).has_value());
}
