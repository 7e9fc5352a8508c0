#include "helpers.hpp"

#include <doctest.h>

using namespace gz;
using test::exact_mat;
using test::omega_example;
using test::poly_int;
using test::q;
using test::spectrum_int;

TEST_CASE("cutoff and embed") {
    Mat x = omega_example();
    CHECK(cutoff(x, 1) == exact_mat({{1}}));
    CHECK(cutoff(x, 2) == exact_mat({{1, 2}, {1, 0}}));
    CHECK(cutoff(x, 3) == x);
    CHECK_THROWS_AS((void)cutoff(x, 4), Error);
    CHECK_THROWS_AS((void)cutoff(x, 0), Error);

    CHECK(embed(exact_mat({{1}}), 2) == exact_mat({{1, 0}, {0, 0}}));
    CHECK(embed(Mat::identity(2, Mode::Exact), 3) == exact_mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    Mat y = exact_mat({{3, 1}, {2, 5}});
    CHECK(cutoff(embed(y, 4), 2) == y);
    CHECK_THROWS_AS((void)embed(y, 1), Error);
}

TEST_CASE("charpoly") {
    CHECK(charpoly(Mat(3, Mode::Exact)) == poly_int({0, 0, 0}));
    CHECK(charpoly(omega_example()) == poly_int({-18, -9, 2}));
    CHECK(charpoly(exact_mat({{1, 2}, {1, 0}})) == poly_int({-2, -1}));

    SUBCASE("agrees with the cofactor oracle") {
        oracle::Rng rng(17);
        for (int t = 0; t < 20; ++t) {
            Mat m = rng.exact_mat(rng.uniform(1, 5));
            CHECK(charpoly(m) == oracle::charpoly_cofactor(m));
        }
    }

    SUBCASE("conjugation invariant") {
        oracle::Rng rng(19);
        for (int t = 0; t < 10; ++t) {
            int n = rng.uniform(2, 4);
            Mat m = rng.exact_mat(n);
            Mat g = rng.exact_invertible(n);
            CHECK(charpoly(g * m * inverse(g)) == charpoly(m));
        }
    }

    SUBCASE("float mode within tolerance") {
        oracle::Rng rng(23);
        for (int t = 0; t < 10; ++t) {
            Mat m = rng.float_mat(rng.uniform(2, 5));
            MonicPoly a = charpoly(m);
            MonicPoly b = oracle::charpoly_cofactor(m);
            for (int k = 0; k < a.degree(); ++k)
                CHECK(std::abs(a.coeff(k).to_complex() - b.coeff(k).to_complex()) <= 1e-9 * a.scale());
        }
    }
}

TEST_CASE("centralizer and regularity") {
    CHECK(centralizer_basis(exact_mat({{1, 0}, {0, 2}})).size() == 2);
    Mat j3 = exact_mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    auto cb = centralizer_basis(j3);
    CHECK(cb.size() == 3);
    CHECK(centralizer_basis(Mat(2, Mode::Exact)).size() == 4);

    CHECK(is_regular(j3));
    CHECK_FALSE(is_regular(Mat(2, Mode::Exact)));
    CHECK(is_regular(omega_example()));

    SUBCASE("for regular M the powers span the centralizer") {
        oracle::Rng rng(29);
        for (int t = 0; t < 8; ++t) {
            int n = rng.uniform(2, 4);
            Mat m = rng.exact_mat(n);
            if (!is_regular(m)) continue;
            auto basis = centralizer_basis(m);
            REQUIRE(int(basis.size()) == n);
            // stack basis and powers; the rank must stay n
            RectMat stacked(2 * n, n * n, Mode::Exact);
            Mat p = Mat::identity(n, Mode::Exact);
            for (int k = 0; k < n; ++k) {
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        stacked.at(k, a * n + b) = basis[size_t(k)].at(a, b);
                        stacked.at(n + k, a * n + b) = p.at(a, b);
                    }
                p = p * m;
            }
            CHECK(rank(stacked, {}) == n);
            CHECK(oracle::rank_full_pivot(stacked, {}) == n);
        }
    }
}

TEST_CASE("jordanize_regular") {
    ToleranceContext ctx;

    SUBCASE("distinct eigenvalues") {
        Mat m = exact_mat({{1, 2}, {1, 0}});
        JordanFrame f = jordanize_regular(m, spectrum_int({{2, 1}, {-1, 1}}), ctx);
        CHECK(f.jordan == exact_mat({{2, 0}, {0, -1}}));
        CHECK(f.g * m * inverse(f.g) == f.jordan);
    }

    SUBCASE("already in Jordan form") {
        Mat m = exact_mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
        JordanFrame f = jordanize_regular(m, spectrum_int({{0, 3}}), ctx);
        CHECK(f.g * m * inverse(f.g) == m);
    }

    SUBCASE("companion matrix of t^3") {
        Mat m = exact_mat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
        JordanFrame f = jordanize_regular(m, spectrum_int({{0, 3}}), ctx);
        CHECK(f.jordan == exact_mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
        CHECK(f.g * m * inverse(f.g) == f.jordan);
    }

    SUBCASE("mixed block sizes, decreasing eigenvalue order") {
        Spectrum s = spectrum_int({{2, 2}, {-1, 1}});
        Mat j = jordan_matrix(s);
        oracle::Rng rng(31);
        Mat g = rng.exact_invertible(3);
        Mat m = g * j * inverse(g);
        JordanFrame f = jordanize_regular(m, s, ctx);
        CHECK(f.jordan == j);
        CHECK(f.g * m * inverse(f.g) == j);
    }

    SUBCASE("float mode") {
        oracle::Rng rng(37);
        for (int t = 0; t < 6; ++t) {
            int n = rng.uniform(2, 4);
            Mat m = rng.float_mat(n);
            Spectrum s = spectrum_from_poly(charpoly(m), ctx);
            if (!s.squarefree()) continue; // random floats are simple
            JordanFrame f = jordanize_regular(m, s, ctx);
            CHECK(mat_tol_eq(f.g * m * inverse(f.g), f.jordan,
                             ToleranceContext{.eps_eq = 1e-7}));
        }
    }

    SUBCASE("rejects irregular and mismatched input") {
        CHECK_THROWS_AS((void)jordanize_regular(Mat(2, Mode::Exact), spectrum_int({{0, 2}}), ctx),
                        Error);
        Mat m = exact_mat({{1, 2}, {1, 0}});
        CHECK_THROWS_AS((void)jordanize_regular(m, spectrum_int({{3, 1}, {1, 1}}), ctx), Error);
    }
}

TEST_CASE("mat_exp") {
    CHECK(mat_exp(Mat(3, Mode::Exact)) == Mat::identity(3, Mode::Exact));
    CHECK(mat_exp(exact_mat({{0, 1}, {0, 0}})) == exact_mat({{1, 1}, {0, 1}}));
    CHECK_THROWS_AS((void)mat_exp(Mat::identity(2, Mode::Exact)), Error);

    Mat d(2, Mode::Float);
    d.at(0, 0) = Scalar::flt(0.3);
    d.at(1, 1) = Scalar::flt(-1.2);
    Mat e = mat_exp(d);
    CHECK(std::abs(e.at(0, 0).to_complex() - std::exp(0.3)) < 1e-12);
    CHECK(std::abs(e.at(1, 1).to_complex() - std::exp(-1.2)) < 1e-12);
    CHECK(std::abs(e.at(0, 1).to_complex()) < 1e-14);

    SUBCASE("exp(M) exp(-M) = I") {
        oracle::Rng rng(41);
        for (int t = 0; t < 8; ++t) {
            Mat m = rng.float_mat(rng.uniform(2, 5), 2.0);
            Mat prod = mat_exp(m) * mat_exp(-m);
            CHECK(mat_tol_eq(prod, Mat::identity(m.size(), Mode::Float),
                             ToleranceContext{.eps_eq = 1e-9}));
        }
    }
}

TEST_CASE("nullspace determinism and rank") {
    // free-variable basis ordered by free column
    RectMat m(2, 3, Mode::Exact);
    m.at(0, 0) = q(1);
    m.at(0, 1) = q(2);
    m.at(0, 2) = q(3);
    auto ns = nullspace(m, {});
    REQUIRE(ns.size() == 2);
    CHECK(ns[0][1] == q(1)); // first free column is 1
    CHECK(ns[1][2] == q(1));
    CHECK(rank(m, {}) == 1);
    CHECK(oracle::rank_full_pivot(m, {}) == 1);
}
