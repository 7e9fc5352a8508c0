#include "helpers.hpp"

#include <gz/hessenberg.hpp>

#include <doctest.h>

using namespace gz;
using test::exact_mat;
using test::omega_example;
using test::poly_int;
using test::q;

TEST_CASE("is_hessenberg") {
    CHECK(is_hessenberg(omega_example()));
    CHECK_FALSE(is_hessenberg(Mat::identity(3, Mode::Exact)));
    CHECK(is_hessenberg(exact_mat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})));
    CHECK_FALSE(is_hessenberg(exact_mat({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}})));
}

TEST_CASE("hessenberg_from_spec") {
    ToleranceContext ctx;

    SUBCASE("reproduces the Hessenberg fibre point exactly") {
        Mat x = omega_example();
        CHECK(hessenberg_from_spec(phi(x), ctx) == x);
    }

    SUBCASE("nilfibre companion shape") {
        CHECK(hessenberg_from_spec(test::zero_spec(3), ctx) ==
              exact_mat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
    }

    SUBCASE("n = 1") {
        GZSpec c({poly_int({-5})});
        CHECK(hessenberg_from_spec(c, ctx) == exact_mat({{5}}));
    }

    SUBCASE("exact round trip on random fibre labels") {
        oracle::Rng rng(67);
        for (int t = 0; t < 15; ++t) {
            int n = rng.uniform(1, 5);
            std::vector<MonicPoly> levels;
            for (int i = 1; i <= n; ++i) {
                std::vector<Scalar> coeffs;
                for (int k = 0; k < i; ++k) coeffs.push_back(rng.exact_scalar(3));
                levels.emplace_back(Mode::Exact, std::move(coeffs));
            }
            GZSpec c(std::move(levels));
            Mat h = hessenberg_from_spec(c, ctx);
            CHECK(is_hessenberg(h));
            CHECK(phi(h) == c);
            CHECK(sreg_report(h, ctx).strongly_regular());
        }
    }

    SUBCASE("float round trip") {
        oracle::Rng rng(71);
        for (int t = 0; t < 20; ++t) {
            int n = rng.uniform(2, 6);
            std::vector<MonicPoly> levels;
            for (int i = 1; i <= n; ++i) {
                std::vector<Scalar> coeffs;
                for (int k = 0; k < i; ++k) coeffs.push_back(rng.float_scalar());
                levels.emplace_back(Mode::Float, std::move(coeffs));
            }
            GZSpec c(std::move(levels));
            Mat h = hessenberg_from_spec(c, ctx);
            GZSpec back = phi(h);
            for (int i = 1; i <= n; ++i)
                for (int k = 0; k < i; ++k)
                    CHECK(std::abs(back.level(i).coeff(k).to_complex() -
                                   c.level(i).coeff(k).to_complex()) <= 1e-8 * c.level(i).scale());
        }
    }

    SUBCASE("uniqueness spot check: upper perturbations move phi") {
        oracle::Rng rng(73);
        Mat x = omega_example();
        GZSpec c = phi(x);
        for (int t = 0; t < 5; ++t) {
            int r = rng.uniform(0, 2);
            int cidx = rng.uniform(r, 2); // upper triangle including diagonal
            Mat y = x;
            y.at(r, cidx) += q(1);
            CHECK(!(phi(y) == c));
        }
    }

    SUBCASE("level systems are exactly affine") {
        // doubling a unit-column perturbation doubles the coefficient delta
        Mat h = exact_mat({{2, 3}, {1, -1}});
        for (int k = 0; k < 3; ++k) {
            std::vector<Scalar> u0(3, q(0)), u1(3, q(0)), u2(3, q(0));
            u1[size_t(k)] = q(1);
            u2[size_t(k)] = q(2);
            Mat b0 = embed(h, 3), b1 = embed(h, 3), b2 = embed(h, 3);
            for (int r = 0; r < 3; ++r) {
                b0.at(r, 2) = u0[size_t(r)];
                b1.at(r, 2) = u1[size_t(r)];
                b2.at(r, 2) = u2[size_t(r)];
            }
            b0.at(2, 1) = q(1);
            b1.at(2, 1) = q(1);
            b2.at(2, 1) = q(1);
            MonicPoly p0 = charpoly(b0), p1 = charpoly(b1), p2 = charpoly(b2);
            for (int r = 0; r < 3; ++r) {
                Scalar d1 = p1.coeff(r) - p0.coeff(r);
                Scalar d2 = p2.coeff(r) - p0.coeff(r);
                CHECK(d2 == q(2) * d1);
            }
        }
    }
}
