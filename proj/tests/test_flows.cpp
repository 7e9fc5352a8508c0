#include "helpers.hpp"

#include <gz/flows.hpp>
#include <gz/hessenberg.hpp>

#include <doctest.h>

using namespace gz;
using test::exact_mat;
using test::omega_example;
using test::q;

namespace {

double mat_dist(const Mat& a, const Mat& b) {
    double d = 0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            d = std::max(d, std::abs(a.at(i, j).to_complex() - b.at(i, j).to_complex()));
    return d;
}

double phi_dist(const Mat& a, const Mat& b) {
    GZSpec ca = phi(a), cb = phi(b);
    double d = 0;
    for (int i = 1; i <= ca.n(); ++i)
        for (int k = 0; k < i; ++k)
            d = std::max(d, std::abs(ca.level(i).coeff(k).to_complex() -
                                     cb.level(i).coeff(k).to_complex()));
    return d;
}

} // namespace

TEST_CASE("vector_field") {
    Mat x = omega_example();
    CHECK(vector_field(x, 1, 1) == exact_mat({{0, 2, 16}, {-1, 0, 0}, {0, 0, 0}}));
    CHECK(vector_field(Mat(3, Mode::Exact), 2, 1) == Mat(3, Mode::Exact));
    CHECK_THROWS_AS((void)vector_field(x, 3, 1), Error); // i must stay below n
    CHECK_THROWS_AS((void)vector_field(x, 2, 3), Error);

    SUBCASE("j = 1 field couples only the first i rows and columns") {
        oracle::Rng rng(79);
        Mat m = rng.exact_mat(4);
        Mat vf = vector_field(m, 2, 1);
        CHECK(vf == commutator(embed(Mat::identity(2, Mode::Exact), 4), m));
        for (int r = 2; r < 4; ++r)
            for (int c = 2; c < 4; ++c) CHECK(vf.at(r, c) == q(0));
    }
}

TEST_CASE("flow basics") {
    ToleranceContext ctx;
    Mat xf = oracle::to_float(omega_example());

    SUBCASE("t = 0 fixes the point") {
        Mat y = flow(xf, {1, 1, Scalar::flt(0.0)}, ctx);
        CHECK(mat_dist(y, xf) < 1e-14);
    }

    SUBCASE("level-1 flow scales the first row and column") {
        double t = 0.37;
        Mat y = flow(xf, {1, 1, Scalar::flt(t)}, ctx);
        CHECK(std::abs(y.at(0, 1).to_complex() - 2.0 * std::exp(t)) < 1e-12);
        CHECK(std::abs(y.at(0, 2).to_complex() - 16.0 * std::exp(t)) < 1e-12);
        CHECK(std::abs(y.at(1, 0).to_complex() - std::exp(-t)) < 1e-12);
        CHECK(std::abs(y.at(1, 2).to_complex() - 4.0) < 1e-13);
        CHECK(std::abs(y.at(2, 1).to_complex() - 1.0) < 1e-13);
    }

    SUBCASE("group inverse") {
        Mat y = flow(flow(xf, {2, 2, Scalar::flt(0.4, 0.1)}, ctx),
                     {2, 2, Scalar::flt(-0.4, -0.1)}, ctx);
        CHECK(mat_dist(y, xf) < 1e-12);
    }

    SUBCASE("exact flows need nilpotent generators") {
        Mat x0 = hessenberg_from_spec(test::zero_spec(4), ctx);
        Mat y = flow(x0, {3, 2, q(5)}, ctx); // x_3 nilpotent, series terminates
        CHECK(phi(y) == phi(x0));
        CHECK(charpoly(y) == charpoly(x0));
        CHECK_THROWS_AS((void)flow(x0, {2, 1, q(1)}, ctx), Error); // identity generator
    }
}

TEST_CASE("flow words") {
    ToleranceContext ctx;
    oracle::Rng rng(83);

    SUBCASE("empty word is the identity") {
        Mat x = rng.float_mat(4);
        CHECK(flow_word(x, {}, ctx) == x);
    }

    SUBCASE("order independence and inverse pairs") {
        for (int t = 0; t < 8; ++t) {
            int n = rng.uniform(3, 5);
            Mat x = rng.float_mat(n);
            std::vector<FlowStep> word;
            for (int s = 0; s < 3; ++s) {
                int i = rng.uniform(1, n - 1);
                word.push_back({i, rng.uniform(1, i), rng.float_scalar(0.5)});
            }
            Mat a = flow_word(x, word, ctx);
            std::vector<FlowStep> perm{word[1], word[2], word[0]};
            Mat b = flow_word(x, perm, ctx);
            CHECK(mat_dist(a, b) <= 1e-8 * std::max(1.0, a.scale()));

            std::vector<FlowStep> cancel = word;
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                cancel.push_back({it->level, it->power, -it->time});
            CHECK(mat_dist(flow_word(x, cancel, ctx), x) <= 1e-8 * std::max(1.0, x.scale()));
        }
    }

    SUBCASE("phi and the top characteristic polynomial are conserved") {
        for (int t = 0; t < 8; ++t) {
            int n = rng.uniform(3, 5);
            Mat x = rng.float_mat(n);
            std::vector<FlowStep> word;
            for (int s = 0; s < 3; ++s) {
                int i = rng.uniform(1, n - 1);
                word.push_back({i, rng.uniform(1, i), rng.float_scalar(0.5)});
            }
            Mat y = flow_word(x, word, ctx);
            CHECK(phi_dist(x, y) <= 1e-8 * std::max(1.0, x.scale()));
        }
    }

    SUBCASE("derivative at t = 0 matches the vector field") {
        const double h = 1e-4;
        for (int t = 0; t < 6; ++t) {
            int n = rng.uniform(3, 5);
            Mat x = rng.float_mat(n);
            int i = rng.uniform(1, n - 1);
            int j = rng.uniform(1, i);
            Mat plus = flow(x, {i, j, Scalar::flt(h)}, ctx);
            Mat minus = flow(x, {i, j, Scalar::flt(-h)}, ctx);
            Mat fd = Scalar::flt(1.0 / (2 * h)) * (plus - minus);
            Mat vf = vector_field(x, i, j);
            CHECK(mat_dist(fd, vf) <= 1e-6 * std::max(1.0, x.scale()));
        }
    }

    SUBCASE("strong regularity is flow invariant") {
        ToleranceContext strict;
        Mat x = oracle::to_float(omega_example());
        SregReport before = sreg_report(x, strict);
        Mat y = flow_word(x,
                          {{1, 1, Scalar::flt(0.2)},
                           {2, 1, Scalar::flt(-0.1, 0.3)},
                           {2, 2, Scalar::flt(0.05)}},
                          strict);
        SregReport after = sreg_report(y, strict);
        CHECK(before.strongly_regular() == after.strongly_regular());
        CHECK(before.tangent_dim == after.tangent_dim);
    }
}
