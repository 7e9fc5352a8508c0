#include "helpers.hpp"

#include <doctest.h>

using namespace gz;
using test::exact_mat;
using test::poly_int;
using test::q;
using test::spectrum_int;

namespace {

SolutionPoint nil_point(int i, const std::vector<long>& z, const std::vector<long>& y, long w) {
    SolutionPoint p;
    p.level = i;
    SolutionBlock b;
    b.lambda = q(0);
    b.mult = i;
    for (long v : z) b.z.push_back(q(v));
    for (long v : y) b.y.push_back(q(v));
    p.blocks.push_back(std::move(b));
    p.w = q(w);
    return p;
}

SolutionPoint random_point(oracle::Rng& rng, int max_block = 5) {
    int blocks = rng.uniform(1, 2);
    auto roots = rng.distinct_exact_roots(blocks, 3);
    std::vector<SpectrumEntry> entries;
    for (auto& r : roots) entries.push_back({r, rng.uniform(1, max_block)});
    Spectrum s = Spectrum::make(entries);
    SolutionPoint p;
    p.level = s.degree();
    for (const auto& e : s.entries()) {
        SolutionBlock b;
        b.lambda = e.root;
        b.mult = e.mult;
        for (int k = 0; k < e.mult; ++k) {
            b.z.push_back(rng.exact_scalar(2));
            b.y.push_back(rng.exact_scalar(2));
        }
        p.blocks.push_back(std::move(b));
    }
    p.w = rng.exact_scalar(2);
    return p;
}

} // namespace

TEST_CASE("assemble") {
    CHECK(assemble(nil_point(2, {1, 0}, {0, 0}, 0)) ==
          exact_mat({{0, 1, 0}, {0, 0, 0}, {1, 0, 0}}));
    CHECK(assemble(nil_point(2, {0, 0}, {0, 0}, 0)) == Mat(3, Mode::Exact));

    SolutionPoint p;
    p.level = 1;
    p.blocks.push_back({q(1), 1, {q(1)}, {q(2)}});
    p.w = q(0);
    CHECK(assemble(p) == exact_mat({{1, 2}, {1, 0}}));

    SUBCASE("rejects malformed data") {
        SolutionPoint bad = nil_point(2, {1}, {0, 0}, 0);
        CHECK_THROWS_AS((void)assemble(bad), Error);
    }
}

TEST_CASE("xi_charpoly") {
    SUBCASE("nilpotent level 1: t^2 - w t - z1 y1") {
        oracle::Rng rng(89);
        for (int t = 0; t < 6; ++t) {
            Scalar z = rng.exact_scalar(), y = rng.exact_scalar(), w = rng.exact_scalar();
            SolutionPoint p;
            p.level = 1;
            p.blocks.push_back({q(0), 1, {z}, {y}});
            p.w = w;
            MonicPoly cp = xi_charpoly(p);
            CHECK(cp.coeff(1) == -w);
            CHECK(cp.coeff(0) == -(z * y));
        }
    }

    SUBCASE("zero borders give t^{i+1}") {
        for (int i = 1; i <= 4; ++i) {
            SolutionPoint p = nil_point(i, std::vector<long>(size_t(i), 0),
                                        std::vector<long>(size_t(i), 0), 0);
            CHECK(xi_charpoly(p) == MonicPoly::power_of_t(Mode::Exact, i + 1));
        }
    }

    SUBCASE("matches determinant oracle and assembled charpoly") {
        oracle::Rng rng(97);
        for (int t = 0; t < 40; ++t) {
            SolutionPoint p = random_point(rng, 4);
            MonicPoly closed = xi_charpoly(p);
            Mat m = assemble(p);
            CHECK(closed == charpoly(m));
            CHECK(closed == oracle::charpoly_cofactor(m));
        }
    }
}

TEST_CASE("xi_solve") {
    ToleranceContext ctx;

    SUBCASE("nilpotent lower and upper canonical points") {
        for (int i = 1; i <= 4; ++i) {
            Spectrum s = spectrum_int({{0, i}});
            MonicPoly target = MonicPoly::power_of_t(Mode::Exact, i + 1);
            BlockChoice lower{{{q(0), UL::Lower}}};
            SolutionPoint pl = xi_solve(s, target, lower, {}, ctx);
            CHECK(pl.blocks[0].z[0] == q(1));
            for (int k = 1; k < i; ++k) CHECK(pl.blocks[0].z[size_t(k)] == q(0));
            for (int k = 0; k < i; ++k) CHECK(pl.blocks[0].y[size_t(k)] == q(0));
            CHECK(pl.w == q(0));

            BlockChoice upper{{{q(0), UL::Upper}}};
            SolutionPoint pu = xi_solve(s, target, upper, {}, ctx);
            CHECK(pu.blocks[0].y[size_t(i - 1)] == q(1));
            for (int k = 0; k < i; ++k) CHECK(pu.blocks[0].z[size_t(k)] == q(0));
            CHECK(xi_charpoly(pu) == target);
        }
    }

    SUBCASE("non-common single root solved by hand") {
        SolutionPoint p = xi_solve(spectrum_int({{1, 1}}), poly_int({-2, -1}), {}, {}, ctx);
        CHECK(p.w == q(0));
        CHECK(p.blocks[0].z[0] == q(1));
        CHECK(p.blocks[0].y[0] == q(2));
        CHECK(assemble(p) == exact_mat({{1, 2}, {1, 0}}));
    }

    SUBCASE("solves arbitrary targets across block shapes") {
        oracle::Rng rng(101);
        for (int t = 0; t < 25; ++t) {
            int blocks = rng.uniform(1, 2);
            auto roots = rng.distinct_exact_roots(blocks + 2, 3);
            std::vector<SpectrumEntry> entries;
            for (int b = 0; b < blocks; ++b) entries.push_back({roots[size_t(b)], rng.uniform(1, 3)});
            Spectrum s = Spectrum::make(entries);
            const int i = s.degree();

            // target shares a random subset of the spectrum roots
            std::vector<SpectrumEntry> tentries;
            BlockChoice choice;
            for (const auto& e : s.entries()) {
                if (rng.uniform(0, 1) == 0) {
                    tentries.push_back({e.root, rng.uniform(1, 2)});
                    choice.entries.push_back({e.root, rng.uniform(0, 1) ? UL::Upper : UL::Lower});
                }
            }
            int filler = i + 1;
            for (const auto& e : tentries) filler -= e.mult;
            while (filler < 0) { // overshoot: rebuild with plain roots
                tentries.pop_back();
                choice.entries.pop_back();
                filler = i + 1;
                for (const auto& e : tentries) filler -= e.mult;
            }
            if (filler > 0) tentries.push_back({roots[size_t(blocks)], filler});
            MonicPoly target = poly_from_spectrum(Spectrum::make(tentries));

            SolutionPoint p = xi_solve(s, target, choice, {}, ctx);
            CHECK(xi_charpoly(p) == target);
            CHECK(charpoly(assemble(p)) == target);

            // eq:overlap / eq:disjoint consistency
            for (const auto& b : p.blocks) {
                Scalar prod = b.z[0] * b.y[size_t(b.mult - 1)];
                bool common = target.eval(b.lambda).structurally_zero();
                CHECK(prod.structurally_zero() == common);
            }
        }
    }

    SUBCASE("target multiplicity above one at a common root") {
        Spectrum s = spectrum_int({{0, 2}});
        MonicPoly target = poly_from_spectrum(spectrum_int({{0, 3}})); // t^3
        SolutionPoint p = xi_solve(s, target, {{{q(0), UL::Lower}}}, {}, ctx);
        CHECK(xi_charpoly(p) == target);

        MonicPoly target2 = poly_from_spectrum(spectrum_int({{0, 2}, {1, 1}}));
        SolutionPoint p2 = xi_solve(s, target2, {{{q(0), UL::Upper}}}, {}, ctx);
        CHECK(xi_charpoly(p2) == target2);
        CHECK(p2.blocks[0].z[0] == q(0));
    }

    SUBCASE("rejects bad choices and parameters") {
        Spectrum s = spectrum_int({{0, 2}});
        MonicPoly t3 = MonicPoly::power_of_t(Mode::Exact, 3);
        CHECK_THROWS_AS((void)xi_solve(s, t3, {}, {}, ctx), Error); // missing label
        CHECK_THROWS_AS((void)xi_solve(s, t3, {{{q(1), UL::Lower}}}, {}, ctx), Error);
        CHECK_THROWS_AS((void)xi_solve(s, poly_int({1, 1, 1}), {{{q(0), UL::Lower}}}, {}, ctx),
                        Error); // 0 is not a root of the target
        SolveParams bad;
        bad.per_block.push_back(std::vector<Scalar>{q(0), q(1)}); // z1 = 0 on Lower branch
        CHECK_THROWS_AS((void)xi_solve(s, t3, {{{q(0), UL::Lower}}}, bad, ctx), Error);
    }
}

TEST_CASE("zi_act") {
    ToleranceContext ctx;
    oracle::Rng rng(103);

    SUBCASE("identity acts trivially") {
        SolutionPoint p = random_point(rng, 3);
        ToeplitzElt id = ToeplitzElt::identity_for(p);
        SolutionPoint p2 = zi_act(id, p);
        CHECK(assemble(p2) == assemble(p));
    }

    SUBCASE("scalar block of size one rescales z and y inversely") {
        SolutionPoint p;
        p.level = 1;
        p.blocks.push_back({q(0), 1, {q(3)}, {q(5)}});
        p.w = q(0);
        ToeplitzElt k;
        k.blocks.push_back({q(2)});
        SolutionPoint p2 = zi_act(k, p);
        CHECK(p2.blocks[0].y[0] == q(10));
        CHECK(p2.blocks[0].z[0] == Scalar::exact(Rational(3, 2)));
        CHECK(p2.blocks[0].z[0] * p2.blocks[0].y[0] == q(15)); // zy invariant
    }

    SUBCASE("preserves the characteristic polynomial and invariants") {
        for (int t = 0; t < 15; ++t) {
            SolutionPoint p = random_point(rng, 4);
            ToeplitzElt k;
            for (const auto& b : p.blocks) {
                std::vector<Scalar> coeffs;
                coeffs.push_back(q(rng.uniform(1, 3))); // a_0 != 0
                for (int m = 1; m < b.mult; ++m) coeffs.push_back(rng.exact_scalar(2));
                k.blocks.push_back(std::move(coeffs));
            }
            SolutionPoint p2 = zi_act(k, p);
            CHECK(xi_charpoly(p2) == xi_charpoly(p));
            CHECK(stabilizer_pattern(p2, ctx).total_dim == stabilizer_pattern(p, ctx).total_dim);
            for (size_t b = 0; b < p.blocks.size(); ++b) {
                CHECK(p.blocks[b].z[0].structurally_zero() ==
                      p2.blocks[b].z[0].structurally_zero());
                CHECK(p.blocks[b].y[size_t(p.blocks[b].mult - 1)].structurally_zero() ==
                      p2.blocks[b].y[size_t(p2.blocks[b].mult - 1)].structurally_zero());
            }
        }
    }

    SUBCASE("rejects singular elements") {
        SolutionPoint p = nil_point(2, {1, 0}, {0, 0}, 0);
        ToeplitzElt k;
        k.blocks.push_back({q(0), q(1)});
        CHECK_THROWS_AS((void)zi_act(k, p), Error);
    }
}

TEST_CASE("stabilizer_pattern and is_free") {
    ToleranceContext ctx;

    SUBCASE("all borders zero: every block is full") {
        for (int i = 1; i <= 4; ++i) {
            SolutionPoint p = nil_point(i, std::vector<long>(size_t(i), 0),
                                        std::vector<long>(size_t(i), 0), 0);
            StabilizerPattern pat = stabilizer_pattern(p, ctx);
            CHECK(pat.total_dim == i);
            for (const auto& b : pat.blocks) CHECK(b.kind == StabilizerBlock::Kind::Full);
            CHECK_FALSE(is_free(p, ctx));
        }
    }

    SUBCASE("canonical lower and upper points are free") {
        for (int i = 1; i <= 4; ++i) {
            std::vector<long> e1(size_t(i), 0), zero(size_t(i), 0), elast(size_t(i), 0);
            e1[0] = 1;
            elast[size_t(i - 1)] = 1;
            CHECK(is_free(nil_point(i, e1, zero, 0), ctx));
            CHECK(is_free(nil_point(i, zero, elast, 0), ctx));
        }
    }

    SUBCASE("interior border entries leave a unipotent stabilizer") {
        // z1 = 0 = y_i but z2 != 0
        SolutionPoint p = nil_point(3, {0, 1, 0}, {0, 0, 0}, 0);
        StabilizerPattern pat = stabilizer_pattern(p, ctx);
        REQUIRE(pat.blocks.size() == 1);
        CHECK(pat.blocks[0].kind == StabilizerBlock::Kind::Unipotent);
        CHECK(pat.blocks[0].dim >= 1);
    }

    SUBCASE("free points assemble to regular matrices") {
        oracle::Rng rng(107);
        ToleranceContext tctx;
        int checked = 0;
        for (int t = 0; t < 40 && checked < 25; ++t) {
            SolutionPoint p = random_point(rng, 3);
            if (!is_free(p, tctx)) continue;
            ++checked;
            CHECK(is_regular(assemble(p), tctx));
        }
        CHECK(checked > 0);
    }
}
