#include <gz/solution.hpp>

#include <algorithm>
#include <cmath>

namespace gz {

Spectrum SolutionPoint::spectrum(const ToleranceContext& ctx) const {
    std::vector<SpectrumEntry> entries;
    entries.reserve(blocks.size());
    for (const auto& b : blocks) entries.push_back({b.lambda, b.mult});
    return Spectrum::make(std::move(entries), ctx);
}

double SolutionPoint::scale() const {
    double s = std::max(1.0, w.abs_approx());
    for (const auto& b : blocks) {
        s = std::max(s, b.lambda.abs_approx());
        for (const auto& v : b.z) s = std::max(s, v.abs_approx());
        for (const auto& v : b.y) s = std::max(s, v.abs_approx());
    }
    return s;
}

void SolutionPoint::validate() const {
    int total = 0;
    for (const auto& b : blocks) {
        if (b.mult <= 0 || int(b.z.size()) != b.mult || int(b.y.size()) != b.mult)
            throw Error(ErrorKind::Schema, "solution block data lengths must match the multiplicity");
        if (b.lambda.mode() != mode())
            throw Error(ErrorKind::MixedMode, "solution point has inhomogeneous modes");
        for (const auto& v : b.z)
            if (v.mode() != mode()) throw Error(ErrorKind::MixedMode, "solution point has inhomogeneous modes");
        for (const auto& v : b.y)
            if (v.mode() != mode()) throw Error(ErrorKind::MixedMode, "solution point has inhomogeneous modes");
        total += b.mult;
    }
    if (total != level)
        throw Error(ErrorKind::Schema, "block multiplicities must sum to the level");
    for (size_t k = 0; k + 1 < blocks.size(); ++k)
        if (!lex_greater(blocks[k].lambda, blocks[k + 1].lambda))
            throw Error(ErrorKind::Schema, "block eigenvalues must strictly decrease lexicographically");
}

ToeplitzElt ToeplitzElt::identity_for(const SolutionPoint& p) {
    ToeplitzElt e;
    for (const auto& b : p.blocks) {
        std::vector<Scalar> coeffs(size_t(b.mult), Scalar::zero(p.mode()));
        coeffs[0] = Scalar::one(p.mode());
        e.blocks.push_back(std::move(coeffs));
    }
    return e;
}

Mat assemble(const SolutionPoint& p) {
    p.validate();
    const int i = p.level;
    const Mode m = p.mode();
    Mat x(i + 1, m);
    int off = 0;
    for (const auto& b : p.blocks) {
        for (int k = 0; k < b.mult; ++k) {
            x.at(off + k, off + k) = b.lambda;
            if (k + 1 < b.mult) x.at(off + k, off + k + 1) = Scalar::one(m);
            x.at(off + k, i) = b.y[size_t(k)];
            x.at(i, off + k) = b.z[size_t(k)];
        }
        off += b.mult;
    }
    x.at(i, i) = p.w;
    return x;
}

std::vector<Scalar> block_convolution(const SolutionBlock& b) {
    const Mode m = b.lambda.mode();
    std::vector<Scalar> s(size_t(b.mult), Scalar::zero(m));
    for (int l = 0; l < b.mult; ++l)
        for (int j = 1; j + l <= b.mult; ++j)
            s[size_t(l)] += b.z[size_t(j - 1)] * b.y[size_t(j + l - 1)];
    return s;
}

MonicPoly xi_charpoly(const SolutionPoint& p) {
    p.validate();
    const Mode m = p.mode();
    const int deg = p.level + 1;

    // (t - w) * prod_k (t - lambda_k)^{n_k}
    dense::Poly full = dense::linear(-p.w, Scalar::one(m));
    for (const auto& b : p.blocks) {
        dense::Poly lin = dense::linear(-b.lambda, Scalar::one(m));
        for (int k = 0; k < b.mult; ++k) full = dense::mul(full, lin);
    }

    // minus, per block j, prod_{k != j}(t - lambda_k)^{n_k} *
    // sum_l s_{j,l} (t - lambda_j)^{n_j - 1 - l}
    for (size_t j = 0; j < p.blocks.size(); ++j) {
        const auto& bj = p.blocks[j];
        dense::Poly pref = dense::constant(Scalar::one(m));
        for (size_t k = 0; k < p.blocks.size(); ++k) {
            if (k == j) continue;
            dense::Poly lin = dense::linear(-p.blocks[k].lambda, Scalar::one(m));
            for (int q = 0; q < p.blocks[k].mult; ++q) pref = dense::mul(pref, lin);
        }
        std::vector<Scalar> s = block_convolution(bj);
        dense::Poly series = dense::make_zero();
        dense::Poly shift = dense::linear(-bj.lambda, Scalar::one(m));
        for (int l = 0; l < bj.mult; ++l)
            series = dense::add(series, dense::scale(s[size_t(l)], dense::pow(shift, bj.mult - 1 - l)));
        full = dense::sub(full, dense::mul(pref, series));
    }

    // leading term comes only from the first product, so full is monic
    if (int(full.size()) != deg + 1)
        throw Error(ErrorKind::Internal, "bordered characteristic polynomial has wrong degree");
    return dense::to_monic(full, m);
}

namespace {

bool is_target_root(const MonicPoly& target, const Scalar& lambda, const Spectrum* target_roots,
                    const ToleranceContext& ctx) {
    if (lambda.mode() == Mode::Exact) return target.eval(lambda).structurally_zero();
    // float: compare against the clustered root set
    for (const auto& e : target_roots->entries())
        if (std::abs(e.root.to_complex() - lambda.to_complex()) <=
            ctx.root_threshold(std::max(target_roots->scale(), lambda.abs_approx())))
            return true;
    return false;
}

} // namespace

SolutionPoint xi_solve(const Spectrum& spec_i, const MonicPoly& target, const BlockChoice& choice,
                       const SolveParams& params, const ToleranceContext& ctx) {
    const int i = spec_i.degree();
    const Mode m = spec_i.mode();
    if (target.degree() != i + 1)
        throw Error(ErrorKind::Index, "target degree must be level + 1");
    if (target.mode() != m)
        throw Error(ErrorKind::MixedMode, "spectrum/target mode mismatch");

    std::optional<Spectrum> target_roots;
    if (m == Mode::Float) target_roots = spectrum_from_poly(target, ctx);

    const int r = spec_i.block_count();
    std::vector<bool> common(size_t(r), false);
    for (int k = 0; k < r; ++k)
        common[size_t(k)] = is_target_root(target, spec_i.entry(k).root, m == Mode::Float ? &*target_roots : nullptr, ctx);

    // the choice must label exactly the common roots
    std::vector<std::optional<UL>> labels;
    labels.resize(size_t(r));
    {
        std::vector<bool> used(choice.entries.size(), false);
        for (int k = 0; k < r; ++k) {
            if (!common[size_t(k)]) continue;
            bool found = false;
            for (size_t e = 0; e < choice.entries.size(); ++e) {
                if (used[e]) continue;
                if (tol_eq(choice.entries[e].first, spec_i.entry(k).root, ctx, spec_i.scale())) {
                    labels[size_t(k)] = choice.entries[e].second;
                    used[e] = true;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw Error(ErrorKind::Schema, "choice missing a label for a common root");
        }
        for (size_t e = 0; e < used.size(); ++e)
            if (!used[e])
                throw Error(ErrorKind::Schema, "choice labels a root that is not common");
    }

    if (!params.per_block.empty() && int(params.per_block.size()) != r)
        throw Error(ErrorKind::Schema, "solver parameter list must have one entry per block");

    SolutionPoint p;
    p.level = i;
    p.w = target.sum_of_roots();

    for (int k = 0; k < r; ++k) {
        const auto& ent = spec_i.entry(k);
        const int nk = ent.mult;
        p.w -= Scalar::integer(nk, m) * ent.root;

        // Taylor data of the target at lambda_k
        std::vector<Scalar> t_hat = taylor_at(target, ent.root, nk - 1);

        // prefactor prod_{m != k} (t - lambda_m)^{n_m} expanded in
        // u = t - lambda_k, truncated at order nk
        dense::Poly pref = dense::constant(Scalar::one(m));
        for (int q = 0; q < r; ++q) {
            if (q == k) continue;
            dense::Poly lin = dense::linear(ent.root - spec_i.entry(q).root, Scalar::one(m));
            for (int e = 0; e < spec_i.entry(q).mult; ++e) pref = dense::mul_mod(pref, lin, nk);
        }

        // S(u) = -T(u) / pref(u) mod u^nk; s_l = coefficient of u^{nk-1-l}
        dense::Poly series = dense::mul_mod(t_hat, dense::inv_mod(pref, nk), nk);
        std::vector<Scalar> s(size_t(nk), Scalar::zero(m));
        for (int l = 0; l < nk; ++l) {
            Scalar c = size_t(nk - 1 - l) < series.size() ? series[size_t(nk - 1 - l)] : Scalar::zero(m);
            s[size_t(l)] = -c;
        }

        SolutionBlock blk;
        blk.lambda = ent.root;
        blk.mult = nk;

        UL branch = labels[size_t(k)].value_or(UL::Lower); // non-common defaults to the z-parameterization
        std::vector<Scalar> free_vec;
        if (!params.per_block.empty() && params.per_block[size_t(k)]) {
            free_vec = *params.per_block[size_t(k)];
            if (int(free_vec.size()) != nk)
                throw Error(ErrorKind::Schema, "solver parameter vector has wrong length");
        } else {
            free_vec.assign(size_t(nk), Scalar::zero(m));
            free_vec[branch == UL::Lower ? 0 : size_t(nk - 1)] = Scalar::one(m);
        }

        if (branch == UL::Lower) {
            if (free_vec[0].structurally_zero())
                throw Error(ErrorKind::Schema, "Lower branch requires z_1 != 0");
            blk.z = free_vec;
            // back-substitute Toeplitz(z) y = s from the last row up
            blk.y.assign(size_t(nk), Scalar::zero(m));
            for (int a = nk; a >= 1; --a) {
                Scalar acc = s[size_t(a - 1)];
                for (int b = a + 1; b <= nk; ++b) acc -= blk.z[size_t(b - a)] * blk.y[size_t(b - 1)];
                blk.y[size_t(a - 1)] = acc / blk.z[0];
            }
        } else {
            if (free_vec[size_t(nk - 1)].structurally_zero())
                throw Error(ErrorKind::Schema, "Upper branch requires y_{n_k} != 0");
            blk.y = free_vec;
            // dual triangular system: z_m determined by row nk - m
            blk.z.assign(size_t(nk), Scalar::zero(m));
            for (int mm = 1; mm <= nk; ++mm) {
                Scalar acc = s[size_t(nk - mm)];
                for (int j = 1; j < mm; ++j) acc -= blk.z[size_t(j - 1)] * blk.y[size_t(j + nk - mm - 1)];
                blk.z[size_t(mm - 1)] = acc / blk.y[size_t(nk - 1)];
            }
        }
        p.blocks.push_back(std::move(blk));
    }

    p.validate();
    return p;
}

namespace {

// y' = T y for the upper-triangular Toeplitz matrix with diagonal
// coefficients a_0, a_1, ...
std::vector<Scalar> toeplitz_apply(const std::vector<Scalar>& a, const std::vector<Scalar>& y) {
    const int n = int(y.size());
    const Mode m = y.empty() ? Mode::Exact : y[0].mode();
    std::vector<Scalar> out(size_t(n), Scalar::zero(m));
    for (int r = 1; r <= n; ++r)
        for (int q = 0; r + q <= n; ++q) out[size_t(r - 1)] += a[size_t(q)] * y[size_t(r + q - 1)];
    return out;
}

// z' = z T for the same matrix acting on row vectors.
std::vector<Scalar> toeplitz_row_apply(const std::vector<Scalar>& a, const std::vector<Scalar>& z) {
    const int n = int(z.size());
    const Mode m = z.empty() ? Mode::Exact : z[0].mode();
    std::vector<Scalar> out(size_t(n), Scalar::zero(m));
    for (int c = 1; c <= n; ++c)
        for (int q = 0; q < c; ++q) out[size_t(c - 1)] += a[size_t(q)] * z[size_t(c - q - 1)];
    return out;
}

} // namespace

SolutionPoint zi_act(const ToeplitzElt& k, const SolutionPoint& p) {
    p.validate();
    if (k.blocks.size() != p.blocks.size())
        throw Error(ErrorKind::Schema, "Toeplitz element block structure mismatch");
    SolutionPoint out = p;
    for (size_t b = 0; b < p.blocks.size(); ++b) {
        const auto& a = k.blocks[b];
        if (int(a.size()) != p.blocks[b].mult)
            throw Error(ErrorKind::Schema, "Toeplitz element block structure mismatch");
        if (a[0].structurally_zero())
            throw Error(ErrorKind::Singular, "Toeplitz element must have a_0 != 0");
        dense::Poly inv = dense::inv_mod(a, p.blocks[b].mult);
        out.blocks[b].y = toeplitz_apply(a, p.blocks[b].y);
        out.blocks[b].z = toeplitz_row_apply(inv, p.blocks[b].z);
    }
    return out;
}

StabilizerPattern stabilizer_pattern(const SolutionPoint& p, const ToleranceContext& ctx) {
    p.validate();
    const Mode m = p.mode();
    const double sc = p.scale();
    StabilizerPattern pat;
    for (const auto& b : p.blocks) {
        const int nk = b.mult;
        bool z_zero = std::all_of(b.z.begin(), b.z.end(),
                                  [&](const Scalar& v) { return tol_zero(v, ctx, sc); });
        bool y_zero = std::all_of(b.y.begin(), b.y.end(),
                                  [&](const Scalar& v) { return tol_zero(v, ctx, sc); });
        StabilizerBlock sb;
        if (z_zero && y_zero) {
            sb.kind = StabilizerBlock::Kind::Full;
            sb.dim = nk;
        } else {
            // fixing equations (T - I) y = 0 and z (T - I) = 0, linear in
            // the Toeplitz coefficients b_0..b_{nk-1} of T - I
            RectMat sys(2 * nk, nk, m);
            for (int r = 1; r <= nk; ++r)
                for (int q = 0; r + q <= nk; ++q) sys.at(r - 1, q) += b.y[size_t(r + q - 1)];
            for (int c = 1; c <= nk; ++c)
                for (int q = 0; q < c; ++q) sys.at(nk + c - 1, q) += b.z[size_t(c - q - 1)];
            auto null = nullspace(sys, ctx);
            sb.dim = int(null.size());
            sb.kind = sb.dim == 0 ? StabilizerBlock::Kind::Trivial : StabilizerBlock::Kind::Unipotent;
            // a_0 = 1 is forced once a border entry is nonzero
            for (const auto& v : null)
                if (!tol_zero(v[0], ctx, 1.0))
                    throw Error(ErrorKind::Diagnostic,
                                "stabilizer solution with free a_0 contradicts a nonzero border");
        }
        pat.total_dim += sb.dim;
        pat.blocks.push_back(sb);
    }
    return pat;
}

bool is_free(const SolutionPoint& p, const ToleranceContext& ctx) {
    return stabilizer_pattern(p, ctx).total_dim == 0;
}

} // namespace gz
