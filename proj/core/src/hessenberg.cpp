#include <gz/hessenberg.hpp>

namespace gz {

bool is_hessenberg(const Mat& x, const ToleranceContext& ctx) {
    const int n = x.size();
    double sc = x.scale();
    Scalar one = Scalar::one(x.mode());
    for (int r = 1; r < n; ++r) {
        if (!tol_eq(x.at(r, r - 1), one, ctx, sc)) return false;
        for (int c = 0; c < r - 1; ++c)
            if (!tol_zero(x.at(r, c), ctx, sc)) return false;
    }
    return true;
}

namespace {

// Bordered candidate: known Hessenberg block h of size i, unknown column
// u appended, unit subdiagonal entry below the block.
Mat bordered(const Mat& h, const std::vector<Scalar>& u) {
    const int i = h.size();
    Mat b = embed(h, i + 1);
    for (int r = 0; r <= i; ++r) b.at(r, i) = u[size_t(r)];
    if (i >= 1) b.at(i, i - 1) = Scalar::one(h.mode());
    return b;
}

} // namespace

Mat hessenberg_from_spec(const GZSpec& c, const ToleranceContext& ctx) {
    const int n = c.n();
    const Mode mode = c.mode();

    // level 1 is forced by p_{c_1}(t) = t - x_{11}
    Mat h(1, mode);
    h.at(0, 0) = -c.level(1).coeff(0);

    for (int i = 1; i < n; ++i) {
        // det(tI - B(u)) is affine in the last column u; probe the
        // characteristic polynomial at u = 0 and at the unit columns.
        std::vector<Scalar> zero_col(size_t(i) + 1, Scalar::zero(mode));
        MonicPoly base = charpoly(bordered(h, zero_col));

        RectMat sys(i + 1, i + 1, mode);
        for (int k = 0; k <= i; ++k) {
            std::vector<Scalar> u = zero_col;
            u[size_t(k)] = Scalar::one(mode);
            MonicPoly probe = charpoly(bordered(h, u));
            for (int r = 0; r <= i; ++r) sys.at(r, k) = probe.coeff(r) - base.coeff(r);
        }

        const MonicPoly& target = c.level(i + 1);
        std::vector<Scalar> rhs(size_t(i) + 1, Scalar::zero(mode));
        for (int r = 0; r <= i; ++r) rhs[size_t(r)] = target.coeff(r) - base.coeff(r);

        std::vector<Scalar> u;
        try {
            u = solve_square(sys, rhs, ctx);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Singular)
                throw Error(ErrorKind::Internal,
                            "Hessenberg level system singular at level " + std::to_string(i + 1) +
                                " (float breakdown or internal bug)");
            throw;
        }
        h = bordered(h, u);
    }
    return h;
}

} // namespace gz
