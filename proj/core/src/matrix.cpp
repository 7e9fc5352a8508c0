#include <gz/matrix.hpp>

#include <algorithm>
#include <cmath>

namespace gz {

Mat Mat::identity(int n, Mode m) {
    Mat r(n, m);
    for (int i = 0; i < n; ++i) r.at(i, i) = Scalar::one(m);
    return r;
}

Mat Mat::from_rows(Mode m, const std::vector<std::vector<Scalar>>& rows) {
    int n = int(rows.size());
    Mat r(n, m);
    for (int i = 0; i < n; ++i) {
        if (int(rows[size_t(i)].size()) != n)
            throw Error(ErrorKind::Index, "matrix rows must form a square array");
        for (int j = 0; j < n; ++j) {
            const Scalar& s = rows[size_t(i)][size_t(j)];
            if (s.mode() != m)
                throw Error(ErrorKind::MixedMode, "matrix entries have inhomogeneous modes");
            r.at(i, j) = s;
        }
    }
    return r;
}

double Mat::scale() const {
    double s = 1.0;
    for (const auto& x : a_) s = std::max(s, x.abs_approx());
    return s;
}

namespace {

Mode require_same(const Mat& a, const Mat& b) {
    if (a.mode() != b.mode())
        throw Error(ErrorKind::MixedMode, "matrix operands have different modes");
    if (a.size() != b.size())
        throw Error(ErrorKind::Index, "matrix operands have different sizes");
    return a.mode();
}

} // namespace

Mat operator+(const Mat& a, const Mat& b) {
    require_same(a, b);
    Mat r = a;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) r.at(i, j) += b.at(i, j);
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    require_same(a, b);
    Mat r = a;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) r.at(i, j) -= b.at(i, j);
    return r;
}

Mat operator*(const Mat& a, const Mat& b) {
    Mode m = require_same(a, b);
    const int n = a.size();
    Mat r(n, m);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Scalar& f = a.at(i, k);
            if (f.structurally_zero()) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += f * b.at(k, j);
        }
    return r;
}

Mat operator*(const Scalar& c, const Mat& a) {
    if (c.mode() != a.mode())
        throw Error(ErrorKind::MixedMode, "scalar/matrix mode mismatch");
    Mat r = a;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) r.at(i, j) = c * r.at(i, j);
    return r;
}

Mat operator-(const Mat& a) { return Scalar::integer(-1, a.mode()) * a; }

Scalar trace(const Mat& a) {
    Scalar t = Scalar::zero(a.mode());
    for (int i = 0; i < a.size(); ++i) t += a.at(i, i);
    return t;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat mat_pow(const Mat& a, int k) {
    if (k < 0) throw Error(ErrorKind::Index, "negative matrix power");
    Mat r = Mat::identity(a.size(), a.mode());
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

bool mat_tol_eq(const Mat& a, const Mat& b, const ToleranceContext& ctx) {
    if (a.size() != b.size() || a.mode() != b.mode()) return false;
    double sc = std::max(a.scale(), b.scale());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (!tol_eq(a.at(i, j), b.at(i, j), ctx, sc)) return false;
    return true;
}

Mat cutoff(const Mat& x, int i) {
    if (i < 1 || i > x.size())
        throw Error(ErrorKind::Index, "cutoff index out of range");
    Mat r(i, x.mode());
    for (int a = 0; a < i; ++a)
        for (int b = 0; b < i; ++b) r.at(a, b) = x.at(a, b);
    return r;
}

Mat embed(const Mat& y, int n) {
    if (y.size() > n)
        throw Error(ErrorKind::Index, "cannot embed into a smaller matrix");
    Mat r(n, y.mode());
    for (int a = 0; a < y.size(); ++a)
        for (int b = 0; b < y.size(); ++b) r.at(a, b) = y.at(a, b);
    return r;
}

Mat embed_group(const Mat& y, int n) {
    Mat r = embed(y, n);
    for (int a = y.size(); a < n; ++a) r.at(a, a) = Scalar::one(y.mode());
    return r;
}

MonicPoly charpoly(const Mat& m) {
    const int n = m.size();
    const Mode md = m.mode();
    std::vector<Scalar> c(size_t(n), Scalar::zero(md)); // coefficients of t^0..t^{n-1}
    Mat wk = m;
    c[size_t(n - 1)] = -trace(wk);
    for (int k = 2; k <= n; ++k) {
        Mat shifted = wk;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += c[size_t(n - k + 1)];
        wk = m * shifted;
        c[size_t(n - k)] = -(trace(wk) / Scalar::integer(k, md));
    }
    return MonicPoly(md, std::move(c));
}

std::vector<Mat> centralizer_basis(const Mat& m, const ToleranceContext& ctx) {
    const int n = m.size();
    RectMat op(n * n, n * n, m.mode());
    // equation (r,c): sum_b z_{r,b} M_{b,c} - sum_a M_{r,a} z_{a,c} = 0
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int eq = r * n + c;
            for (int b = 0; b < n; ++b) op.at(eq, r * n + b) += m.at(b, c);
            for (int a = 0; a < n; ++a) op.at(eq, a * n + c) -= m.at(r, a);
        }
    auto null = nullspace(op, ctx);
    std::vector<Mat> basis;
    basis.reserve(null.size());
    for (const auto& v : null) {
        Mat z(n, m.mode());
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) z.at(r, c) = v[size_t(r * n + c)];
        basis.push_back(std::move(z));
    }
    return basis;
}

bool is_regular(const Mat& m, const ToleranceContext& ctx) {
    return int(centralizer_basis(m, ctx).size()) == m.size();
}

Mat jordan_matrix(const Spectrum& s) {
    int n = s.degree();
    Mode md = s.mode();
    Mat j(n, md);
    int off = 0;
    for (const auto& e : s.entries()) {
        for (int k = 0; k < e.mult; ++k) {
            j.at(off + k, off + k) = e.root;
            if (k + 1 < e.mult) j.at(off + k, off + k + 1) = Scalar::one(md);
        }
        off += e.mult;
    }
    return j;
}

namespace {

std::vector<Scalar> mat_vec(const Mat& m, const std::vector<Scalar>& v) {
    std::vector<Scalar> r(size_t(m.size()), Scalar::zero(m.mode()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r[size_t(i)] += m.at(i, j) * v[size_t(j)];
    return r;
}

// Comparable squared norm; exact mode compares rationals exactly.
bool norm_greater(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (!a.empty() && a[0].mode() == Mode::Exact) {
        Rational na(0), nb(0);
        for (const auto& x : a) na += x.abs2_q();
        for (const auto& x : b) nb += x.abs2_q();
        return cmp(na, nb) > 0;
    }
    double na = 0, nb = 0;
    for (const auto& x : a) na += x.abs_approx() * x.abs_approx();
    for (const auto& x : b) nb += x.abs_approx() * x.abs_approx();
    return na > nb;
}

bool vec_all_zero(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.structurally_zero(); });
}

} // namespace

Mat mat_from_columns(Mode mode, const std::vector<std::vector<Scalar>>& cols) {
    int n = int(cols.size());
    Mat r(n, mode);
    for (int c = 0; c < n; ++c) {
        if (int(cols[size_t(c)].size()) != n)
            throw Error(ErrorKind::Index, "column length mismatch");
        for (int rr = 0; rr < n; ++rr) r.at(rr, c) = cols[size_t(c)][size_t(rr)];
    }
    return r;
}

RectMat to_rect(const Mat& m) {
    RectMat r(m.size(), m.size(), m.mode());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r.at(i, j) = m.at(i, j);
    return r;
}

JordanFrame jordanize_regular(const Mat& m, const Spectrum& s, const ToleranceContext& ctx) {
    const int n = m.size();
    if (s.mode() != m.mode())
        throw Error(ErrorKind::MixedMode, "spectrum/matrix mode mismatch");
    if (s.degree() != n)
        throw Error(ErrorKind::Index, "spectrum degree does not match matrix size");

    MonicPoly cp = charpoly(m);
    MonicPoly sp = poly_from_spectrum(s);
    bool spectra_match = m.mode() == Mode::Exact
        ? cp == sp
        : std::equal(cp.coeffs().begin(), cp.coeffs().end(), sp.coeffs().begin(),
                     [&](const Scalar& a, const Scalar& b) { return tol_eq(a, b, ctx, cp.scale()); });
    if (!spectra_match)
        throw Error(ErrorKind::Diagnostic, "supplied spectrum does not match the characteristic polynomial");
    if (!is_regular(m, ctx))
        throw Error(ErrorKind::NotRegular, "jordanize_regular requires a regular matrix");

    std::vector<std::vector<Scalar>> columns;
    columns.reserve(size_t(n));
    for (const auto& e : s.entries()) {
        Mat b = m;
        for (int i = 0; i < n; ++i) b.at(i, i) -= e.root;
        Mat p = mat_pow(b, e.mult);
        auto null = nullspace(to_rect(p), ctx);
        if (int(null.size()) != e.mult)
            throw Error(ErrorKind::Diagnostic, "generalized eigenspace dimension mismatch");

        // chain seed: candidate maximizing |(M - lambda)^{mult-1} v|
        int best = -1;
        std::vector<Scalar> best_top;
        for (int k = 0; k < int(null.size()); ++k) {
            std::vector<Scalar> top = null[size_t(k)];
            for (int j = 0; j < e.mult - 1; ++j) top = mat_vec(b, top);
            if (best < 0 || norm_greater(top, best_top)) {
                best = k;
                best_top = top;
            }
        }
        if (vec_all_zero(best_top) && m.mode() == Mode::Exact)
            throw Error(ErrorKind::Diagnostic, "degenerate Jordan chain for a regular matrix");

        std::vector<std::vector<Scalar>> chain(size_t(e.mult));
        chain[size_t(e.mult - 1)] = null[size_t(best)];
        for (int j = e.mult - 2; j >= 0; --j) chain[size_t(j)] = mat_vec(b, chain[size_t(j + 1)]);
        for (auto& col : chain) columns.push_back(std::move(col));
    }

    Mat g_inv = mat_from_columns(m.mode(), columns);
    Mat g = inverse(g_inv, ctx);
    Mat jordan = jordan_matrix(s);

    Mat resid = g * m * g_inv;
    bool ok = m.mode() == Mode::Exact ? resid == jordan : mat_tol_eq(resid, jordan, ctx);
    if (!ok)
        throw Error(ErrorKind::Diagnostic, "Jordanization residual check failed");
    return JordanFrame{std::move(g), std::move(jordan), s};
}

namespace {

double norm1(const Mat& m) {
    double best = 0;
    for (int c = 0; c < m.size(); ++c) {
        double s = 0;
        for (int r = 0; r < m.size(); ++r) s += m.at(r, c).abs_approx();
        best = std::max(best, s);
    }
    return best;
}

Mat exp_pade13(const Mat& a, const ToleranceContext& ctx) {
    static const double b[14] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0, 129060195264000.0, 10559470521600.0,
        670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
        960960.0, 16380.0, 182.0, 1.0};
    const int n = a.size();
    Mat I = Mat::identity(n, Mode::Float);
    Mat a2 = a * a, a4 = a2 * a2, a6 = a2 * a4;
    auto sc = [](double x) { return Scalar::flt(x); };
    Mat u_inner = sc(b[13]) * a6 + sc(b[11]) * a4 + sc(b[9]) * a2;
    Mat u = a * (a6 * u_inner + sc(b[7]) * a6 + sc(b[5]) * a4 + sc(b[3]) * a2 + sc(b[1]) * I);
    Mat v_inner = sc(b[12]) * a6 + sc(b[10]) * a4 + sc(b[8]) * a2;
    Mat v = a6 * v_inner + sc(b[6]) * a6 + sc(b[4]) * a4 + sc(b[2]) * a2 + sc(b[0]) * I;
    RectMat lhs = to_rect(v - u), rhs = to_rect(v + u);
    RectMat x = solve_square_multi(lhs, rhs, ctx);
    Mat r(n, Mode::Float);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = x.at(i, j);
    return r;
}

} // namespace

Mat mat_exp(const Mat& m, const ToleranceContext& ctx) {
    const int n = m.size();
    if (m.mode() == Mode::Exact) {
        // terminating series for nilpotent input
        std::vector<Mat> powers;
        powers.push_back(Mat::identity(n, Mode::Exact));
        int nil_index = -1;
        for (int k = 1; k <= n; ++k) {
            powers.push_back(powers.back() * m);
            bool zero = true;
            for (int i = 0; i < n && zero; ++i)
                for (int j = 0; j < n && zero; ++j)
                    if (!powers.back().at(i, j).structurally_zero()) zero = false;
            if (zero) {
                nil_index = k;
                break;
            }
        }
        if (nil_index < 0)
            throw Error(ErrorKind::ExactUnsupported,
                        "exact matrix exponential requires a nilpotent argument");
        Mat r(n, Mode::Exact);
        Rational fact(1);
        for (int k = 0; k < nil_index; ++k) {
            if (k > 0) fact *= k;
            r = r + Scalar::exact(Rational(1) / fact) * powers[size_t(k)];
        }
        return r;
    }

    double nrm = norm1(m);
    int s = 0;
    const double theta13 = 5.371920351148152;
    if (nrm > theta13) s = int(std::ceil(std::log2(nrm / theta13)));
    Mat scaled = Scalar::flt(std::ldexp(1.0, -s)) * m;
    Mat r = exp_pade13(scaled, ctx);
    for (int k = 0; k < s; ++k) r = r * r;
    return r;
}

Mat inverse(const Mat& m, const ToleranceContext& ctx) {
    RectMat x = solve_square_multi(to_rect(m), to_rect(Mat::identity(m.size(), m.mode())), ctx);
    Mat r(m.size(), m.mode());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r.at(i, j) = x.at(i, j);
    return r;
}

} // namespace gz
