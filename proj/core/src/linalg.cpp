#include <gz/linalg.hpp>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace gz {

double RectMat::scale() const {
    double s = 1.0;
    for (const auto& x : a_) s = std::max(s, x.abs_approx());
    return s;
}

namespace {

Eigen::MatrixXcd to_eigen(const RectMat& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            e(r, c) = m.at(r, c).to_complex();
    return e;
}

// In-place reduced row echelon form with exact pivot tests.  Returns the
// pivot columns; pivots are the first structurally nonzero entry per
// column, scanned in column order.
std::vector<int> rref_exact(RectMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).structurally_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(row, c));
        Scalar inv = Scalar::one(m.mode()) / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) = inv * m.at(row, c);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).structurally_zero()) continue;
            Scalar f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank_float(const RectMat& m, const ToleranceContext& ctx) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double smax = sv(0);
    if (smax == 0.0) return 0;
    int r = 0;
    for (int k = 0; k < sv.size(); ++k)
        if (sv(k) > ctx.eps_rank * smax) ++r;
    return r;
}

} // namespace

int rank(const RectMat& m, const ToleranceContext& ctx) {
    if (m.mode() == Mode::Float) return rank_float(m, ctx);
    RectMat t = m;
    return int(rref_exact(t).size());
}

std::vector<std::vector<Scalar>> nullspace(const RectMat& m, const ToleranceContext& ctx) {
    std::vector<std::vector<Scalar>> basis;
    if (m.cols() == 0) return basis;

    if (m.mode() == Mode::Exact) {
        RectMat t = m;
        std::vector<int> pivots = rref_exact(t);
        std::vector<int> pivot_of_col(size_t(m.cols()), -1);
        for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[size_t(pivots[r])] = int(r);
        for (int f = 0; f < m.cols(); ++f) {
            if (pivot_of_col[size_t(f)] >= 0) continue;
            std::vector<Scalar> v(size_t(m.cols()), Scalar::zero(Mode::Exact));
            v[size_t(f)] = Scalar::one(Mode::Exact);
            for (size_t r = 0; r < pivots.size(); ++r)
                v[size_t(pivots[r])] = -t.at(int(r), f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    if (m.rows() == 0) {
        for (int f = 0; f < m.cols(); ++f) {
            std::vector<Scalar> v(size_t(m.cols()), Scalar::zero(Mode::Float));
            v[size_t(f)] = Scalar::one(Mode::Float);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smax = sv.size() > 0 ? sv(0) : 0.0;
    int r = 0;
    if (smax > 0.0)
        for (int k = 0; k < sv.size(); ++k)
            if (sv(k) > ctx.eps_rank * smax) ++r;
    const auto& V = svd.matrixV();
    for (int c = r; c < m.cols(); ++c) {
        std::vector<Scalar> v(size_t(m.cols()), Scalar::zero(Mode::Float));
        for (int k = 0; k < m.cols(); ++k) v[size_t(k)] = Scalar::flt(V(k, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

RectMat solve_square_multi(const RectMat& a, const RectMat& b, const ToleranceContext& ctx) {
    if (a.rows() != a.cols() || b.rows() != a.rows())
        throw Error(ErrorKind::Index, "solve requires square A and matching right-hand side");
    if (a.mode() != b.mode())
        throw Error(ErrorKind::MixedMode, "solve operands have different modes");
    const int n = a.rows(), k = b.cols();
    RectMat aug(n, n + k, a.mode());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        for (int c = 0; c < k; ++c) aug.at(r, n + c) = b.at(r, c);
    }

    double th = a.mode() == Mode::Float ? ctx.eps_rank * std::max(1.0, a.scale()) : 0.0;
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        if (a.mode() == Mode::Exact) {
            for (int r = col; r < n; ++r)
                if (!aug.at(r, col).structurally_zero()) {
                    pr = r;
                    break;
                }
        } else {
            double best = th;
            for (int r = col; r < n; ++r) {
                double v = aug.at(r, col).abs_approx();
                if (v > best) {
                    best = v;
                    pr = r;
                }
            }
        }
        if (pr < 0) throw Error(ErrorKind::Singular, "linear system is singular");
        if (pr != col)
            for (int c = 0; c < n + k; ++c) std::swap(aug.at(pr, c), aug.at(col, c));
        Scalar inv = Scalar::one(a.mode()) / aug.at(col, col);
        for (int c = col; c < n + k; ++c) aug.at(col, c) = inv * aug.at(col, c);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Scalar f = aug.at(r, col);
            if (f.structurally_zero()) continue;
            for (int c = col; c < n + k; ++c) aug.at(r, c) = aug.at(r, c) - f * aug.at(col, c);
        }
    }

    RectMat x(n, k, a.mode());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < k; ++c) x.at(r, c) = aug.at(r, n + c);
    return x;
}

std::vector<Scalar> solve_square(const RectMat& a, const std::vector<Scalar>& b,
                                 const ToleranceContext& ctx) {
    if (int(b.size()) != a.rows())
        throw Error(ErrorKind::Index, "right-hand side length mismatch");
    RectMat bm(a.rows(), 1, a.mode());
    for (int r = 0; r < a.rows(); ++r) bm.at(r, 0) = b[size_t(r)];
    RectMat x = solve_square_multi(a, bm, ctx);
    std::vector<Scalar> out(size_t(a.rows()), Scalar::zero(a.mode()));
    for (int r = 0; r < a.rows(); ++r) out[size_t(r)] = x.at(r, 0);
    return out;
}

} // namespace gz
