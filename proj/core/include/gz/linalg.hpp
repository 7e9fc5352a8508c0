#pragma once

#include <gz/scalar.hpp>

#include <vector>

namespace gz {

/// Rectangular scalar matrix used by the linear-system machinery.
class RectMat {
public:
    RectMat(int rows, int cols, Mode m)
        : rows_(rows), cols_(cols), mode_(m), a_(size_t(rows) * size_t(cols), Scalar::zero(m)) {
        if (rows < 0 || cols < 0) throw Error(ErrorKind::Index, "negative matrix dimensions");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Mode mode() const { return mode_; }

    Scalar& at(int r, int c) { return a_[idx(r, c)]; }
    const Scalar& at(int r, int c) const { return a_[idx(r, c)]; }

    double scale() const;

private:
    size_t idx(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw Error(ErrorKind::Index, "matrix entry out of range");
        return size_t(r) * size_t(cols_) + size_t(c);
    }

    int rows_, cols_;
    Mode mode_;
    std::vector<Scalar> a_;
};

/// Rank: exact Gaussian elimination with exact pivot tests, or singular
/// values against eps_rank * sigma_max.
int rank(const RectMat& m, const ToleranceContext& ctx);

/// Right-nullspace basis (vectors of length cols).  Exact mode: reduced
/// row echelon free-variable basis ordered by free-column index.  Float
/// mode: trailing right singular vectors.
std::vector<std::vector<Scalar>> nullspace(const RectMat& m, const ToleranceContext& ctx);

/// Solve A x = b for square A; throws Singular when A is not invertible.
std::vector<Scalar> solve_square(const RectMat& a, const std::vector<Scalar>& b,
                                 const ToleranceContext& ctx);

/// Solve A X = B columnwise for square A.
RectMat solve_square_multi(const RectMat& a, const RectMat& b, const ToleranceContext& ctx);

} // namespace gz
