#pragma once

#include <gz/linalg.hpp>
#include <gz/poly.hpp>

#include <vector>

namespace gz {

/// Square complex matrix with a homogeneous arithmetic mode.
class Mat {
public:
    Mat(int n, Mode m)
        : n_(n), mode_(m), a_(size_t(n) * size_t(n), Scalar::zero(m)) {
        if (n <= 0) throw Error(ErrorKind::Index, "matrix size must be positive");
    }

    static Mat identity(int n, Mode m);
    static Mat from_rows(Mode m, const std::vector<std::vector<Scalar>>& rows);

    int size() const { return n_; }
    Mode mode() const { return mode_; }

    Scalar& at(int r, int c) { return a_[idx(r, c)]; }
    const Scalar& at(int r, int c) const { return a_[idx(r, c)]; }

    double scale() const;

    bool operator==(const Mat& o) const { return n_ == o.n_ && mode_ == o.mode_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

private:
    size_t idx(int r, int c) const {
        if (r < 0 || r >= n_ || c < 0 || c >= n_)
            throw Error(ErrorKind::Index, "matrix entry out of range");
        return size_t(r) * size_t(n_) + size_t(c);
    }

    int n_;
    Mode mode_;
    std::vector<Scalar> a_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Scalar& c, const Mat& a);
Mat operator-(const Mat& a);

Scalar trace(const Mat& a);
Mat commutator(const Mat& a, const Mat& b); // ab - ba
Mat mat_pow(const Mat& a, int k);
bool mat_tol_eq(const Mat& a, const Mat& b, const ToleranceContext& ctx);

/// Top-left i x i submatrix, 1 <= i <= size.
Mat cutoff(const Mat& x, int i);

/// Embed an i x i matrix into the top-left corner of an n x n matrix,
/// zeros elsewhere (Lie algebra embedding).
Mat embed(const Mat& y, int n);

/// Group embedding: y in the top-left corner, identity on the rest.
Mat embed_group(const Mat& y, int n);

/// Monic characteristic polynomial det(tI - M) by the
/// Faddeev-LeVerrier recurrence (divisions only by integers).
MonicPoly charpoly(const Mat& m);

/// Basis of { z : zM - Mz = 0 } inside gl(size).
std::vector<Mat> centralizer_basis(const Mat& m, const ToleranceContext& ctx = {});

/// Regular = centralizer of minimal dimension (= size).
bool is_regular(const Mat& m, const ToleranceContext& ctx = {});

/// Conjugation frame onto the Jordan form of a regular matrix: one block
/// per distinct eigenvalue, blocks in strictly decreasing lexicographic
/// eigenvalue order, g * M * g^-1 = jordan.
struct JordanFrame {
    Mat g;
    Mat jordan;
    Spectrum spectrum;
};

JordanFrame jordanize_regular(const Mat& m, const Spectrum& s, const ToleranceContext& ctx = {});

/// Jordan matrix with the given spectrum (one block per root).
Mat jordan_matrix(const Spectrum& s);

/// Matrix exponential: scaling-and-squaring Pade in float mode,
/// terminating power series for exact nilpotent input.
Mat mat_exp(const Mat& m, const ToleranceContext& ctx = {});

Mat inverse(const Mat& m, const ToleranceContext& ctx = {});

RectMat to_rect(const Mat& m);
Mat mat_from_columns(Mode mode, const std::vector<std::vector<Scalar>>& cols);

} // namespace gz
