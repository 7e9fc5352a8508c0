#pragma once

#include <gz/errors.hpp>

#include <gmpxx.h>

#include <complex>
#include <string>
#include <variant>

namespace gz {

using Rational = mpq_class;

enum class Mode { Exact, Float };

/// Complex number with Gaussian-rational components.
struct ExactComplex {
    Rational re, im;
};

/// Thresholds for float-mode decisions, all relative to a local scale
/// (max absolute entry of the governing object, floored at 1).
/// Exact-mode values ignore the context entirely.
struct ToleranceContext {
    double eps_rank = 1e-9; // singular-value cutoff for rank decisions
    double eps_root = 1e-8; // root-clustering / root-identity radius
    double eps_eq = 1e-9;   // residual and equality comparisons

    void validate() const;

    double eq_threshold(double scale) const;
    double root_threshold(double scale) const;
};

/// A complex scalar in one of two arithmetic modes: exact Gaussian
/// rationals or double-precision floating point.  Arithmetic never mixes
/// modes; float equality and zero tests go through a ToleranceContext.
class Scalar {
public:
    Scalar() : v_(ExactComplex{0, 0}) {}

    static Scalar exact(Rational re, Rational im = 0);
    static Scalar exact_int(long re, long im = 0);
    static Scalar flt(double re, double im = 0.0);
    static Scalar flt(std::complex<double> z);
    static Scalar zero(Mode m);
    static Scalar one(Mode m);
    static Scalar integer(long k, Mode m);

    Mode mode() const { return std::holds_alternative<ExactComplex>(v_) ? Mode::Exact : Mode::Float; }
    bool is_exact() const { return mode() == Mode::Exact; }

    const Rational& re_q() const;
    const Rational& im_q() const;
    std::complex<double> to_complex() const;

    /// Structural zero: exact zero in exact mode, bitwise 0.0 in float
    /// mode.  Float-mode *decisions* must use ToleranceContext instead;
    /// this is for canonical construction and exact pivoting.
    bool structurally_zero() const;

    double abs_approx() const;
    Rational abs2_q() const; // |z|^2, exact mode only

    Scalar conj() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    /// Structural equality (same mode, identical value).  Not a
    /// tolerance-aware comparison.
    bool operator==(const Scalar& b) const;
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    std::string str() const;

private:
    std::variant<ExactComplex, std::complex<double>> v_;
};

Mode require_same_mode(const Scalar& a, const Scalar& b);

/// The paper's lexicographic order on C: a > b iff Re a > Re b, or the
/// real parts tie and Im a > Im b.  Float ties are decided through eps_eq.
bool lex_greater(const Scalar& a, const Scalar& b, const ToleranceContext& ctx = {});

/// Tolerance-aware equality: exact equality in exact mode, |a-b| within
/// eps_eq * max(1, scale) in float mode.
bool tol_eq(const Scalar& a, const Scalar& b, const ToleranceContext& ctx, double scale = 1.0);
bool tol_zero(const Scalar& a, const ToleranceContext& ctx, double scale = 1.0);

} // namespace gz
