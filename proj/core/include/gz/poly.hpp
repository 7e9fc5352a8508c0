#pragma once

#include <gz/scalar.hpp>

#include <vector>

namespace gz {

/// Monic polynomial c_0 + c_1 t + ... + c_{d-1} t^{d-1} + t^d.  Only the
/// non-leading coefficients are stored.
class MonicPoly {
public:
    MonicPoly(Mode m, std::vector<Scalar> coeffs);

    int degree() const { return int(c_.size()); }
    Mode mode() const { return mode_; }
    const Scalar& coeff(int k) const; // 0 <= k < degree
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar eval(const Scalar& t) const;
    Scalar sum_of_roots() const { return -c_.back(); }

    /// Max |coefficient|, floored at 1; the scale for tolerance decisions.
    double scale() const;

    bool operator==(const MonicPoly& o) const { return mode_ == o.mode_ && c_ == o.c_; }
    bool operator!=(const MonicPoly& o) const { return !(*this == o); }

    static MonicPoly power_of_t(Mode m, int d); // t^d

private:
    Mode mode_;
    std::vector<Scalar> c_;
};

struct SpectrumEntry {
    Scalar root;
    int mult;
    bool operator==(const SpectrumEntry& o) const { return root == o.root && mult == o.mult; }
};

/// Root multiset with roots strictly decreasing in the lexicographic
/// order on C.
class Spectrum {
public:
    /// Canonicalize an arbitrary (root, mult) list: sort decreasing,
    /// merge equal roots (exact equality; float within eps_root).
    static Spectrum make(std::vector<SpectrumEntry> entries, const ToleranceContext& ctx = {});

    Mode mode() const { return mode_; }
    int degree() const;
    int block_count() const { return int(entries_.size()); }
    const std::vector<SpectrumEntry>& entries() const { return entries_; }
    const SpectrumEntry& entry(int k) const { return entries_.at(size_t(k)); }

    bool squarefree() const;
    double scale() const;

    bool operator==(const Spectrum& o) const { return mode_ == o.mode_ && entries_ == o.entries_; }

private:
    Mode mode_ = Mode::Exact;
    std::vector<SpectrumEntry> entries_;
};

/// Expand prod (t - lambda)^mult.
MonicPoly poly_from_spectrum(const Spectrum& s);

/// Roots with multiplicities.  Float mode: companion-matrix eigenvalues
/// clustered within eps_root.  Exact mode: Gaussian-rational linear
/// factor extraction; throws NonSplitting when the polynomial does not
/// split over Q(i).
Spectrum spectrum_from_poly(const MonicPoly& p, const ToleranceContext& ctx = {});

/// Distinct roots present in both spectra, decreasing lexicographic
/// order (multiplicities ignored for membership).
std::vector<Scalar> common_roots(const Spectrum& a, const Spectrum& b, const ToleranceContext& ctx = {});

/// Coefficients of p in powers of (t - lambda), orders 0..m; entry k is
/// p^(k)(lambda)/k!.  Exact shift in both modes.
std::vector<Scalar> taylor_at(const MonicPoly& p, const Scalar& lambda, int m);

/// Dense (not necessarily monic) coefficient arithmetic used by the
/// closed characteristic-polynomial formulas and by test oracles.
namespace dense {
using Poly = std::vector<Scalar>; // p[k] = coeff of t^k; empty = 0

Poly make_zero();
Poly constant(const Scalar& c);
Poly linear(const Scalar& c0, const Scalar& c1); // c0 + c1 t
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Scalar& c, const Poly& a);
Poly pow(const Poly& a, int k);
Scalar eval(const Poly& a, const Scalar& t);
void trim(Poly& a); // drop structurally-zero leading coefficients

/// Truncated product mod u^trunc.
Poly mul_mod(const Poly& a, const Poly& b, int trunc);
/// Power-series inverse mod u^trunc; a[0] must be invertible.
Poly inv_mod(const Poly& a, int trunc);

MonicPoly to_monic(const Poly& a, Mode m);
Poly from_monic(const MonicPoly& p);
} // namespace dense

} // namespace gz
