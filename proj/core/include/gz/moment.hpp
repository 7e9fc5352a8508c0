#pragma once

#include <gz/matrix.hpp>

#include <optional>
#include <vector>

namespace gz {

/// A fibre label c: one monic polynomial of degree i per level i = 1..n,
/// with optionally cached root data.
class GZSpec {
public:
    explicit GZSpec(std::vector<MonicPoly> levels);
    static GZSpec from_spectra(const std::vector<Spectrum>& spectra);

    int n() const { return int(levels_.size()); }
    Mode mode() const { return levels_.front().mode(); }

    const MonicPoly& level(int i) const; // 1-based
    const std::optional<Spectrum>& cached_roots(int i) const;

    /// Spectrum of level i; uses the cache when present, otherwise
    /// extracts roots (throws NonSplitting in exact mode when the level
    /// polynomial has no Gaussian-rational factorization).
    Spectrum spectrum_at(int i, const ToleranceContext& ctx = {}) const;

    void cache_roots(int i, Spectrum s);

    bool operator==(const GZSpec& o) const { return levels_ == o.levels_; }

private:
    std::vector<MonicPoly> levels_;
    std::vector<std::optional<Spectrum>> roots_;
};

/// The cutoff characteristic-polynomial map: level i of the result is
/// the characteristic polynomial of the i x i cutoff.
GZSpec phi(const Mat& x);

/// tr((x_i)^j), 1 <= j <= i <= n.
Scalar trace_invariant(const Mat& x, int i, int j);

/// Trace-form gradients of the invariants up to scalars: embed(x_i^{j-1})
/// for 1 <= j <= i <= n, in (i, j)-lexicographic order.
std::vector<Mat> gradient_basis(const Mat& x);

/// Strong regularity via linear independence of the n(n+1)/2 gradients.
bool sreg_differentials(const Mat& x, const ToleranceContext& ctx = {});

struct CentralizerSregResult {
    std::vector<bool> cutoff_regular;   // level i at index i-1
    std::vector<int> intersection_dims; // level i (2..n) at index i-2
    bool passed() const;
};

/// Strong regularity via (a) each cutoff regular and (b) trivial
/// intersection of consecutive cutoff centralizers.
CentralizerSregResult sreg_centralizers(const Mat& x, const ToleranceContext& ctx = {});

/// dim of the A-orbit tangent space V_x spanned by the brackets
/// [embed(x_i^{j-1}), x] for 1 <= j <= i <= n-1.
int tangent_space_dim(const Mat& x, const ToleranceContext& ctx = {});

/// The Lie-Poisson bracket of two invariants evaluated at x; always zero.
Scalar poisson_bracket_residual(const Mat& x, std::pair<int, int> ij, std::pair<int, int> kl);

struct SregReport {
    bool via_differentials = false;
    bool via_centralizers = false;
    std::vector<bool> cutoff_regular;
    std::vector<int> intersection_dims;
    int tangent_dim = 0;

    bool strongly_regular() const { return via_differentials; }
};

/// Runs all three characterizations and cross-checks them.  Disagreement
/// (a float-tolerance failure) raises a Diagnostic error rather than
/// returning either answer.
SregReport sreg_report(const Mat& x, const ToleranceContext& ctx = {});

} // namespace gz
