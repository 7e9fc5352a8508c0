#include <gz/moment.hpp>

namespace gz {

GZSpec::GZSpec(std::vector<MonicPoly> levels) : levels_(std::move(levels)) {
    if (levels_.empty())
        throw Error(ErrorKind::Schema, "fibre label needs at least one level");
    for (int i = 0; i < int(levels_.size()); ++i) {
        if (levels_[size_t(i)].degree() != i + 1)
            throw Error(ErrorKind::Schema, "level " + std::to_string(i + 1) +
                                               " polynomial must have degree " + std::to_string(i + 1));
        if (levels_[size_t(i)].mode() != levels_.front().mode())
            throw Error(ErrorKind::MixedMode, "fibre levels have inhomogeneous modes");
    }
    roots_.resize(levels_.size());
}

GZSpec GZSpec::from_spectra(const std::vector<Spectrum>& spectra) {
    std::vector<MonicPoly> levels;
    levels.reserve(spectra.size());
    for (const auto& s : spectra) levels.push_back(poly_from_spectrum(s));
    GZSpec spec(std::move(levels));
    for (int i = 0; i < int(spectra.size()); ++i) spec.cache_roots(i + 1, spectra[size_t(i)]);
    return spec;
}

const MonicPoly& GZSpec::level(int i) const {
    if (i < 1 || i > n()) throw Error(ErrorKind::Index, "level index out of range");
    return levels_[size_t(i - 1)];
}

const std::optional<Spectrum>& GZSpec::cached_roots(int i) const {
    if (i < 1 || i > n()) throw Error(ErrorKind::Index, "level index out of range");
    return roots_[size_t(i - 1)];
}

Spectrum GZSpec::spectrum_at(int i, const ToleranceContext& ctx) const {
    const auto& cached = cached_roots(i);
    if (cached) return *cached;
    return spectrum_from_poly(level(i), ctx);
}

void GZSpec::cache_roots(int i, Spectrum s) {
    if (i < 1 || i > n()) throw Error(ErrorKind::Index, "level index out of range");
    if (s.degree() != i)
        throw Error(ErrorKind::Schema, "cached spectrum degree mismatch");
    roots_[size_t(i - 1)] = std::move(s);
}

GZSpec phi(const Mat& x) {
    std::vector<MonicPoly> levels;
    levels.reserve(size_t(x.size()));
    for (int i = 1; i <= x.size(); ++i) levels.push_back(charpoly(cutoff(x, i)));
    return GZSpec(std::move(levels));
}

Scalar trace_invariant(const Mat& x, int i, int j) {
    if (i < 1 || i > x.size() || j < 1 || j > i)
        throw Error(ErrorKind::Index, "trace invariant indices require 1 <= j <= i <= n");
    return trace(mat_pow(cutoff(x, i), j));
}

std::vector<Mat> gradient_basis(const Mat& x) {
    const int n = x.size();
    std::vector<Mat> out;
    out.reserve(size_t(n) * size_t(n + 1) / 2);
    for (int i = 1; i <= n; ++i) {
        Mat xi = cutoff(x, i);
        Mat p = Mat::identity(i, x.mode());
        for (int j = 1; j <= i; ++j) {
            out.push_back(embed(p, n));
            if (j < i) p = p * xi;
        }
    }
    return out;
}

namespace {

// Rank of a family of n x n matrices viewed as vectors in n^2-space.
int family_rank(const std::vector<Mat>& fam, Mode mode, int n, const ToleranceContext& ctx) {
    RectMat m(int(fam.size()), n * n, mode);
    for (int r = 0; r < int(fam.size()); ++r)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) m.at(r, a * n + b) = fam[size_t(r)].at(a, b);
    return rank(m, ctx);
}

} // namespace

bool sreg_differentials(const Mat& x, const ToleranceContext& ctx) {
    const int n = x.size();
    auto grads = gradient_basis(x);
    return family_rank(grads, x.mode(), n, ctx) == n * (n + 1) / 2;
}

bool CentralizerSregResult::passed() const {
    for (bool r : cutoff_regular)
        if (!r) return false;
    for (int d : intersection_dims)
        if (d != 0) return false;
    return true;
}

CentralizerSregResult sreg_centralizers(const Mat& x, const ToleranceContext& ctx) {
    const int n = x.size();
    CentralizerSregResult res;
    res.cutoff_regular.reserve(size_t(n));
    for (int i = 1; i <= n; ++i) res.cutoff_regular.push_back(is_regular(cutoff(x, i), ctx));

    // condition (b): one stacked commutator system per level over
    // z in gl(i-1), embedded in gl(i)
    for (int i = 2; i <= n; ++i) {
        const int m = i - 1;
        Mat xi = cutoff(x, i);
        Mat xm = cutoff(x, m);
        RectMat sys(m * m + i * i, m * m, x.mode());
        // [z, x_{i-1}] = 0 rows
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                int eq = r * m + c;
                for (int b = 0; b < m; ++b) sys.at(eq, r * m + b) += xm.at(b, c);
                for (int a = 0; a < m; ++a) sys.at(eq, a * m + c) -= xm.at(r, a);
            }
        // [embed(z, i), x_i] = 0 rows
        for (int r = 0; r < i; ++r)
            for (int c = 0; c < i; ++c) {
                int eq = m * m + r * i + c;
                for (int b = 0; b < m; ++b)
                    if (r < m) sys.at(eq, r * m + b) += xi.at(b, c);
                for (int a = 0; a < m; ++a)
                    if (c < m) sys.at(eq, a * m + c) -= xi.at(r, a);
            }
        int nullity = m * m - rank(sys, ctx);
        res.intersection_dims.push_back(nullity);
    }
    return res;
}

int tangent_space_dim(const Mat& x, const ToleranceContext& ctx) {
    const int n = x.size();
    std::vector<Mat> fields;
    fields.reserve(size_t(n) * size_t(n - 1) / 2);
    for (int i = 1; i <= n - 1; ++i) {
        Mat xi = cutoff(x, i);
        Mat p = Mat::identity(i, x.mode());
        for (int j = 1; j <= i; ++j) {
            fields.push_back(commutator(embed(p, n), x));
            if (j < i) p = p * xi;
        }
    }
    return family_rank(fields, x.mode(), n, ctx);
}

Scalar poisson_bracket_residual(const Mat& x, std::pair<int, int> ij, std::pair<int, int> kl) {
    auto [i, j] = ij;
    auto [k, l] = kl;
    const int n = x.size();
    if (i < 1 || i > n || j < 1 || j > i || k < 1 || k > n || l < 1 || l > k)
        throw Error(ErrorKind::Index, "invariant indices require 1 <= j <= i <= n");
    Mat g1 = Scalar::integer(j, x.mode()) * embed(mat_pow(cutoff(x, i), j - 1), n);
    Mat g2 = Scalar::integer(l, x.mode()) * embed(mat_pow(cutoff(x, k), l - 1), n);
    return trace(x * commutator(g1, g2));
}

SregReport sreg_report(const Mat& x, const ToleranceContext& ctx) {
    const int n = x.size();
    SregReport rep;
    rep.via_differentials = sreg_differentials(x, ctx);
    auto cent = sreg_centralizers(x, ctx);
    rep.via_centralizers = cent.passed();
    rep.cutoff_regular = std::move(cent.cutoff_regular);
    rep.intersection_dims = std::move(cent.intersection_dims);
    rep.tangent_dim = tangent_space_dim(x, ctx);

    bool tangent_full = rep.tangent_dim == n * (n - 1) / 2;
    if (rep.via_differentials != rep.via_centralizers ||
        rep.via_differentials != tangent_full)
        throw Error(ErrorKind::Diagnostic,
                    "strong-regularity characterizations disagree (tolerance failure)");
    return rep;
}

} // namespace gz
