#include <gz/poly.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gz {

MonicPoly::MonicPoly(Mode m, std::vector<Scalar> coeffs) : mode_(m), c_(std::move(coeffs)) {
    if (c_.empty())
        throw Error(ErrorKind::Schema, "monic polynomial must have degree >= 1");
    for (const auto& c : c_)
        if (c.mode() != mode_)
            throw Error(ErrorKind::MixedMode, "polynomial coefficients have inhomogeneous modes");
}

const Scalar& MonicPoly::coeff(int k) const {
    if (k < 0 || k >= degree())
        throw Error(ErrorKind::Index, "coefficient index out of range");
    return c_[size_t(k)];
}

Scalar MonicPoly::eval(const Scalar& t) const {
    Scalar r = Scalar::one(mode_); // leading coefficient
    for (int k = degree() - 1; k >= 0; --k)
        r = r * t + c_[size_t(k)];
    return r;
}

double MonicPoly::scale() const {
    double s = 1.0;
    for (const auto& c : c_) s = std::max(s, c.abs_approx());
    return s;
}

MonicPoly MonicPoly::power_of_t(Mode m, int d) {
    return MonicPoly(m, std::vector<Scalar>(size_t(d), Scalar::zero(m)));
}

// ---------------------------------------------------------------------------
// Spectrum

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(size_t(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[size_t(x)] == x ? x : parent[size_t(x)] = find(parent[size_t(x)]); }
    void unite(int a, int b) { parent[size_t(find(a))] = find(b); }
};

} // namespace

Spectrum Spectrum::make(std::vector<SpectrumEntry> entries, const ToleranceContext& ctx) {
    Spectrum s;
    if (entries.empty()) return s;
    s.mode_ = entries.front().root.mode();
    for (const auto& e : entries) {
        if (e.root.mode() != s.mode_)
            throw Error(ErrorKind::MixedMode, "spectrum roots have inhomogeneous modes");
        if (e.mult <= 0)
            throw Error(ErrorKind::Schema, "spectrum multiplicities must be positive");
    }

    const int n = int(entries.size());
    UnionFind uf(n);
    if (s.mode_ == Mode::Exact) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (entries[size_t(i)].root == entries[size_t(j)].root) uf.unite(i, j);
    } else {
        double sc = 0;
        for (const auto& e : entries) sc = std::max(sc, e.root.abs_approx());
        double th = ctx.root_threshold(sc);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::abs(entries[size_t(i)].root.to_complex() - entries[size_t(j)].root.to_complex()) <= th)
                    uf.unite(i, j);
    }

    std::vector<SpectrumEntry> merged;
    for (int i = 0; i < n; ++i) {
        if (uf.find(i) != i) continue;
        if (s.mode_ == Mode::Exact) {
            int mult = 0;
            for (int j = 0; j < n; ++j)
                if (uf.find(j) == i) mult += entries[size_t(j)].mult;
            merged.push_back({entries[size_t(i)].root, mult});
        } else {
            // multiplicity-weighted mean as the cluster representative
            std::complex<double> acc{0, 0};
            int mult = 0;
            for (int j = 0; j < n; ++j)
                if (uf.find(j) == i) {
                    acc += double(entries[size_t(j)].mult) * entries[size_t(j)].root.to_complex();
                    mult += entries[size_t(j)].mult;
                }
            merged.push_back({Scalar::flt(acc / double(mult)), mult});
        }
    }
    std::sort(merged.begin(), merged.end(), [&](const SpectrumEntry& a, const SpectrumEntry& b) {
        return lex_greater(a.root, b.root, ctx);
    });
    s.entries_ = std::move(merged);
    return s;
}

int Spectrum::degree() const {
    int d = 0;
    for (const auto& e : entries_) d += e.mult;
    return d;
}

bool Spectrum::squarefree() const {
    for (const auto& e : entries_)
        if (e.mult > 1) return false;
    return true;
}

double Spectrum::scale() const {
    double s = 1.0;
    for (const auto& e : entries_) s = std::max(s, e.root.abs_approx());
    return s;
}

MonicPoly poly_from_spectrum(const Spectrum& s) {
    if (s.degree() == 0)
        throw Error(ErrorKind::Schema, "empty spectrum has no monic polynomial");
    Mode m = s.mode();
    dense::Poly p = dense::constant(Scalar::one(m));
    for (const auto& e : s.entries()) {
        dense::Poly lin = dense::linear(-e.root, Scalar::one(m));
        for (int k = 0; k < e.mult; ++k) p = dense::mul(p, lin);
    }
    return dense::to_monic(p, m);
}

// ---------------------------------------------------------------------------
// Root finding

namespace {

std::vector<std::complex<double>> companion_roots(const std::vector<std::complex<double>>& coeffs) {
    const int d = int(coeffs.size());
    if (d == 0) return {};
    if (d == 1) return {-coeffs[0]};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int r = 1; r < d; ++r) C(r, r - 1) = 1.0;
    for (int r = 0; r < d; ++r) C(r, d - 1) = -coeffs[size_t(r)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<std::complex<double>> out;
    out.reserve(size_t(d));
    for (int k = 0; k < d; ++k) out.push_back(es.eigenvalues()(k));
    return out;
}

// Continued-fraction convergents of x, simplest first.
std::vector<Rational> rational_candidates(double x) {
    std::vector<Rational> out;
    if (!std::isfinite(x)) return out;
    out.emplace_back(long(std::llround(x)));
    out.emplace_back(0);
    long p0 = 1, q0 = 0, p1 = long(std::floor(x)), q1 = 1;
    out.emplace_back(p1);
    double frac = x - std::floor(x);
    for (int it = 0; it < 40; ++it) {
        if (frac < 1e-15) break;
        double inv = 1.0 / frac;
        if (inv > 9e14) break;
        long a = long(std::floor(inv));
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > long(1e13) || q2 <= 0) break;
        out.push_back(Rational(p2) / Rational(q2));
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        frac = inv - double(a);
    }
    return out;
}

// Find one exact root of an exact monic polynomial, or fail.
bool find_exact_root(const MonicPoly& p, Scalar& root_out) {
    std::vector<std::complex<double>> fc(size_t(p.degree()));
    for (int k = 0; k < p.degree(); ++k) fc[size_t(k)] = p.coeff(k).to_complex();
    auto approx = companion_roots(fc);

    for (const auto& z : approx) {
        auto re_c = rational_candidates(z.real());
        auto im_c = rational_candidates(z.imag());
        // try candidate pairs, simplest first
        size_t lim = std::max(re_c.size(), im_c.size());
        for (size_t k = 0; k < lim; ++k) {
            for (size_t a = 0; a <= k && a < re_c.size(); ++a) {
                size_t b = k - a;
                if (b >= im_c.size()) continue;
                Scalar cand = Scalar::exact(re_c[a], im_c[b]);
                if (p.eval(cand).structurally_zero()) {
                    root_out = cand;
                    return true;
                }
            }
        }
    }
    return false;
}

// Monic quotient of p by (t - r); the division must be exact.
MonicPoly deflate(const MonicPoly& p, const Scalar& r) {
    int d = p.degree();
    std::vector<Scalar> q(size_t(d - 1), Scalar::zero(p.mode()));
    Scalar carry = Scalar::one(p.mode()); // leading coefficient of p
    for (int k = d - 1; k >= 1; --k) {
        q[size_t(k - 1)] = p.coeff(k) + r * carry;
        carry = q[size_t(k - 1)];
    }
    return MonicPoly(p.mode(), std::move(q));
}

} // namespace

Spectrum spectrum_from_poly(const MonicPoly& p, const ToleranceContext& ctx) {
    if (p.mode() == Mode::Float) {
        std::vector<std::complex<double>> fc(size_t(p.degree()));
        for (int k = 0; k < p.degree(); ++k) fc[size_t(k)] = p.coeff(k).to_complex();
        auto roots = companion_roots(fc);
        std::vector<SpectrumEntry> entries;
        entries.reserve(roots.size());
        for (const auto& z : roots) entries.push_back({Scalar::flt(z), 1});
        return Spectrum::make(std::move(entries), ctx);
    }

    std::vector<SpectrumEntry> entries;
    MonicPoly q = p;
    for (;;) {
        Scalar root;
        if (!find_exact_root(q, root))
            throw Error(ErrorKind::NonSplitting,
                        "polynomial does not split over the Gaussian rationals; supply the spectrum directly");
        entries.push_back({root, 1});
        if (q.degree() == 1) break;
        q = deflate(q, root);
    }
    return Spectrum::make(std::move(entries), ctx);
}

std::vector<Scalar> common_roots(const Spectrum& a, const Spectrum& b, const ToleranceContext& ctx) {
    std::vector<Scalar> out;
    double sc = std::max(a.scale(), b.scale());
    for (const auto& ea : a.entries()) {
        for (const auto& eb : b.entries()) {
            bool same;
            if (ea.root.mode() == Mode::Exact && eb.root.mode() == Mode::Exact)
                same = ea.root == eb.root;
            else if (ea.root.mode() == Mode::Float && eb.root.mode() == Mode::Float)
                same = std::abs(ea.root.to_complex() - eb.root.to_complex()) <= ctx.root_threshold(sc);
            else
                throw Error(ErrorKind::MixedMode, "common_roots requires spectra of the same mode");
            if (same) {
                out.push_back(ea.root);
                break;
            }
        }
    }
    return out; // inherits a's decreasing order
}

std::vector<Scalar> taylor_at(const MonicPoly& p, const Scalar& lambda, int m) {
    if (m < 0 || m > p.degree())
        throw Error(ErrorKind::Index, "taylor order must lie in [0, degree]");
    if (lambda.mode() != p.mode())
        throw Error(ErrorKind::MixedMode, "taylor_at expansion point mode mismatch");
    std::vector<Scalar> a = p.coeffs();
    a.push_back(Scalar::one(p.mode()));
    std::vector<Scalar> out;
    out.reserve(size_t(m) + 1);
    for (int j = 0; j <= m; ++j) {
        // synthetic division of a by (t - lambda); remainder = next coefficient
        size_t len = a.size();
        if (len == 1) {
            out.push_back(a[0]);
            a.clear();
            break;
        }
        std::vector<Scalar> q(len - 1, Scalar::zero(p.mode()));
        q[len - 2] = a[len - 1];
        for (size_t k = len - 2; k >= 1; --k) q[k - 1] = a[k] + lambda * q[k];
        out.push_back(a[0] + lambda * q[0]);
        a = std::move(q);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense coefficient arithmetic

namespace dense {

Poly make_zero() { return {}; }
Poly constant(const Scalar& c) { return {c}; }
Poly linear(const Scalar& c0, const Scalar& c1) { return {c0, c1}; }

Poly add(const Poly& a, const Poly& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    Mode m = a[0].mode();
    Poly r(std::max(a.size(), b.size()), Scalar::zero(m));
    for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly nb = b;
    for (auto& c : nb) c = -c;
    return add(a, nb);
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Mode m = a[0].mode();
    Poly r(a.size() + b.size() - 1, Scalar::zero(m));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

Poly scale(const Scalar& c, const Poly& a) {
    Poly r = a;
    for (auto& x : r) x = c * x;
    return r;
}

Poly pow(const Poly& a, int k) {
    if (k < 0) throw Error(ErrorKind::Index, "negative polynomial power");
    if (a.empty()) return k == 0 ? Poly{} : Poly{};
    Poly r = constant(Scalar::one(a[0].mode()));
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

Scalar eval(const Poly& a, const Scalar& t) {
    if (a.empty()) return Scalar::zero(t.mode());
    Scalar r = a.back();
    for (size_t k = a.size() - 1; k-- > 0;) r = r * t + a[k];
    return r;
}

void trim(Poly& a) {
    while (!a.empty() && a.back().structurally_zero()) a.pop_back();
}

Poly mul_mod(const Poly& a, const Poly& b, int trunc) {
    if (a.empty() || b.empty() || trunc <= 0) return {};
    Mode m = a[0].mode();
    Poly r(size_t(trunc), Scalar::zero(m));
    for (size_t i = 0; i < a.size() && i < size_t(trunc); ++i)
        for (size_t j = 0; j < b.size() && i + j < size_t(trunc); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

Poly inv_mod(const Poly& a, int trunc) {
    if (a.empty() || a[0].structurally_zero())
        throw Error(ErrorKind::Singular, "power series has no inverse (zero constant term)");
    Mode m = a[0].mode();
    Poly b(size_t(trunc), Scalar::zero(m));
    b[0] = Scalar::one(m) / a[0];
    for (int k = 1; k < trunc; ++k) {
        Scalar acc = Scalar::zero(m);
        for (int j = 1; j <= k; ++j)
            if (size_t(j) < a.size()) acc += a[size_t(j)] * b[size_t(k - j)];
        b[size_t(k)] = -acc / a[0];
    }
    return b;
}

MonicPoly to_monic(const Poly& a, Mode m) {
    Poly t = a;
    trim(t);
    if (t.empty())
        throw Error(ErrorKind::Schema, "zero polynomial cannot be made monic");
    Scalar lead = t.back();
    std::vector<Scalar> coeffs(t.begin(), t.end() - 1);
    if (!(lead == Scalar::one(m)))
        for (auto& c : coeffs) c = c / lead;
    return MonicPoly(m, std::move(coeffs));
}

Poly from_monic(const MonicPoly& p) {
    Poly r = p.coeffs();
    r.push_back(Scalar::one(p.mode()));
    return r;
}

} // namespace dense

} // namespace gz
