#include <gz/census.hpp>

#include <algorithm>
#include <numeric>

namespace gz {

int ChoiceVector::label_count() const {
    int c = 0;
    for (const auto& lvl : levels) c += int(lvl.size());
    return c;
}

Permutation::Permutation(int n) : map_(size_t(n)) {
    if (n <= 0) throw Error(ErrorKind::Index, "permutation degree must be positive");
    std::iota(map_.begin(), map_.end(), 0);
}

Permutation Permutation::long_element(int k, int n) {
    Permutation p(n);
    for (int x = 0; x <= k; ++x) p.map_[size_t(x)] = k - x;
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 0; x < n(); ++x)
        if (map_[size_t(x)] != x) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw Error(ErrorKind::Index, "permutation degree mismatch");
    Permutation r(a.n());
    for (int x = 0; x < a.n(); ++x) r.map_[size_t(x)] = a.apply(b.apply(x));
    return r;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out(map_.size());
    for (size_t x = 0; x < map_.size(); ++x) out[x] = map_[x] + 1;
    return out;
}

int FiberClass::total_j() const {
    int t = 0;
    for (int x : j) t += x;
    return t;
}

std::vector<Scalar> level_common_roots(const GZSpec& c, int i, const ToleranceContext& ctx) {
    if (i < 1 || i > c.n() - 1)
        throw Error(ErrorKind::Index, "common-root level out of range");
    Spectrum si = c.spectrum_at(i, ctx);
    if (c.mode() == Mode::Exact) {
        std::vector<Scalar> out;
        for (const auto& e : si.entries())
            if (c.level(i + 1).eval(e.root).structurally_zero()) out.push_back(e.root);
        return out;
    }
    return common_roots(si, c.spectrum_at(i + 1, ctx), ctx);
}

namespace {

// Squarefree test that avoids root extraction: gcd(p, p') is constant.
bool squarefree_exact(const MonicPoly& p) {
    dense::Poly a = dense::from_monic(p);
    dense::Poly b;
    for (size_t k = 1; k < a.size(); ++k)
        b.push_back(Scalar::integer(long(k), Mode::Exact) * a[k]);
    // Euclidean remainder sequence
    while (true) {
        dense::trim(b);
        if (b.empty()) return false; // p divides into p', only for deg 0
        if (b.size() == 1) return true;
        // a mod b
        dense::Poly rem = a;
        dense::trim(rem);
        while (rem.size() >= b.size()) {
            Scalar f = rem.back() / b.back();
            size_t shift = rem.size() - b.size();
            for (size_t k = 0; k < b.size(); ++k)
                rem[k + shift] -= f * b[k];
            rem.pop_back();
            dense::trim(rem);
            if (rem.empty()) break;
        }
        a = std::move(b);
        b = std::move(rem);
    }
}

} // namespace

FiberClass fiber_class(const GZSpec& c, const ToleranceContext& ctx) {
    const int n = c.n();
    FiberClass fc;
    for (int i = 1; i <= n - 1; ++i) fc.j.push_back(int(level_common_roots(c, i, ctx).size()));

    bool disjoint = std::all_of(fc.j.begin(), fc.j.end(), [](int x) { return x == 0; });
    if (!disjoint) {
        fc.tag = FiberClass::Tag::Degenerate;
        return fc;
    }
    bool squarefree = true;
    for (int i = 1; i <= n && squarefree; ++i) {
        if (c.mode() == Mode::Exact) {
            const auto& cached = c.cached_roots(i);
            squarefree = cached ? cached->squarefree() : squarefree_exact(c.level(i));
        } else {
            squarefree = c.spectrum_at(i, ctx).squarefree();
        }
    }
    fc.tag = squarefree ? FiberClass::Tag::Omega : FiberClass::Tag::ThetaOnly;
    return fc;
}

mpz_class orbit_count(const GZSpec& c, const ToleranceContext& ctx) {
    FiberClass fc = fiber_class(c, ctx);
    mpz_class r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), mp_bitcnt_t(fc.total_j()));
    return r;
}

namespace {

void validate_choice_vector(const GZSpec& c, const ChoiceVector& v, const ToleranceContext& ctx) {
    const int n = c.n();
    if (int(v.levels.size()) != n - 1)
        throw Error(ErrorKind::Schema, "choice vector must have n-1 levels");
    for (int i = 1; i <= n - 1; ++i) {
        auto roots = level_common_roots(c, i, ctx);
        const auto& lvl = v.levels[size_t(i - 1)];
        if (lvl.size() != roots.size())
            throw Error(ErrorKind::Schema, "choice vector level " + std::to_string(i) +
                                               " does not match the common-root count");
        std::vector<bool> used(roots.size(), false);
        for (const auto& e : lvl) {
            bool found = false;
            for (size_t k = 0; k < roots.size(); ++k) {
                if (used[k]) continue;
                if (tol_eq(e.root, roots[k], ctx, c.level(i).scale())) {
                    used[k] = true;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw Error(ErrorKind::Schema, "choice vector labels a root that is not common");
        }
    }
}

BlockChoice block_choice_for_level(const ChoiceVector& v, int i) {
    BlockChoice bc;
    for (const auto& e : v.levels[size_t(i - 1)]) bc.entries.push_back({e.root, e.choice});
    return bc;
}

} // namespace

Mat orbit_representative(const GZSpec& c, const ChoiceVector& v, const ToleranceContext& ctx) {
    const int n = c.n();
    validate_choice_vector(c, v, ctx);

    if (n == 1) {
        Mat x(1, c.mode());
        x.at(0, 0) = -c.level(1).coeff(0);
        return x;
    }

    std::vector<Mat> assembled;
    assembled.reserve(size_t(n - 1));
    for (int i = 1; i <= n - 1; ++i) {
        SolutionPoint p = xi_solve(c.spectrum_at(i, ctx), c.level(i + 1),
                                   block_choice_for_level(v, i), {}, ctx);
        if (!is_free(p, ctx))
            throw Error(ErrorKind::Internal, "solved representative point is not free");
        assembled.push_back(assemble(p));
    }

    // Ad(g_{1,2}^{-1} g_{2,3}^{-1} ... g_{n-2,n-1}^{-1}) applied to the
    // top-level point
    Mat conj = Mat::identity(n, c.mode());
    Mat conj_inv = Mat::identity(n, c.mode());
    for (int i = 1; i <= n - 2; ++i) {
        JordanFrame frame = jordanize_regular(assembled[size_t(i - 1)], c.spectrum_at(i + 1, ctx), ctx);
        conj = conj * embed_group(inverse(frame.g, ctx), n);
        conj_inv = embed_group(frame.g, n) * conj_inv;
    }
    return conj * assembled[size_t(n - 2)] * conj_inv;
}

ChoiceVector classify(const Mat& x, const ToleranceContext& ctx) {
    const int n = x.size();
    SregReport rep = sreg_report(x, ctx);
    if (!rep.strongly_regular())
        throw Error(ErrorKind::NotStronglyRegular, "classify requires a strongly regular matrix");

    GZSpec c = phi(x);
    ChoiceVector v;
    if (n == 1) return v;

    const double sc = std::max(1.0, x.scale());
    for (int i = 1; i <= n - 1; ++i) {
        Spectrum si = c.spectrum_at(i, ctx);
        JordanFrame frame = jordanize_regular(cutoff(x, i), si, ctx);
        Mat g_inv = inverse(frame.g, ctx);

        // borders of the conjugated (i+1)-cutoff: z' = z g^{-1}, y' = g y
        std::vector<Scalar> zrow(size_t(i), Scalar::zero(x.mode()));
        std::vector<Scalar> ycol(size_t(i), Scalar::zero(x.mode()));
        for (int a = 0; a < i; ++a)
            for (int b = 0; b < i; ++b) {
                zrow[size_t(a)] += x.at(i, b) * g_inv.at(b, a);
                ycol[size_t(a)] += frame.g.at(a, b) * x.at(b, i);
            }

        auto commons = level_common_roots(c, i, ctx);
        std::vector<ChoiceEntry> lvl;
        int off = 0;
        for (const auto& e : si.entries()) {
            bool common = std::any_of(commons.begin(), commons.end(), [&](const Scalar& r) {
                return tol_eq(r, e.root, ctx, si.scale());
            });
            const Scalar& z1 = zrow[size_t(off)];
            const Scalar& ylast = ycol[size_t(off + e.mult - 1)];
            bool z_zero = tol_zero(z1, ctx, sc);
            bool y_zero = tol_zero(ylast, ctx, sc);
            if (common) {
                if (z_zero == y_zero)
                    throw Error(ErrorKind::Diagnostic,
                                "border coordinates inconsistent with strong regularity at level " +
                                    std::to_string(i));
                lvl.push_back({e.root, z_zero ? UL::Upper : UL::Lower});
            } else if (z_zero || y_zero) {
                throw Error(ErrorKind::Diagnostic,
                            "vanishing border coordinate at a non-common root at level " +
                                std::to_string(i));
            }
            off += e.mult;
        }
        v.levels.push_back(std::move(lvl));
    }
    return v;
}

std::set<std::pair<int, int>> nil_pattern(const NilChoice& v) {
    std::set<std::pair<int, int>> pos;
    for (int i = 1; i <= int(v.labels.size()); ++i) {
        if (v.labels[size_t(i - 1)] == UL::Upper)
            for (int r = 1; r <= i; ++r) pos.insert({r, i + 1});
        else
            for (int c = 1; c <= i; ++c) pos.insert({i + 1, c});
    }
    return pos;
}

Permutation nil_permutation(const NilChoice& v) {
    const int n = int(v.labels.size()) + 1;
    Permutation sigma(n);
    std::vector<UL> a = v.labels;
    a.push_back(UL::Lower); // a_n = L
    for (int i = 1; i <= n - 1; ++i) {
        if (a[size_t(i - 1)] != a[size_t(i)])
            sigma = Permutation::compose(sigma, Permutation::long_element(i, n));
    }
    return sigma;
}

std::vector<ChoiceVector> enumerate_choices(const GZSpec& c, const ToleranceContext& ctx) {
    const int n = c.n();
    std::vector<std::vector<Scalar>> commons;
    int total = 0;
    for (int i = 1; i <= n - 1; ++i) {
        commons.push_back(level_common_roots(c, i, ctx));
        total += int(commons.back().size());
    }
    if (total > 24)
        throw Error(ErrorKind::Internal, "fibre has too many orbits to enumerate");

    std::vector<ChoiceVector> out;
    const long count = 1L << total;
    for (long mask = 0; mask < count; ++mask) {
        ChoiceVector v;
        int bit = total - 1; // first label is the most significant, U < L
        for (const auto& roots : commons) {
            std::vector<ChoiceEntry> lvl;
            for (const auto& r : roots) {
                bool lower = (mask >> bit) & 1;
                lvl.push_back({r, lower ? UL::Lower : UL::Upper});
                --bit;
            }
            v.levels.push_back(std::move(lvl));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::pair<ChoiceVector, Mat>> enumerate_orbits(const GZSpec& c,
                                                           const ToleranceContext& ctx) {
    std::vector<std::pair<ChoiceVector, Mat>> out;
    for (auto& v : enumerate_choices(c, ctx)) {
        Mat rep = orbit_representative(c, v, ctx);
        out.emplace_back(std::move(v), std::move(rep));
    }
    return out;
}

bool choice_vectors_equal(const ChoiceVector& a, const ChoiceVector& b, const ToleranceContext& ctx) {
    if (a.levels.size() != b.levels.size()) return false;
    for (size_t i = 0; i < a.levels.size(); ++i) {
        if (a.levels[i].size() != b.levels[i].size()) return false;
        for (size_t k = 0; k < a.levels[i].size(); ++k) {
            const auto& ea = a.levels[i][k];
            bool found = false;
            for (size_t l = 0; l < b.levels[i].size(); ++l) {
                const auto& eb = b.levels[i][l];
                double sc = std::max(ea.root.abs_approx(), eb.root.abs_approx());
                if (tol_eq(ea.root, eb.root, ctx, sc)) {
                    found = eb.choice == ea.choice;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

} // namespace gz
