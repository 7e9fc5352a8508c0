#include <gz/scalar.hpp>

#include <cmath>

namespace gz {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::MixedMode: return "mixed-mode";
    case ErrorKind::Index: return "index";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::NotRegular: return "not-regular";
    case ErrorKind::NotStronglyRegular: return "not-strongly-regular";
    case ErrorKind::ExactUnsupported: return "exact-unsupported";
    case ErrorKind::NonSplitting: return "non-splitting";
    case ErrorKind::Diagnostic: return "diagnostic";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

void ToleranceContext::validate() const {
    if (eps_rank <= 0 || eps_root <= 0 || eps_eq <= 0)
        throw Error(ErrorKind::Schema, "tolerances must be strictly positive");
}

double ToleranceContext::eq_threshold(double scale) const {
    return eps_eq * std::max(1.0, scale);
}

double ToleranceContext::root_threshold(double scale) const {
    return eps_root * std::max(1.0, scale);
}

Scalar Scalar::exact(Rational re, Rational im) {
    Scalar s;
    re.canonicalize();
    im.canonicalize();
    s.v_ = ExactComplex{std::move(re), std::move(im)};
    return s;
}

Scalar Scalar::exact_int(long re, long im) {
    return exact(Rational(re), Rational(im));
}

Scalar Scalar::flt(double re, double im) {
    Scalar s;
    s.v_ = std::complex<double>(re, im);
    return s;
}

Scalar Scalar::flt(std::complex<double> z) {
    Scalar s;
    s.v_ = z;
    return s;
}

Scalar Scalar::zero(Mode m) { return integer(0, m); }
Scalar Scalar::one(Mode m) { return integer(1, m); }

Scalar Scalar::integer(long k, Mode m) {
    return m == Mode::Exact ? exact_int(k) : flt(double(k));
}

const Rational& Scalar::re_q() const {
    if (!is_exact()) throw Error(ErrorKind::MixedMode, "re_q on float scalar");
    return std::get<ExactComplex>(v_).re;
}

const Rational& Scalar::im_q() const {
    if (!is_exact()) throw Error(ErrorKind::MixedMode, "im_q on float scalar");
    return std::get<ExactComplex>(v_).im;
}

std::complex<double> Scalar::to_complex() const {
    if (is_exact()) {
        const auto& e = std::get<ExactComplex>(v_);
        return {e.re.get_d(), e.im.get_d()};
    }
    return std::get<std::complex<double>>(v_);
}

bool Scalar::structurally_zero() const {
    if (is_exact()) {
        const auto& e = std::get<ExactComplex>(v_);
        return sgn(e.re) == 0 && sgn(e.im) == 0;
    }
    auto z = std::get<std::complex<double>>(v_);
    return z.real() == 0.0 && z.imag() == 0.0;
}

double Scalar::abs_approx() const {
    auto z = to_complex();
    return std::hypot(z.real(), z.imag());
}

Rational Scalar::abs2_q() const {
    const auto& e = std::get<ExactComplex>(v_);
    return e.re * e.re + e.im * e.im;
}

Scalar Scalar::conj() const {
    if (is_exact()) {
        const auto& e = std::get<ExactComplex>(v_);
        return exact(e.re, -e.im);
    }
    return flt(std::conj(std::get<std::complex<double>>(v_)));
}

Scalar Scalar::operator-() const {
    if (is_exact()) {
        const auto& e = std::get<ExactComplex>(v_);
        return exact(-e.re, -e.im);
    }
    return flt(-std::get<std::complex<double>>(v_));
}

Mode require_same_mode(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode())
        throw Error(ErrorKind::MixedMode, "scalar operands have different arithmetic modes");
    return a.mode();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (require_same_mode(a, b) == Mode::Exact) {
        const auto& x = std::get<ExactComplex>(a.v_);
        const auto& y = std::get<ExactComplex>(b.v_);
        return Scalar::exact(x.re + y.re, x.im + y.im);
    }
    return Scalar::flt(std::get<std::complex<double>>(a.v_) + std::get<std::complex<double>>(b.v_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (require_same_mode(a, b) == Mode::Exact) {
        const auto& x = std::get<ExactComplex>(a.v_);
        const auto& y = std::get<ExactComplex>(b.v_);
        return Scalar::exact(x.re - y.re, x.im - y.im);
    }
    return Scalar::flt(std::get<std::complex<double>>(a.v_) - std::get<std::complex<double>>(b.v_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (require_same_mode(a, b) == Mode::Exact) {
        const auto& x = std::get<ExactComplex>(a.v_);
        const auto& y = std::get<ExactComplex>(b.v_);
        return Scalar::exact(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }
    return Scalar::flt(std::get<std::complex<double>>(a.v_) * std::get<std::complex<double>>(b.v_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.structurally_zero())
        throw Error(ErrorKind::Singular, "division by zero scalar");
    if (require_same_mode(a, b) == Mode::Exact) {
        const auto& x = std::get<ExactComplex>(a.v_);
        const auto& y = std::get<ExactComplex>(b.v_);
        Rational d = y.re * y.re + y.im * y.im;
        return Scalar::exact((x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d);
    }
    return Scalar::flt(std::get<std::complex<double>>(a.v_) / std::get<std::complex<double>>(b.v_));
}

bool Scalar::operator==(const Scalar& b) const {
    if (mode() != b.mode()) return false;
    if (is_exact()) {
        const auto& x = std::get<ExactComplex>(v_);
        const auto& y = std::get<ExactComplex>(b.v_);
        return x.re == y.re && x.im == y.im;
    }
    return std::get<std::complex<double>>(v_) == std::get<std::complex<double>>(b.v_);
}

std::string Scalar::str() const {
    if (is_exact()) {
        const auto& e = std::get<ExactComplex>(v_);
        std::string s = e.re.get_str();
        if (sgn(e.im) != 0) s += (sgn(e.im) > 0 ? "+" : "") + e.im.get_str() + "i";
        return s;
    }
    auto z = std::get<std::complex<double>>(v_);
    std::string s = std::to_string(z.real());
    if (z.imag() != 0.0) s += (z.imag() > 0 ? "+" : "") + std::to_string(z.imag()) + "i";
    return s;
}

bool lex_greater(const Scalar& a, const Scalar& b, const ToleranceContext& ctx) {
    if (require_same_mode(a, b) == Mode::Exact) {
        int c = cmp(a.re_q(), b.re_q());
        if (c != 0) return c > 0;
        return cmp(a.im_q(), b.im_q()) > 0;
    }
    auto za = a.to_complex(), zb = b.to_complex();
    double th = ctx.eq_threshold(std::max(a.abs_approx(), b.abs_approx()));
    if (std::abs(za.real() - zb.real()) > th) return za.real() > zb.real();
    if (std::abs(za.imag() - zb.imag()) > th) return za.imag() > zb.imag();
    return false;
}

bool tol_eq(const Scalar& a, const Scalar& b, const ToleranceContext& ctx, double scale) {
    if (require_same_mode(a, b) == Mode::Exact) return a == b;
    return std::abs(a.to_complex() - b.to_complex()) <= ctx.eq_threshold(scale);
}

bool tol_zero(const Scalar& a, const ToleranceContext& ctx, double scale) {
    if (a.is_exact()) return a.structurally_zero();
    return a.abs_approx() <= ctx.eq_threshold(scale);
}

} // namespace gz
