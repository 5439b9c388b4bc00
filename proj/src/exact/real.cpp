#include "zc/real.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "zc/errors.hpp"

namespace zc {

WorkingDigits::WorkingDigits(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
}

WorkingDigits::~WorkingDigits() { Real::default_precision(saved_); }

unsigned current_digits() { return Real::default_precision(); }

Real to_real(const exact::BigInt& x) {
    Real r;
    mpfr_set_z(r.backend().data(), x.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(const exact::BigRational& x) {
    Real r;
    mpfr_set_q(r.backend().data(), x.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real real_pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

std::string to_decimal(const Real& x, unsigned digits) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(static_cast<int>(digits)) << x;
    return os.str();
}

Real parse_real(const std::string& s) {
    Real r;
    if (mpfr_set_str(r.backend().data(), s.c_str(), 10, MPFR_RNDN) != 0)
        throw InputError("not a real number: '" + s + "'");
    return r;
}

double log10_abs(const Real& x) {
    if (x == 0) return -INFINITY;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, x.backend().data(), MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    // Smith's scaling avoids overflow in |o|^2
    if (boost::multiprecision::abs(o.re) >= boost::multiprecision::abs(o.im)) {
        Real t = o.im / o.re;
        Real d = o.re + o.im * t;
        Real r = (re + im * t) / d;
        im = (im - re * t) / d;
        re = std::move(r);
    } else {
        Real t = o.re / o.im;
        Real d = o.re * t + o.im;
        Real r = (re * t + im) / d;
        im = (im * t - re) / d;
        re = std::move(r);
    }
    return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(const Real& s, const Complex& z) { return {s * z.re, s * z.im}; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const Complex& z) {
    if (z.im == 0 && z.re < 0) return real_pi();
    return boost::multiprecision::atan2(z.im, z.re);
}

Complex log(const Complex& z) {
    if (z.re == 0 && z.im == 0) throw NumericError("log of zero");
    return {boost::multiprecision::log(abs(z)), arg(z)};
}

Complex exp(const Complex& z) {
    Real m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex powi(Complex z, unsigned long e) {
    Complex acc(Real(1));
    while (e) {
        if (e & 1) acc *= z;
        e >>= 1;
        if (e) z *= z;
    }
    return acc;
}

Complex polar(const Real& r, const Real& theta) {
    return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

Real reduce_angle(const Real& x) {
    Real two_pi = 2 * real_pi();
    Real y = x - two_pi * boost::multiprecision::floor(x / two_pi);  // [0, 2pi)
    if (y > real_pi()) y -= two_pi;
    return y;
}

Real distance_mod(const Real& x, const Real& c, const Real& period) {
    Real y = (x - c) / period;
    Real d = y - boost::multiprecision::round(y);
    return boost::multiprecision::abs(d) * period;
}

}  // namespace zc
