#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "zc/exact.hpp"

namespace zc {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the default decimal precision for newly created Reals; restores on exit.
class WorkingDigits {
public:
    explicit WorkingDigits(unsigned digits10);
    ~WorkingDigits();
    WorkingDigits(const WorkingDigits&) = delete;
    WorkingDigits& operator=(const WorkingDigits&) = delete;

private:
    unsigned saved_;
};

unsigned current_digits();

Real to_real(const exact::BigInt& x);
Real to_real(const exact::BigRational& x);
Real real_pi();
// Decimal string with the given number of significant digits (scientific).
std::string to_decimal(const Real& x, unsigned digits);
Real parse_real(const std::string& s);
// log10|x| as a double; -inf for zero.
double log10_abs(const Real& x);

struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit from real is intended
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Real& s, const Complex& z);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm2(const Complex& z);
Real arg(const Complex& z);          // principal value in (-pi, pi]
Complex log(const Complex& z);       // principal branch
Complex exp(const Complex& z);
Complex powi(Complex z, unsigned long e);  // binary powering
Complex polar(const Real& r, const Real& theta);

// Reduce an angle to (-pi, pi].
Real reduce_angle(const Real& x);
// Distance from x to the coset c + period*Z.
Real distance_mod(const Real& x, const Real& c, const Real& period);

}  // namespace zc
