#pragma once

#include <utility>
#include <vector>

#include "zc/exact.hpp"
#include "zc/real.hpp"

namespace zc::exact {

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class QPolynomial {
public:
    static constexpr long kZeroDegree = -1;

    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigRational> coeffs);
    static QPolynomial constant(const BigRational& c);
    static QPolynomial monomial(const BigRational& c, unsigned long deg);
    // (x - root)
    static QPolynomial linear_factor(const BigRational& root);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational coeff(unsigned long k) const;
    BigRational leading() const;

    BigRational operator()(const BigRational& x) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const QPolynomial& o);
    QPolynomial& operator*=(const BigRational& s);

    QPolynomial pow(unsigned long e) const;
    QPolynomial derivative() const;
    // p(x + h) as a polynomial in x
    QPolynomial shift(const BigRational& h) const;
    // quotient and remainder; throws on division by zero polynomial
    std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& d) const;

    bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const QPolynomial& o) const { return !(*this == o); }

private:
    void trim();
    std::vector<BigRational> c_;
};

QPolynomial operator+(QPolynomial a, const QPolynomial& b);
QPolynomial operator-(QPolynomial a, const QPolynomial& b);
QPolynomial operator*(QPolynomial a, const QPolynomial& b);

// Truncated power series in h with rational coefficients (index = power).
std::vector<BigRational> series_divide(const std::vector<BigRational>& num,
                                       const std::vector<BigRational>& den, size_t terms);

}  // namespace zc::exact

namespace zc {

struct PolyEval {
    Complex value;
    Real error_bound;  // absolute, from running error analysis of Horner's rule
};

// Horner evaluation at the current working precision plus `guard` digits.
PolyEval poly_eval_precise(const exact::QPolynomial& p, const Complex& x, unsigned guard = 20);

}  // namespace zc
