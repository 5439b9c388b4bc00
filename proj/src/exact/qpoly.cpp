#include "zc/qpoly.hpp"

#include "zc/errors.hpp"

namespace zc::exact {

QPolynomial::QPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(const BigRational& c) { return QPolynomial({c}); }

QPolynomial QPolynomial::monomial(const BigRational& c, unsigned long deg) {
    std::vector<BigRational> v(deg + 1, BigRational(0));
    v[deg] = c;
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::linear_factor(const BigRational& root) { return QPolynomial({-root, 1}); }

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational QPolynomial::coeff(unsigned long k) const { return k < c_.size() ? c_[k] : BigRational(0); }

BigRational QPolynomial::leading() const { return c_.empty() ? BigRational(0) : c_.back(); }

BigRational QPolynomial::operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<BigRational> out(c_.size() + o.c_.size() - 1, BigRational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const BigRational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

QPolynomial QPolynomial::pow(unsigned long e) const {
    QPolynomial acc = constant(1);
    QPolynomial base = *this;
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

QPolynomial QPolynomial::derivative() const {
    std::vector<BigRational> out;
    for (size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * BigRational(static_cast<long>(k)));
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shift(const BigRational& h) const {
    // Horner in polynomial arithmetic: p(x+h) = (...(c_n (x+h) + c_{n-1})(x+h) ...)
    QPolynomial acc;
    QPolynomial xh({h, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= xh;
        acc += constant(*it);
    }
    return acc;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& d) const {
    if (d.is_zero()) throw InputError("polynomial division by zero");
    std::vector<BigRational> rem = c_;
    long dn = d.degree();
    long qn = degree() - dn;
    if (qn < 0) return {QPolynomial(), *this};
    std::vector<BigRational> quo(static_cast<size_t>(qn + 1), BigRational(0));
    BigRational lead = d.leading();
    for (long k = qn; k >= 0; --k) {
        BigRational q = rem[static_cast<size_t>(k + dn)] / lead;
        quo[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (long m = 0; m <= dn; ++m) rem[static_cast<size_t>(k + m)] -= q * d.c_[static_cast<size_t>(m)];
    }
    rem.resize(static_cast<size_t>(dn));
    return {QPolynomial(std::move(quo)), QPolynomial(std::move(rem))};
}

QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }

std::vector<BigRational> series_divide(const std::vector<BigRational>& num,
                                       const std::vector<BigRational>& den, size_t terms) {
    if (den.empty() || den[0] == 0) throw InputError("series division needs a unit constant term");
    std::vector<BigRational> out(terms, BigRational(0));
    BigRational inv0 = 1 / den[0];
    for (size_t m = 0; m < terms; ++m) {
        BigRational acc = m < num.size() ? num[m] : BigRational(0);
        for (size_t p = 1; p <= m && p < den.size(); ++p) acc -= den[p] * out[m - p];
        out[m] = acc * inv0;
    }
    return out;
}

}  // namespace zc::exact

namespace zc {

PolyEval poly_eval_precise(const exact::QPolynomial& p, const Complex& x, unsigned guard) {
    unsigned caller = current_digits();
    PolyEval out;
    Real absx;
    Real mag = 0;
    {
        WorkingDigits wd(caller + guard);
        Complex xx(Real(x.re), Real(x.im));
        absx = abs(xx);
        Complex acc;
        const auto& c = p.coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            acc = acc * xx + Complex(to_real(*it));
            mag = mag * absx + boost::multiprecision::abs(to_real(*it));
        }
        out.value = acc;
    }
    // round back to the caller's precision
    out.value = Complex(Real(out.value.re, caller), Real(out.value.im, caller));
    Real u = boost::multiprecision::pow(Real(10), -static_cast<int>(caller + guard));
    long deg = p.degree() < 0 ? 0 : p.degree();
    Real rounding = boost::multiprecision::pow(Real(10), -static_cast<int>(caller));
    out.error_bound = Real(4 * deg + 4) * u * mag + rounding * abs(out.value);
    return out;
}

}  // namespace zc
