#include "zc/errors.hpp"
#include "zc/saddle.hpp"

namespace zc::saddle {

namespace bmp = boost::multiprecision;

namespace {

// log(tau+c), log(c-tau), log(tau-1), log(tau+1) on the cut plane or its upper bank.
struct Logs {
    Complex plus_c, c_minus, minus_1, plus_1;
};

bool on_cut(const SaddlePlane& p, const Complex& tau) {
    return tau.im == 0 && (tau.re <= 1 || tau.re >= p.c());
}

Logs logs_at(const SaddlePlane& p, const Complex& tau, Bank bank) {
    p.validate();
    const Real c(p.c());
    Logs L;
    if (bank == Bank::Upper) {
        if (tau.im != 0 || tau.re <= c) throw InputError("upper bank needs real tau > 2r+1");
        L.plus_c = Complex(bmp::log(tau.re + c));
        L.c_minus = Complex(bmp::log(tau.re - c), -real_pi());
        L.minus_1 = Complex(bmp::log(tau.re - 1));
        L.plus_1 = Complex(bmp::log(tau.re + 1));
        return L;
    }
    if (on_cut(p, tau)) throw InputError("tau lies on a cut; pass a bank tag");
    L.plus_c = log(tau + Complex(c));
    L.c_minus = log(Complex(c) - tau);
    L.minus_1 = log(tau - Complex(Real(1)));
    L.plus_1 = log(tau + Complex(Real(1)));
    return L;
}

}  // namespace

void SaddlePlane::validate() const {
    if (a < 3 || a % 2 == 0) throw InputError("a must be odd and >= 3");
    if (r < 1) throw InputError("r must be >= 1");
    if (6L * r > a) throw InputError("need 6r <= a");
}

Complex f_eval(const SaddlePlane& p, const Complex& tau, Bank bank) {
    Logs L = logs_at(p, tau, bank);
    const Real c(p.c()), a3(p.a + 3);
    Complex one(Real(1));
    Complex out = Real(3) * ((tau + Complex(c)) * L.plus_c);
    out += Real(3) * ((Complex(c) - tau) * L.c_minus);
    out += a3 * ((tau - one) * L.minus_1);
    out -= a3 * ((tau + one) * L.plus_1);
    out += Complex(Real(2 * (p.a - 6 * p.r)) * bmp::log(Real(2)));
    return out;
}

Complex f_prime(const SaddlePlane& p, const Complex& tau, Bank bank) {
    Logs L = logs_at(p, tau, bank);
    const Real a3(p.a + 3);
    return Real(3) * (L.plus_c - L.c_minus) + a3 * (L.minus_1 - L.plus_1);
}

Complex f_second(const SaddlePlane& p, const Complex& tau) {
    p.validate();
    const Real c(p.c()), a3(p.a + 3);
    Complex one(Real(1));
    Complex out = Complex(Real(3)) / (tau + Complex(c));
    out += Complex(Real(3)) / (Complex(c) - tau);
    out += Complex(a3) / (tau - one);
    out -= Complex(a3) / (tau + one);
    return out;
}

Complex f0_eval(const SaddlePlane& p, const Complex& tau, Bank bank) {
    return f_eval(p, tau, bank) - tau * f_prime(p, tau, bank);
}

Real arg_g(const SaddlePlane& p, const Complex& tau) {
    Logs L = logs_at(p, tau, Bank::None);
    const Real a3(p.a + 3);
    return Real(3) / 2 * (L.plus_c.im + L.c_minus.im) - a3 / 2 * (L.plus_1.im + L.minus_1.im);
}

Angles angles_at(const SaddlePlane& p, const Complex& tau0) {
    const Real c(p.c());
    Angles A;
    A.alpha_plus = arg(tau0 - Complex(Real(1)));
    A.alpha_minus = arg(tau0 + Complex(Real(1)));
    A.beta_plus = -arg(Complex(c) - tau0);
    A.beta_minus = arg(tau0 + Complex(c));
    A.identity_residual =
        3 * (A.beta_minus + A.beta_plus) + Real(p.a + 3) * (A.alpha_plus - A.alpha_minus) - real_pi();
    return A;
}

}  // namespace zc::saddle
