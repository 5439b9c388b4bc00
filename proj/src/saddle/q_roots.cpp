#include <algorithm>
#include <array>
#include <cmath>

#include "zc/errors.hpp"
#include "zc/saddle.hpp"

namespace zc::saddle {

namespace bmp = boost::multiprecision;

namespace {

Real pow10(long e) { return bmp::pow(Real(10), Real(e)); }

// log of the ratio of the two products in Q, for real x > 2r+1
Real log_ratio(const SaddlePlane& p, const Real& x) {
    const Real c(p.c()), a3(p.a + 3);
    return 3 * bmp::log(x + c) + a3 * bmp::log(x - 1) - 3 * bmp::log(x - c) - a3 * bmp::log(x + 1);
}

Real log_ratio_prime(const SaddlePlane& p, const Real& x) {
    const Real c(p.c()), a3(p.a + 3);
    return 3 / (x + c) + a3 / (x - 1) - 3 / (x - c) - a3 / (x + 1);
}

Real scaled_residual(const SaddlePlane& p, const Complex& x) { return abs(q_eval(p, x)) / q_scale(p, x); }

// log R(tau), R = (tau-c)^3 (tau+1)^{a+3} / ((tau+c)^3 (tau-1)^{a+3})
Complex log_r(const SaddlePlane& p, const Complex& tau) {
    const Real c(p.c()), a3(p.a + 3);
    Complex one(Real(1));
    return Real(3) * (log(tau - Complex(c)) - log(tau + Complex(c))) + a3 * (log(tau + one) - log(tau - one));
}

Real arg_one_minus_r(const SaddlePlane& p, const Complex& tau) {
    Complex lr = log_r(p, tau);
    if (lr.re > 60) return reduce_angle(lr.im + real_pi());
    return arg(Complex(Real(1)) - exp(lr));
}

// accumulated change of arg(1 - R) along the segment u -> v
Real winding_segment(const SaddlePlane& p, const Complex& u, const Complex& v, const Real& au, const Real& av,
                     int depth) {
    Real d = reduce_angle(av - au);
    // the factors of R can turn by at most (a+6) L / dist along a segment of length L
    Complex m0 = Real(0.5) * (u + v);
    Real len = abs(v - u), dist = -1;
    for (long b : {1L, -1L, p.c(), -p.c()}) {
        Real e = abs(m0 - Complex(Real(b)));
        if (dist < 0 || e < dist) dist = e;
    }
    dist -= len / 2;
    bool smooth = dist > 0 && Real(p.a + 6) * len / dist < real_pi() / 2;
    if ((bmp::abs(d) < real_pi() / 4 && smooth) || depth > 60) return d;
    Real am = arg_one_minus_r(p, m0);
    return winding_segment(p, u, m0, au, am, depth + 1) + winding_segment(p, m0, v, am, av, depth + 1);
}

bool in_quadrant(const Complex& z) { return z.re > 0 && z.im > 0; }

struct NewtonOut {
    Complex z;
    bool ok = false;
    int steps = 0;
    Real last_step;
};

// Newton on f'(tau) = (3 - 2k) i pi with steps capped away from the branch points.
// In the upper half plane f' = 3 i pi - log R, so these are the roots of Q there.
NewtonOut newton_tau(const SaddlePlane& p, Complex z, unsigned digits, long k = 1) {
    NewtonOut out;
    const Complex target(Real(0), Real(3 - 2 * k) * real_pi());
    const Complex cc(Real(p.c())), one(Real(1));
    const Real tol = pow10(-static_cast<long>(digits) + 5);
    int polish = 0;
    for (int it = 0; it < 400; ++it) {
        if (!in_quadrant(z)) return out;
        Complex F = f_prime(p, z) - target;
        Complex step = -F / f_second(p, z);
        Real cap = std::min(abs(z - cc), abs(z - one)) / 2;
        cap = std::min(cap, z.im * 2);
        Real len = abs(step);
        if (len > cap) step = (cap / len) * step;
        Complex next = z + step;
        int halvings = 0;
        while (!in_quadrant(next) && halvings < 60) {
            step = Real(0.5) * step;
            next = z + step;
            ++halvings;
        }
        z = next;
        out.steps = it + 1;
        out.last_step = abs(step);
        if (out.last_step < tol * std::max(Real(1), abs(z))) {
            if (++polish >= 2) {
                out.ok = in_quadrant(z);
                out.z = z;
                return out;
            }
        }
    }
    out.z = z;
    return out;
}

}  // namespace

int r_of_a(long a) {
    if (a < 3) throw InputError("a must be >= 3");
    long double x = static_cast<long double>(a) * std::exp(-std::sqrt(std::log(static_cast<long double>(a))));
    long r = std::max(1L, static_cast<long>(std::floor(x)));
    while (6 * r > a && r > 1) --r;
    return static_cast<int>(r);
}

Real nu_of_a(long a) {
    Real la = bmp::log(Real(a));
    return bmp::exp(-bmp::exp(bmp::cbrt(la)));
}

unsigned root_digits(long a) {
    return 30 + 10 * static_cast<unsigned>(std::ceil(std::log10(static_cast<double>(std::max(a, 2L)))));
}

Complex q_eval(const SaddlePlane& p, const Complex& x) {
    p.validate();
    const Complex cc(Real(p.c())), one(Real(1));
    const unsigned long e = static_cast<unsigned long>(p.a + 3);
    return powi(x + cc, 3) * powi(x - one, e) - powi(x - cc, 3) * powi(x + one, e);
}

Real q_scale(const SaddlePlane& p, const Complex& x) {
    Real m = abs(x);
    return bmp::pow(m + p.c(), 3) * bmp::pow(m + 1, Real(p.a + 3));
}

Mu1Result find_mu1(const SaddlePlane& p, unsigned digits) {
    p.validate();
    WorkingDigits wd(digits + 10);
    const Real c(p.c());
    // geometric window search for a sign change of log R above c
    Real h = 1, lo, hi;
    if (log_ratio(p, c + h) < 0) {
        int k = 0;
        while (log_ratio(p, c + h) < 0) {
            h /= 2;
            if (++k > 20000) throw NumericError("no sign change of Q above 2r+1");
        }
        lo = c + h;
        hi = c + 2 * h;
    } else {
        int k = 0;
        while (log_ratio(p, c + h) >= 0) {
            h *= 2;
            if (++k > 200) throw NumericError("no sign change of Q above 2r+1");
        }
        lo = c + h / 2;
        hi = c + h;
    }
    Mu1Result res;
    res.cert.method = "bisection+newton";
    for (int i = 0; i < 60; ++i) {
        Real mid = (lo + hi) / 2;
        (log_ratio(p, mid) >= 0 ? lo : hi) = mid;
    }
    Real x = (lo + hi) / 2;
    const Real tol = pow10(-static_cast<long>(digits) - 5);
    for (int it = 0; it < 200; ++it) {
        Real step = -log_ratio(p, x) / log_ratio_prime(p, x);
        Real next = x + step;
        if (next <= lo || next >= hi) next = (lo + hi) / 2;
        (log_ratio(p, next) >= 0 ? lo : hi) = next;
        res.cert.newton_steps = it + 1;
        res.cert.last_step = bmp::abs(next - x);
        x = next;
        if (res.cert.last_step < tol * x) break;
    }
    Real w = pow10(-static_cast<long>(digits) + 5) * x;
    res.cert.bracket_lo = x - w;
    res.cert.bracket_hi = x + w;
    if (!(log_ratio(p, x - w) > 0 && log_ratio(p, x + w) < 0)) throw NumericError("mu1 bracket certificate failed");
    res.cert.residual = scaled_residual(p, Complex(x));
    res.mu1 = x;
    return res;
}

int count_roots_in_rect(const SaddlePlane& p, const Real& x0, const Real& x1, const Real& y0, const Real& y1) {
    p.validate();
    const std::array<Complex, 4> corners{Complex(x0, y0), Complex(x1, y0), Complex(x1, y1), Complex(x0, y1)};
    std::array<Real, 4> args;
    for (size_t i = 0; i < 4; ++i) args[i] = arg_one_minus_r(p, corners[i]);
    Real total = 0;
    for (size_t i = 0; i < 4; ++i)
        total += winding_segment(p, corners[i], corners[(i + 1) % 4], args[i], args[(i + 1) % 4], 0);
    long wind = std::lround(static_cast<double>(total / (2 * real_pi())));
    // Q = (tau+c)^3 (tau-1)^{a+3} (1 - R): zeros of Q = winding of 1 - R + its poles inside
    const Real c(p.c());
    if (x0 < 1 && 1 < x1 && y0 < 0 && 0 < y1) wind += p.a + 3;
    if (x0 < -c && -c < x1 && y0 < 0 && 0 < y1) wind += 3;
    return static_cast<int>(wind);
}

Tau0Result find_tau0(const SaddlePlane& p, unsigned digits, bool force_fallback) {
    p.validate();
    WorkingDigits wd(digits + 10);
    const Real c(p.c());
    Tau0Result res;
    if (!force_fallback) {
        Real delta = std::min(Real("0.1"), nu_of_a(p.a));
        Complex z0 = Complex(c) + polar(delta, 2 * real_pi() / 3);
        NewtonOut nt = newton_tau(p, z0, digits);
        if (nt.ok) {
            res.tau0 = nt.z;
            res.cert.method = "newton";
            res.cert.newton_steps = nt.steps;
            res.cert.last_step = nt.last_step;
            res.cert.residual = scaled_residual(p, nt.z);
            return res;
        }
    }
    // argument-principle subdivision over (0, 2c] x [eta, c]
    Real x0 = pow10(-4), x1 = 2 * c, y0 = pow10(-4), y1 = c;
    if (count_roots_in_rect(p, x0, x1, y0, y1) < 1) throw NumericError("no root of Q found in the first quadrant");
    for (int depth = 0; depth < 80 && (x1 - x0 > pow10(-4) || y1 - y0 > pow10(-4)); ++depth) {
        bool split_x = (x1 - x0) >= (y1 - y0);
        Real mid = split_x ? (x0 + x1) / 2 : (y0 + y1) / 2;
        bool first = split_x ? count_roots_in_rect(p, x0, mid, y0, y1) > 0 : count_roots_in_rect(p, x0, x1, y0, mid) > 0;
        if (split_x)
            (first ? x1 : x0) = mid;
        else
            (first ? y1 : y0) = mid;
    }
    Complex centre((x0 + x1) / 2, (y0 + y1) / 2);
    long k = std::lround(static_cast<double>((3 * real_pi() - f_prime(p, centre).im) / (2 * real_pi())));
    NewtonOut nt = newton_tau(p, centre, digits, k);
    if (!nt.ok) throw NumericError("Newton failed after argument-principle localization");
    res.tau0 = nt.z;
    res.used_fallback = true;
    res.cert.method = "argument-principle+newton";
    res.cert.newton_steps = nt.steps;
    res.cert.last_step = nt.last_step;
    res.cert.residual = scaled_residual(p, nt.z);
    return res;
}

int sign_changes(const SaddlePlane& p, const Real& lo, const Real& hi, int samples) {
    if (samples < 2) throw InputError("need at least two samples");
    int changes = 0, prev = 0;
    for (int k = samples - 1; k >= 0; --k) {
        Real x = lo + (hi - lo) * bmp::pow(Real(2), Real(-k));
        Complex q = q_eval(p, Complex(x));
        int s = q.re > 0 ? 1 : (q.re < 0 ? -1 : 0);
        if (s != 0 && prev != 0 && s != prev) ++changes;
        if (s != 0) prev = s;
    }
    return changes;
}

}  // namespace zc::saddle
