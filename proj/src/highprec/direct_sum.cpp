#include <algorithm>
#include <cmath>

#include "zc/errors.hpp"
#include "zc/highprec.hpp"

namespace zc::hp {

namespace bmp = boost::multiprecision;
using exact::BigInt;
using exact::BigRational;
using forms::FormKind;
using forms::FormSpec;

namespace {

constexpr double kLn10 = 2.302585092994046;

Real pow10(long e) { return bmp::pow(Real(10), Real(e)); }

// Block of consecutive roots lo..hi of R with signed multiplicity (negative for poles).
struct Block {
    long lo, hi;
    long m;
};

std::vector<Block> blocks_of(const FormSpec& s) {
    const long n = s.n, w = static_cast<long>(2 * s.r + 1) * s.n;
    return {{n + 1, w, 3}, {-w, -n - 1, 3}, {-n, n, -s.a}};
}

// Z(s) = T^s zeta(s, T) for s = s0, s0 + 2, ..., each with an error bound.
struct ZTable {
    std::vector<Real> value, error;
};

ZTable z_table(long T, long s0, size_t count, unsigned digits) {
    ZTable out;
    const double s_max = static_cast<double>(s0 + 2 * static_cast<long>(count));
    const long N = em_start_offset(s_max, static_cast<double>(T), digits);
    const Real eps = pow10(-static_cast<long>(digits) - 5);
    const Real Tr(T);
    const Real x0 = Tr + N;
    std::vector<Real> w2(static_cast<size_t>(N)), v(static_cast<size_t>(N));
    for (long k = 0; k < N; ++k) {
        Real w = Tr / (Tr + k);
        w2[static_cast<size_t>(k)] = w * w;
        v[static_cast<size_t>(k)] = bmp::pow(w, Real(s0));
    }
    Real ratio = Tr / x0;
    Real ratio_sq = ratio * ratio;
    Real scale = bmp::pow(ratio, Real(s0));  // (T/x0)^s
    const Real inv_x0_sq = 1 / (x0 * x0);
    std::vector<Real> c = em_coefficients(64);
    for (size_t idx = 0; idx < count; ++idx) {
        const Real s(s0 + 2 * static_cast<long>(idx));
        Real direct = 0;
        for (auto& x : v) direct += x;
        Real em = x0 / (s - 1) + Real(1) / 2;
        Real poch = s, xpow = 1 / x0, prev = -1, last = 0;
        bool ok = false;
        for (size_t j = 1; j < 100000; ++j) {
            if (j > c.size()) c = em_coefficients(2 * c.size());
            Real term = c[j - 1] * poch * xpow;
            Real at = bmp::abs(term);
            if (prev >= 0 && at > prev) break;
            em += term;
            last = prev = at;
            if (at < eps * bmp::abs(em)) {
                ok = true;
                break;
            }
            poch *= (s + Real(2 * j - 1)) * (s + Real(2 * j));
            xpow *= inv_x0_sq;
        }
        if (!ok) throw NumericError("Euler-Maclaurin tail did not converge");
        Real total = direct + scale * em;
        out.value.push_back(total);
        out.error.push_back(2 * last * scale + eps * total * Real(N + 10));
        for (size_t k = 0; k < v.size(); ++k) v[k] *= w2[k];
        scale *= ratio_sq;
    }
    return out;
}

struct TailPlan {
    size_t terms = 0;        // number of even m kept (m = 0, 2, ..., 2(terms-1))
    double log10_bound = 0;  // log10 of the Cauchy bound B_rho
    double log10_q = 0;      // log10(rho T)
};

// Cauchy estimate on |u| = rho for E(u) = prod (1 - z u)^m: |e_m| <= B_rho rho^{-m}.
TailPlan plan_tail(const FormSpec& s, long T, double log10_prefactor, unsigned digits) {
    const auto blocks = blocks_of(s);
    TailPlan best;
    best.terms = 0;
    for (double theta : {0.3, 0.5, 0.7, 0.85}) {
        const double rho = theta / s.n;
        double lb = 0;
        for (const auto& b : blocks)
            for (long z = b.lo; z <= b.hi; ++z) {
                if (z == 0) continue;
                double az = std::fabs(static_cast<double>(z));
                lb += b.m > 0 ? b.m * std::log1p(az * rho) : -b.m * -std::log1p(-az * rho);
            }
        TailPlan p;
        p.log10_bound = lb / kLn10;
        p.log10_q = std::log10(rho * static_cast<double>(T));
        if (p.log10_q <= 0.05) continue;
        // remainder <= prefactor * B (rho T)^{-M} / (1 - 1/(rho T)) * Z(D)
        double need = p.log10_bound + log10_prefactor + digits + 2 - std::log10(1 - std::pow(10.0, -p.log10_q));
        long M = static_cast<long>(std::ceil(need / p.log10_q));
        M = std::max(M, 2L);
        if (M % 2) ++M;
        p.terms = static_cast<size_t>(M / 2 + 1);
        if (best.terms == 0 || p.terms < best.terms) best = p;
    }
    if (best.terms == 0) throw NumericError("cutoff too small for the expansion at infinity");
    return best;
}

struct Attempt {
    DirectSum result;
    double head_log10_max = -1e300;
};

Attempt run(const FormSpec& s, FormKind kind, unsigned digits, unsigned work, long T) {
    WorkingDigits wd(work);
    Attempt at;
    const bool derived = kind == FormKind::DoubleDerived;
    const auto blocks = blocks_of(s);
    const long W = static_cast<long>(2 * s.r + 1) * s.n;
    const long D = s.decay_exponent();
    const long t0 = W + 1;

    // Head: t0 <= t < T
    forms::Summand summand = forms::build_summand(s);
    Real R = to_real(summand(BigRational(t0)));
    Real d1 = 0, d2 = 0;  // R'/R and (R'/R)'
    for (const auto& b : blocks)
        for (long z = b.lo; z <= b.hi; ++z) {
            Real u = Real(1) / Real(t0 - z);
            d1 += Real(b.m) * u;
            d2 -= Real(b.m) * u * u;
        }
    Real head = 0;
    double hmax = -1e300;
    for (long t = t0; t < T; ++t) {
        Real term = derived ? R * (d1 * d1 + d2) / 2 : R;
        head += term;
        if (term != 0) hmax = std::max(hmax, log10_abs(term));
        BigInt num = 1, den = 1;
        for (const auto& b : blocks) {
            BigInt p, q;
            BigInt top = t + 1 - b.lo, bot = t - b.hi;
            unsigned long e = static_cast<unsigned long>(std::labs(b.m));
            mpz_pow_ui(p.get_mpz_t(), top.get_mpz_t(), e);
            mpz_pow_ui(q.get_mpz_t(), bot.get_mpz_t(), e);
            if (b.m > 0) {
                num *= p;
                den *= q;
            } else {
                num *= q;
                den *= p;
            }
            Real u = Real(1) / Real(t + 1 - b.lo), v = Real(1) / Real(t - b.hi);
            d1 += Real(b.m) * (u - v);
            d2 -= Real(b.m) * (u * u - v * v);
        }
        R *= to_real(num);
        R /= to_real(den);
    }
    at.head_log10_max = hmax;

    // Tail: t >= T, R(t) = K t^{-D} E(1/t)
    const Real K = to_real(summand.scale);
    const Real Tr(T);
    const double log10_K_TD = exact::log_abs(summand.scale) / kLn10 - static_cast<double>(D) * std::log10(T);
    const double log10_zd = std::log10(1 + static_cast<double>(T) / static_cast<double>(D - 1));
    double log10_pref = std::max(0.0, log10_K_TD) + log10_zd;
    TailPlan plan = plan_tail(s, T, log10_pref, digits);
    if (derived) {
        // binom(D+m+1, 2) <= (D+m+1)^2 over the omitted range, refined once
        for (int pass = 0; pass < 2; ++pass) {
            double mult = 2 * std::log10(static_cast<double>(D + 4 * static_cast<long>(plan.terms) + 4));
            plan = plan_tail(s, T, log10_pref + mult, digits);
        }
        log10_pref += 2 * std::log10(static_cast<double>(D + 4 * static_cast<long>(plan.terms) + 4));
    }
    const size_t M = plan.terms;

    // scaled power sums P_p / T^p for even p, then e_m / T^m by Newton's identities
    std::vector<Real> psum(M, Real(0));
    for (const auto& b : blocks)
        for (long z = b.lo; z <= b.hi; ++z) {
            if (z == 0) continue;
            Real x = Real(z) / Tr;
            Real x2 = x * x, xp = 1;
            for (size_t i = 1; i < M; ++i) {
                xp *= x2;
                psum[i] += Real(b.m) * xp;
            }
        }
    std::vector<Real> e(M, Real(0));
    e[0] = 1;
    for (size_t i = 1; i < M; ++i) {
        Real acc = 0;
        for (size_t p = 1; p <= i; ++p) acc += psum[p] * e[i - p];
        e[i] = -acc / Real(2 * static_cast<long>(i));
    }

    const long shift = derived ? 2 : 0;
    ZTable z = z_table(T, D + shift, M, work);
    Real tail = 0, tail_err = 0;
    double tmax = -1e300;
    for (size_t i = 0; i < M; ++i) {
        Real coef = e[i];
        if (derived) {
            long sd = D + 2 * static_cast<long>(i);
            coef *= Real(sd) * Real(sd + 1) / 2;
        }
        tail += coef * z.value[i];
        if (coef != 0) tmax = std::max(tmax, log10_abs(coef * z.value[i]));
        tail_err += bmp::abs(coef) * z.error[i];
    }
    Real pref = K * bmp::pow(Tr, Real(-D - shift));
    tail *= pref;
    tail_err *= pref;
    // truncation: sum_{m > 2(M-1)} B (rho T)^{-m} * multiplier * Z
    double log10_trunc = log10_pref + plan.log10_bound - plan.log10_q * static_cast<double>(2 * M) -
                         std::log10(1 - std::pow(10.0, -plan.log10_q));
    tail_err += pow10(static_cast<long>(std::ceil(log10_trunc)));

    // rounding in the head: a few ulps per step, relative to the largest term
    double log10_round = hmax + std::log10(static_cast<double>(T) * 8) - static_cast<double>(work);
    Real round_err = hmax > -1e299 ? pow10(static_cast<long>(std::ceil(log10_round))) : Real(0);
    double log10_tround = tmax + log10_abs(pref) + std::log10(static_cast<double>(M * M) * 8) - static_cast<double>(work);
    round_err += pow10(static_cast<long>(std::ceil(log10_tround)));

    at.result.value = head + tail;
    at.result.error_bound = tail_err + round_err;
    at.result.cutoff = T;
    at.result.laurent_terms = static_cast<long>(M);
    at.result.digits_used = work;
    return at;
}

}  // namespace

DirectSum eval_S_direct(const FormSpec& spec, FormKind kind, const PrecisionContext& ctx, long cutoff_factor) {
    spec.validate();
    ctx.validate();
    if (cutoff_factor < 2) throw InputError("cutoff factor must be >= 2");
    const long W = static_cast<long>(2 * spec.r + 1) * spec.n;
    const long T = std::max(cutoff_factor * W, W + 2);
    const unsigned digits = ctx.total();
    unsigned work = digits + 20;
    for (int attempt = 0; attempt < 4; ++attempt) {
        Attempt at = run(spec, kind, digits, work, T);
        WorkingDigits wd(work);
        if (at.result.error_bound < pow10(-static_cast<long>(ctx.digits))) {
            DirectSum out = at.result;
            out.value = Real(out.value, digits);
            out.error_bound = Real(out.error_bound, digits);
            return out;
        }
        // enlarge the working precision by the observed shortfall
        double short_by = log10_abs(at.result.error_bound) + ctx.digits;
        work += static_cast<unsigned>(std::ceil(std::max(10.0, short_by + 10)));
    }
    throw NumericError("direct summation did not reach the requested accuracy");
}

}  // namespace zc::hp
