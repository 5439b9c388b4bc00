#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>

#include "zc/errors.hpp"
#include "zc/highprec.hpp"

namespace zc::hp {

namespace bmp = boost::multiprecision;

void PrecisionContext::validate() const {
    if (digits < 50) throw InputError("precision below 50 digits");
    if (guard < 10) throw InputError("guard below 10 digits");
}

PrecisionContext PrecisionContext::from_env(unsigned fallback_digits) {
    PrecisionContext ctx;
    ctx.digits = fallback_digits;
    if (const char* env = std::getenv("ZETACERT_DIGITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 50) throw InputError("ZETACERT_DIGITS must be an integer >= 50");
        ctx.digits = static_cast<unsigned>(v);
    }
    return ctx;
}

namespace {

Real pow10(long e) { return bmp::pow(Real(10), Real(e)); }

std::mutex g_cache_mutex;

}  // namespace

// B_{2j}/(2j)! = (-1)^{j+1} 2 zeta(2j) / (2 pi)^{2j}
std::vector<Real> em_coefficients(size_t count) {
    static std::map<unsigned, std::vector<Real>> cache;
    unsigned digits = current_digits();
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto& v = cache[digits];
    if (v.size() < count) {
        Real two_pi_sq = 4 * real_pi() * real_pi();
        Real scale = 1;
        for (size_t j = 1; j <= count; ++j) {
            scale /= two_pi_sq;
            if (j <= v.size()) continue;
            Real z;
            mpfr_zeta_ui(z.backend().data(), 2 * j, MPFR_RNDN);
            Real c = 2 * z * scale;
            v.push_back(j % 2 ? c : Real(-c));
        }
    }
    return {v.begin(), v.begin() + static_cast<long>(count)};
}

long em_start_offset(double s, double q, unsigned digits) {
    double x0 = std::max(0.5 * digits, 0.48 * (s + 2.0 * digits));
    return std::max(0L, static_cast<long>(std::ceil(x0 - q)));
}

Bounded hurwitz_zeta(const Real& s_in, const Real& q_in, unsigned digits) {
    if (s_in <= 1) throw InputError("Hurwitz zeta needs s > 1");
    if (q_in <= 0) throw InputError("Hurwitz zeta needs q > 0");
    const unsigned work = digits + 10;
    Bounded out;
    {
        WorkingDigits wd(work);
        Real s(s_in, work), q(q_in, work);
        Real eps = pow10(-static_cast<long>(digits) - 5);
        long n_direct = em_start_offset(static_cast<double>(s), static_cast<double>(q), digits);
        for (int attempt = 0; attempt < 12; ++attempt, n_direct = 2 * n_direct + 16) {
            Real head = 0;
            for (long k = 0; k < n_direct; ++k) head += bmp::exp(-s * bmp::log(q + k));
            Real x0 = q + n_direct;
            Real base = bmp::exp(-s * bmp::log(x0));  // x0^{-s}
            Real total = head + x0 * base / (s - 1) + base / 2;
            Real poch = s;           // (s)_{2j-1}
            Real xpow = 1 / x0;      // x0^{1-2j}
            Real inv_x0_sq = 1 / (x0 * x0);
            size_t chunk = 64;
            std::vector<Real> c = em_coefficients(chunk);
            Real prev_abs = -1, last_abs = 0;
            bool converged = false, diverging = false;
            for (size_t j = 1;; ++j) {
                if (j > c.size()) {
                    chunk *= 2;
                    c = em_coefficients(chunk);
                }
                Real term = c[j - 1] * poch * xpow * base;
                Real at = bmp::abs(term);
                if (prev_abs >= 0 && at > prev_abs) {
                    diverging = true;
                    break;
                }
                total += term;
                last_abs = at;
                prev_abs = at;
                if (at < eps * bmp::abs(total)) {
                    converged = true;
                    break;
                }
                poch *= (s + Real(2 * j - 1)) * (s + Real(2 * j));
                xpow *= inv_x0_sq;
            }
            if (!converged || diverging) continue;
            out.value = total;
            out.error_bound = 2 * last_abs + eps * bmp::abs(total) * Real(n_direct + 10);
            break;
        }
        if (out.error_bound == 0 && out.value == 0) throw NumericError("Hurwitz zeta did not converge");
    }
    out.value = Real(out.value, digits);
    out.error_bound = Real(out.error_bound, digits);
    return out;
}

Bounded zeta_bounded(int s, unsigned digits) {
    if (s < 2) throw InputError("zeta_value needs s >= 2");
    static std::map<std::pair<int, unsigned>, Bounded> cache;
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache.find({s, digits});
        if (it != cache.end()) return it->second;
    }
    Bounded b;
    {
        WorkingDigits wd(digits);
        b = hurwitz_zeta(Real(s), Real(1), digits);
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    cache[{s, digits}] = b;
    return b;
}

Real zeta_value(int s, const PrecisionContext& ctx) {
    ctx.validate();
    Bounded b = zeta_bounded(s, ctx.total());
    WorkingDigits wd(ctx.total());
    if (b.error_bound >= pow10(-static_cast<long>(ctx.digits)))
        throw NumericError("zeta remainder bound above requested accuracy");
    return b.value;
}

Real eval_form(const forms::ZetaLinearForm& form, const PrecisionContext& ctx) {
    ctx.validate();
    double mag = exact::log_abs(form.constant) / std::log(10.0);
    for (const auto& [arg, coeff] : form.zeta_terms())
        if (coeff != 0) mag = std::max(mag, exact::log_abs(coeff) / std::log(10.0));
    unsigned digits = ctx.total() + static_cast<unsigned>(std::max(0.0, std::ceil(mag))) + 5;
    WorkingDigits wd(digits);
    Real acc = to_real(form.constant);
    for (const auto& [arg, coeff] : form.zeta_terms()) {
        if (coeff == 0) continue;
        acc += to_real(coeff) * zeta_bounded(arg, digits).value;
    }
    return Real(acc, ctx.total());
}

}  // namespace zc::hp
