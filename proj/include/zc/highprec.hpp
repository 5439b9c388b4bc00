#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zc/forms.hpp"
#include "zc/real.hpp"

namespace zc::saddle {
struct SaddleData;
}

namespace zc::hp {

struct PrecisionContext {
    unsigned digits = 50;
    unsigned guard = 10;

    void validate() const;  // digits >= 50, guard >= 10
    unsigned total() const { return digits + guard; }
    // ZETACERT_DIGITS overrides the fallback digits when set.
    static PrecisionContext from_env(unsigned fallback_digits);
};

struct Bounded {
    Real value;
    Real error_bound;
};

// zeta(s) with absolute error < 10^-digits; Euler-Maclaurin with explicit remainder bound.
Real zeta_value(int s, const PrecisionContext& ctx);
Bounded zeta_bounded(int s, unsigned digits);

// Hurwitz zeta(s, q) for real s > 1, q > 0 at `digits` decimal digits, with remainder bound.
Bounded hurwitz_zeta(const Real& s, const Real& q, unsigned digits);

// B_{2j}/(2j)! for j = 1..count at the current working precision.
std::vector<Real> em_coefficients(size_t count);
// Number of terms to sum directly before switching to Euler-Maclaurin for zeta(s, q).
long em_start_offset(double s, double q, unsigned digits);

struct DirectSum {
    Real value;
    Real error_bound;       // tail truncation + Euler-Maclaurin remainders
    long cutoff = 0;        // T: head covers t < T, Laurent tail covers t >= T
    long laurent_terms = 0;
    unsigned digits_used = 0;
};

// Sums the defining series of S_n (plain) or S''_n (double-derived) directly.
// Head: hypergeometric term ratio with running logarithmic derivatives.
// Tail: expansion of R at infinity summed against Hurwitz zeta values.
DirectSum eval_S_direct(const forms::FormSpec& spec, forms::FormKind kind, const PrecisionContext& ctx,
                        long cutoff_factor = 16);

// l_0 + sum l_i zeta(i) (plain) or l''_0 + sum binom(i+1,2) l_i zeta(i+2) (derived).
Real eval_form(const forms::ZetaLinearForm& form, const PrecisionContext& ctx);

struct RateSample {
    int n = 0;
    Real s;                      // S_n
    Real spp;                    // S''_n
    double log_s_over_n = 0;
    double log_spp_over_n = 0;
    int sign = 0;                // sign of S''_n
    double cos_reference = 0;    // cos(n omega_a + phi_a)
    bool near_zero = false;      // |cos| < 1e-3, excluded from sign/ratio diagnostics
    double log_ratio_over_n = 0; // log(|S''_n| / (eps''^n |cos|)) / n
    unsigned digits = 0;
};

struct RateReport {
    int a = 0, r = 0;
    std::vector<RateSample> samples;
    double fitted_slope = 0;        // least squares slope of log S_n against n
    double fitted_slope_pp = 0;     // same for log |S''_n|
    double log_eps_a = 0;
    double log_eps_pp_a = 0;
    double omega_a = 0, phi_a = 0;
    int sign_counted = 0;
    int sign_agree = 0;             // sign(S''_n) == sign(cos(n omega + phi))
    int sign_agree_alternating = 0; // sign(S''_n) == (-1)^{n+1} sign(cos(n omega + phi))
    bool plain_positive = true;

    double sign_agreement() const;
    double alternating_agreement() const;
    double slope_relative_error() const;  // |slope - log eps_a| / |log eps_a|
};

// Precision per n: max(ctx.digits, n * max(|log10 eps_a|, |log10 eps''_a|) + 50).
RateReport measure_rates(int a, int r, const std::vector<int>& ns, const saddle::SaddleData& data,
                         const PrecisionContext& ctx);

std::string to_csv(const RateReport& rep);
nlohmann::ordered_json to_json(const RateReport& rep);

}  // namespace zc::hp
