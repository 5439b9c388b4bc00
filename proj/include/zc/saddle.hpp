#pragma once

#include <string>

#include <json.hpp>

#include "zc/real.hpp"

namespace zc::saddle {

// Cut plane C \ ((-inf, 1] u [2r+1, inf)) for the pair (a, r).
struct SaddlePlane {
    int a = 0;
    int r = 0;

    void validate() const;  // a odd, a >= 3, r >= 1, 6r <= a
    long c() const { return 2L * r + 1; }
};

// Upper: real tau > 2r+1 taken as tau + i0.
enum class Bank { None, Upper };

// r = max(1, floor(a exp(-sqrt(log a)))), clamped to 6r <= a.
int r_of_a(long a);
// nu(a) = exp(-exp(cbrt(log a))) at the current precision.
Real nu_of_a(long a);
// Root-finding precision: 30 + 10 ceil(log10 a) digits.
unsigned root_digits(long a);

// Q(x) = (x+c)^3 (x-1)^{a+3} - (x-c)^3 (x+1)^{a+3}, c = 2r+1, by powering.
Complex q_eval(const SaddlePlane& p, const Complex& x);
// (|x|+c)^3 (|x|+1)^{a+3}: the size of either product in Q.
Real q_scale(const SaddlePlane& p, const Complex& x);

struct RootCertificate {
    std::string method;       // "bisection+newton", "newton", "argument-principle+newton"
    Real residual;            // |Q(root)| / q_scale(root)
    int newton_steps = 0;
    Real last_step;           // size of the final Newton correction
    Real bracket_lo, bracket_hi;  // sign-change bracket (real root only)
};

struct Mu1Result {
    Real mu1;
    RootCertificate cert;
};

struct Tau0Result {
    Complex tau0;
    RootCertificate cert;
    bool used_fallback = false;
};

// Unique real root above 2r+1; throws NumericError without a sign change.
Mu1Result find_mu1(const SaddlePlane& p, unsigned digits);
// Root in Re > 0, Im > 0: Newton on f'(tau) = i pi from 2r+1 + delta e^{2 i pi/3},
// argument-principle subdivision if Newton fails or force_fallback is set.
Tau0Result find_tau0(const SaddlePlane& p, unsigned digits, bool force_fallback = false);
// Number of roots of Q inside the open rectangle, by the winding number of 1 - R.
int count_roots_in_rect(const SaddlePlane& p, const Real& x0, const Real& x1, const Real& y0, const Real& y1);
// Sign changes of Q on (lo, hi) sampled at `samples` geometrically spaced points above lo.
int sign_changes(const SaddlePlane& p, const Real& lo, const Real& hi, int samples);

// Phase f of the cut plane; throws InputError on a cut without a bank tag.
Complex f_eval(const SaddlePlane& p, const Complex& tau, Bank bank = Bank::None);
Complex f_prime(const SaddlePlane& p, const Complex& tau, Bank bank = Bank::None);
Complex f_second(const SaddlePlane& p, const Complex& tau);
// f0 = f - tau f'
Complex f0_eval(const SaddlePlane& p, const Complex& tau, Bank bank = Bank::None);
// Continuous argument of g, zero on (1, 2r+1), not reduced.
Real arg_g(const SaddlePlane& p, const Complex& tau);

struct Angles {
    Real alpha_plus, alpha_minus, beta_plus, beta_minus;
    Real identity_residual;  // 3(beta_- + beta_+) + (a+3)(alpha_+ - alpha_-) - pi
};

Angles angles_at(const SaddlePlane& p, const Complex& tau0);

struct SaddleData {
    int a = 0, r = 0;
    unsigned digits = 0;
    Real mu1;
    Complex tau0;
    Real log_eps_a;     // Re f0(mu1 + i0)
    Real log_eps_pp_a;  // Re f0(tau0)
    Real omega_a;       // Im f0(tau0), reduced to (-pi, pi]
    Real phi_a;         // -arg f''(tau0)/2 + arg g(tau0), reduced to (-pi, pi]
    Real arg_fpp;       // in (-pi, pi]
    Real arg_g_reduced;
    Angles angles;
    Real nu_a;
    RootCertificate mu1_cert, tau0_cert;
    bool tau0_fallback = false;

    Real eps_a() const;
    Real eps_pp_a() const;
};

SaddleData compute_constants(const SaddlePlane& p, unsigned digits);

struct Check {
    std::string name;
    Real lhs, rhs;  // compared quantities; meaning per check
    bool pass = false;
};

struct AssumptionReport {
    int a = 0, r = 0;
    std::vector<Check> lemma_conditions;  // mu1 bound, phi/omega non-degeneracy, angle identity
    std::vector<Check> extras;            // eps ordering, eps upper bound, nu proximity
    bool conditions_pass() const;
};

AssumptionReport check_assumptions(const SaddleData& d);

nlohmann::ordered_json to_json(const SaddleData& d);
nlohmann::ordered_json to_json(const AssumptionReport& rep);

}  // namespace zc::saddle
