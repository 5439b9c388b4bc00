#include <algorithm>

#include "zc/errors.hpp"
#include "zc/saddle.hpp"

namespace zc::saddle {

namespace bmp = boost::multiprecision;

Real SaddleData::eps_a() const {
    WorkingDigits wd(digits);
    return bmp::exp(log_eps_a);
}

Real SaddleData::eps_pp_a() const {
    WorkingDigits wd(digits);
    return bmp::exp(log_eps_pp_a);
}

SaddleData compute_constants(const SaddlePlane& p, unsigned digits) {
    p.validate();
    digits = std::max(digits, root_digits(p.a));
    SaddleData d;
    d.a = p.a;
    d.r = p.r;
    d.digits = digits;
    Mu1Result mu = find_mu1(p, digits);
    Tau0Result tau = find_tau0(p, digits);
    WorkingDigits wd(digits + 10);
    d.mu1 = mu.mu1;
    d.mu1_cert = mu.cert;
    d.tau0 = tau.tau0;
    d.tau0_cert = tau.cert;
    d.tau0_fallback = tau.used_fallback;

    d.log_eps_a = f0_eval(p, Complex(d.mu1), Bank::Upper).re;
    Complex f0t = f0_eval(p, d.tau0);
    d.log_eps_pp_a = f0t.re;
    d.omega_a = reduce_angle(f0t.im);
    d.arg_fpp = arg(f_second(p, d.tau0));
    Real ag = arg_g(p, d.tau0);
    d.arg_g_reduced = reduce_angle(ag);
    d.phi_a = reduce_angle(-d.arg_fpp / 2 + ag);
    d.angles = angles_at(p, d.tau0);
    d.nu_a = nu_of_a(p.a);
    return d;
}

bool AssumptionReport::conditions_pass() const {
    auto find = [&](const std::string& name) {
        for (const auto& c : lemma_conditions)
            if (c.name == name) return c.pass;
        return false;
    };
    return find("mu1_bound") && (find("phi_not_half_pi_mod_pi") || find("omega_not_zero_mod_pi")) &&
           find("angle_identity");
}

AssumptionReport check_assumptions(const SaddleData& d) {
    WorkingDigits wd(d.digits + 10);
    const SaddlePlane p{d.a, d.r};
    const Real c(p.c()), pi = real_pi();
    AssumptionReport rep;
    rep.a = d.a;
    rep.r = d.r;
    Real r(d.r), a(d.a);
    Real bound = c + std::min(3 * r * (r + 1) / (2 * (a + 3)), r * (r + 1) / (3 * (2 * r + 1)));
    rep.lemma_conditions.push_back({"mu1_bound", d.mu1, bound, d.mu1 <= bound});
    Real threshold("1e-3");
    Real dphi = distance_mod(d.phi_a, pi / 2, pi);
    rep.lemma_conditions.push_back({"phi_not_half_pi_mod_pi", dphi, threshold, dphi > threshold});
    Real domega = distance_mod(d.omega_a, Real(0), pi);
    rep.lemma_conditions.push_back({"omega_not_zero_mod_pi", domega, threshold, domega > threshold});
    Real res = bmp::abs(d.angles.identity_residual);
    rep.lemma_conditions.push_back({"angle_identity", res, Real("1e-20"), res < Real("1e-20")});

    rep.extras.push_back({"eps_pp_below_eps", d.log_eps_pp_a, d.log_eps_a, d.log_eps_pp_a < d.log_eps_a});
    rep.extras.push_back({"eps_below_one", d.log_eps_a, Real(0), d.log_eps_a < 0});
    Real log_bound = 6 * (r + 1) * bmp::log(Real(2)) - 2 * (a - 6 * r) * bmp::log(r);
    rep.extras.push_back({"eps_upper_bound", d.log_eps_a, log_bound, d.log_eps_a <= log_bound});
    Real mu_gap = d.mu1 - c;
    rep.extras.push_back({"mu1_within_nu", mu_gap, d.nu_a, mu_gap < d.nu_a});
    Real tau_gap = abs(d.tau0 - Complex(c));
    rep.extras.push_back({"tau0_within_nu", tau_gap, d.nu_a, tau_gap < d.nu_a});
    rep.extras.push_back({"tau0_closer_than_mu1", tau_gap, mu_gap, tau_gap < mu_gap});
    return rep;
}

}  // namespace zc::saddle
