#include "zc/saddle.hpp"

namespace zc::saddle {

using Json = nlohmann::ordered_json;

namespace {

std::string dec(const Real& x, unsigned digits) { return to_decimal(x, digits); }

Json complex_json(const Complex& z, unsigned digits) { return Json{{"re", dec(z.re, digits)}, {"im", dec(z.im, digits)}}; }

Json cert_json(const RootCertificate& c, unsigned digits) {
    Json j;
    j["method"] = c.method;
    j["scaled_residual"] = dec(c.residual, 6);
    j["newton_steps"] = c.newton_steps;
    j["last_step"] = dec(c.last_step, 6);
    if (c.bracket_lo != 0 || c.bracket_hi != 0)
        j["bracket"] = Json::array({dec(c.bracket_lo, digits), dec(c.bracket_hi, digits)});
    return j;
}

Json check_json(const Check& c) {
    return Json{{"name", c.name}, {"lhs", dec(c.lhs, 20)}, {"rhs", dec(c.rhs, 20)}, {"pass", c.pass}};
}

}  // namespace

Json to_json(const SaddleData& d) {
    WorkingDigits wd(d.digits + 10);
    const unsigned n = d.digits;
    Json j;
    j["a"] = d.a;
    j["r"] = d.r;
    j["mu1"] = dec(d.mu1, n);
    j["tau0"] = complex_json(d.tau0, n);
    j["log_eps_a"] = dec(d.log_eps_a, n);
    j["log_eps_pp_a"] = dec(d.log_eps_pp_a, n);
    j["eps_a"] = dec(d.eps_a(), n);
    j["eps_pp_a"] = dec(d.eps_pp_a(), n);
    j["omega_a"] = dec(d.omega_a, n);
    j["phi_a"] = dec(d.phi_a, n);
    Json diag;
    diag["alpha_plus"] = dec(d.angles.alpha_plus, n);
    diag["alpha_minus"] = dec(d.angles.alpha_minus, n);
    diag["beta_plus"] = dec(d.angles.beta_plus, n);
    diag["beta_minus"] = dec(d.angles.beta_minus, n);
    diag["arg_f_second"] = dec(d.arg_fpp, n);
    diag["arg_g"] = dec(d.arg_g_reduced, n);
    diag["nu_a"] = dec(d.nu_a, 20);
    diag["angle_identity_residual"] = dec(d.angles.identity_residual, 6);
    j["diagnostics"] = diag;
    Json meta;
    meta["digits"] = d.digits;
    meta["mu1_certificate"] = cert_json(d.mu1_cert, n);
    meta["tau0_certificate"] = cert_json(d.tau0_cert, n);
    meta["tau0_fallback"] = d.tau0_fallback;
    j["metadata"] = meta;
    return j;
}

Json to_json(const AssumptionReport& rep) {
    Json j;
    j["a"] = rep.a;
    j["r"] = rep.r;
    Json lc = Json::array(), ex = Json::array();
    for (const auto& c : rep.lemma_conditions) lc.push_back(check_json(c));
    for (const auto& c : rep.extras) ex.push_back(check_json(c));
    j["lemma_conditions"] = lc;
    j["conditions_pass"] = rep.conditions_pass();
    j["extras"] = ex;
    return j;
}

}  // namespace zc::saddle
