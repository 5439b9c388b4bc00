#include <cmath>

#include "zc/criterion.hpp"
#include "zc/errors.hpp"
#include "zc/saddle.hpp"

namespace zc::crit {

double rank_lower_bound(int k, const std::vector<double>& tau) {
    if (k < 1 || static_cast<int>(tau.size()) != k) throw InputError("rank_lower_bound: need k values of tau");
    double s = k;
    for (size_t i = 0; i < tau.size(); ++i) {
        if (!(tau[i] > 0)) throw InputError("rank_lower_bound: tau must be positive");
        for (size_t j = 0; j < i; ++j)
            if (tau[i] == tau[j]) throw InputError("rank_lower_bound: tau must be pairwise distinct");
        s += tau[i];
    }
    return s;
}

RankBoundCertificate zeta_rank_bound(int a, unsigned digits) {
    saddle::SaddlePlane p{a, saddle::r_of_a(a)};
    saddle::SaddleData d = saddle::compute_constants(p, digits);
    RankBoundCertificate c;
    c.a = a;
    c.r = p.r;
    c.digits = d.digits;
    WorkingDigits wd(d.digits);
    Real ra(a), rr(p.r), rc(p.c());
    Real shift = 2 * (ra + 2);
    Real log_beta = shift + 2 * (ra - 6 * rr) * boost::multiprecision::log(Real(2)) +
                    6 * rc * boost::multiprecision::log(rc);
    Real tau1 = -(shift + d.log_eps_a) / log_beta;
    Real tau2 = -(shift + d.log_eps_pp_a) / log_beta;
    c.log_beta = static_cast<double>(log_beta);
    c.log_eps_a = static_cast<double>(d.log_eps_a);
    c.log_eps_pp_a = static_cast<double>(d.log_eps_pp_a);
    c.tau1 = static_cast<double>(tau1);
    c.tau2 = static_cast<double>(tau2);
    if (tau1 == tau2) throw NumericError("zeta_rank_bound: tau1 == tau2");
    if (!(tau1 > 0) || !(tau2 > 0)) throw NumericError("zeta_rank_bound: non-positive tau");
    c.bound = static_cast<double>(2 + tau1 + tau2);
    const double denom = 1 + std::log(2.0);
    c.reference = 2 * std::log(static_cast<double>(a)) / denom;
    c.reference_r = 2 * std::log(static_cast<double>(p.r)) / denom;
    return c;
}

}  // namespace zc::crit
