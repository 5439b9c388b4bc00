#include <algorithm>
#include <cmath>
#include <sstream>

#include "zc/errors.hpp"
#include "zc/highprec.hpp"
#include "zc/saddle.hpp"

namespace zc::hp {

namespace {

constexpr double kLn10 = 2.302585092994046;

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

double RateReport::sign_agreement() const {
    return sign_counted ? static_cast<double>(sign_agree) / sign_counted : 0.0;
}

double RateReport::alternating_agreement() const {
    return sign_counted ? static_cast<double>(sign_agree_alternating) / sign_counted : 0.0;
}

double RateReport::slope_relative_error() const { return std::fabs(fitted_slope - log_eps_a) / std::fabs(log_eps_a); }

RateReport measure_rates(int a, int r, const std::vector<int>& ns, const saddle::SaddleData& data,
                         const PrecisionContext& ctx) {
    ctx.validate();
    if (ns.size() < 8) throw InputError("need at least 8 values of n");
    if (data.a != a || data.r != r) throw InputError("saddle data belongs to a different (a, r)");
    std::vector<int> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("repeated n");

    RateReport rep;
    rep.a = a;
    rep.r = r;
    {
        WorkingDigits wd(data.digits);
        rep.log_eps_a = static_cast<double>(data.log_eps_a);
        rep.log_eps_pp_a = static_cast<double>(data.log_eps_pp_a);
        rep.omega_a = static_cast<double>(data.omega_a);
        rep.phi_a = static_cast<double>(data.phi_a);
    }
    const double per_n = std::max(std::fabs(rep.log_eps_a), std::fabs(rep.log_eps_pp_a)) / kLn10;
    std::vector<double> xs, ys, ys_pp;
    for (int n : sorted) {
        forms::FormSpec spec{a, r, n};
        PrecisionContext c = ctx;
        c.digits = std::max(ctx.digits, static_cast<unsigned>(std::ceil(n * per_n)) + 50);
        RateSample smp;
        smp.n = n;
        smp.digits = c.digits;
        smp.s = eval_S_direct(spec, forms::FormKind::Plain, c).value;
        smp.spp = eval_S_direct(spec, forms::FormKind::DoubleDerived, c).value;
        WorkingDigits wd(c.total());
        smp.log_s_over_n = log10_abs(smp.s) * kLn10 / n;
        smp.log_spp_over_n = log10_abs(smp.spp) * kLn10 / n;
        smp.sign = smp.spp > 0 ? 1 : (smp.spp < 0 ? -1 : 0);
        Real angle = Real(n) * data.omega_a + data.phi_a;
        smp.cos_reference = static_cast<double>(boost::multiprecision::cos(angle));
        smp.near_zero = std::fabs(smp.cos_reference) < 1e-3;
        if (!smp.near_zero) {
            smp.log_ratio_over_n =
                (log10_abs(smp.spp) * kLn10 - n * rep.log_eps_pp_a - std::log(std::fabs(smp.cos_reference))) / n;
            int ref = smp.cos_reference > 0 ? 1 : -1;
            int alt = (n % 2 == 1) ? ref : -ref;  // (-1)^{n+1}
            ++rep.sign_counted;
            if (smp.sign == ref) ++rep.sign_agree;
            if (smp.sign == alt) ++rep.sign_agree_alternating;
        }
        if (!(smp.s > 0)) rep.plain_positive = false;
        xs.push_back(n);
        ys.push_back(smp.log_s_over_n * n);
        ys_pp.push_back(smp.log_spp_over_n * n);
        rep.samples.push_back(std::move(smp));
    }
    rep.fitted_slope = least_squares_slope(xs, ys);
    rep.fitted_slope_pp = least_squares_slope(xs, ys_pp);
    return rep;
}

std::string to_csv(const RateReport& rep) {
    std::ostringstream os;
    os.precision(12);
    os << "n,logSn_over_n,logSppn_over_n,sign,cos_reference,fitted_slope,log_eps_a\n";
    for (const auto& s : rep.samples)
        os << s.n << ',' << s.log_s_over_n << ',' << s.log_spp_over_n << ',' << s.sign << ',' << s.cos_reference << ','
           << rep.fitted_slope << ',' << rep.log_eps_a << '\n';
    return os.str();
}

nlohmann::ordered_json to_json(const RateReport& rep) {
    nlohmann::ordered_json j;
    j["a"] = rep.a;
    j["r"] = rep.r;
    j["log_eps_a"] = rep.log_eps_a;
    j["log_eps_pp_a"] = rep.log_eps_pp_a;
    j["omega_a"] = rep.omega_a;
    j["phi_a"] = rep.phi_a;
    j["fitted_slope"] = rep.fitted_slope;
    j["fitted_slope_pp"] = rep.fitted_slope_pp;
    j["slope_relative_error"] = rep.slope_relative_error();
    j["sign_counted"] = rep.sign_counted;
    j["sign_agreement"] = rep.sign_agreement();
    j["sign_agreement_alternating"] = rep.alternating_agreement();
    j["plain_positive"] = rep.plain_positive;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : rep.samples) {
        WorkingDigits wd(s.digits);
        arr.push_back({{"n", s.n},
                       {"logSn_over_n", s.log_s_over_n},
                       {"logSppn_over_n", s.log_spp_over_n},
                       {"sign", s.sign},
                       {"cos_reference", s.cos_reference},
                       {"near_zero", s.near_zero},
                       {"log_ratio_over_n", s.log_ratio_over_n},
                       {"digits", s.digits},
                       {"S", to_decimal(s.s, 30)},
                       {"Spp", to_decimal(s.spp, 30)}});
    }
    j["samples"] = arr;
    return j;
}

}  // namespace zc::hp
