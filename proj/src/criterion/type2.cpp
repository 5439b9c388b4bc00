#include <algorithm>
#include <cmath>

#include "zc/criterion.hpp"
#include "zc/errors.hpp"

namespace zc::crit {

namespace bmp = boost::multiprecision;

Type2Report cortype2_verify(const Type2Instance& inst, double Q, double eps, double tol, double drift_bound) {
    const size_t k = inst.xi.size();
    if (k == 0 || inst.tau.size() != k) throw InputError("cortype2: need k values of xi and tau");
    if (inst.Q.size() != inst.forms.size() || inst.Q.size() < 4) throw InputError("cortype2: need >= 4 forms");
    for (size_t i = 0; i < inst.Q.size(); ++i) {
        if (inst.forms[i].size() != k + 1) throw InputError("cortype2: forms need k+1 coefficients");
        if (inst.Q[i] < 1 || (i > 0 && inst.Q[i] <= inst.Q[i - 1])) throw InputError("cortype2: Q not increasing");
    }
    if (!(Q > 1) || !(eps > 0)) throw InputError("cortype2: need Q > 1 and eps > 0");

    double max_log10q = 0;
    for (const auto& q : inst.Q) max_log10q = std::max(max_log10q, exact::log_abs(q) / std::log(10.0));
    WorkingDigits wd(std::max(current_digits(), static_cast<unsigned>(2 * max_log10q) + 40));

    Type2Report rep;
    rep.Q = Q;
    rep.eps = eps;
    const size_t count = inst.Q.size();
    const size_t late = count / 2;
    auto small = [&](size_t n, size_t j) {
        return to_real(inst.forms[n][k]) * inst.xi[j] - to_real(inst.forms[n][j]);
    };

    // hypothesis: exponents settle near -tau_j over the late half of the window
    rep.hypothesis_ok = true;
    for (size_t j = 0; j < k; ++j) {
        double lo = INFINITY, hi = -INFINITY, sum = 0;
        int used = 0;
        for (size_t n = late; n < count; ++n) {
            double lq = exact::log_abs(inst.Q[n]);
            if (lq <= 0) continue;
            double y = log10_abs(small(n, j)) * std::log(10.0) / lq;
            lo = std::min(lo, y);
            hi = std::max(hi, y);
            sum += y;
            ++used;
        }
        double mean = used ? sum / used : 0;
        rep.fitted_exponents.push_back(mean);
        rep.drift.push_back(used ? hi - lo : INFINITY);
        if (!used || std::fabs(mean + inst.tau[j]) > tol || hi - lo > drift_bound) rep.hypothesis_ok = false;
    }
    for (size_t n = late; n < count; ++n) {
        double lq = exact::log_abs(inst.Q[n]);
        if (lq <= 0) continue;
        for (const auto& l : inst.forms[n])
            if (l != 0) rep.coeff_exponent = std::max(rep.coeff_exponent, exact::log_abs(l) / lq);
        if (n + 1 < count && exact::log_abs(inst.Q[n + 1]) / lq - 1 > tol)
            rep.hypothesis_ok = false;
    }
    if (rep.coeff_exponent > 1 + tol) rep.hypothesis_ok = false;
    if (!rep.hypothesis_ok) return rep;

    rep.conclusion_checked = true;
    const Real Qr(Q);
    const Real floor_val = bmp::pow(Qr, Real(-1 - eps));
    const double floor_d = std::pow(Q, -1 - eps);
    std::vector<long> amax(k);
    double volume = 1;
    for (size_t j = 0; j < k; ++j) {
        amax[j] = static_cast<long>(std::floor(std::pow(Q, inst.tau[j])));
        volume *= 2.0 * amax[j] + 1;
    }
    if (volume > 1e7) throw InputError("cortype2: enumeration box too large");
    std::vector<long double> xil;
    for (const auto& x : inst.xi) xil.push_back(x.convert_to<long double>());
    rep.min_scaled = INFINITY;
    std::vector<long> a(k);
    for (size_t j = 0; j < k; ++j) a[j] = -amax[j];
    while (true) {
        bool zero = std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
        if (!zero) {
            long double s = 0;
            for (size_t j = 0; j < k; ++j) s += a[j] * xil[j];
            for (long a0 : {static_cast<long>(std::floor(-s)), static_cast<long>(std::ceil(-s))}) {
                ++rep.tuples;
                Real x(a0);
                for (size_t j = 0; j < k; ++j) x += a[j] * inst.xi[j];
                Real ax = bmp::abs(x);
                double scaled = static_cast<double>(ax) / floor_d;
                rep.min_scaled = std::min(rep.min_scaled, scaled);
                if (ax < floor_val) ++rep.violations;
                // n maximal with Q_n |x| < 1/2, and the identity at that n
                int best = -1;
                for (size_t n = 0; n < count; ++n)
                    if (to_real(inst.Q[n]) * ax < Real(0.5)) best = static_cast<int>(n);
                if (best >= 0) {
                    const auto& l = inst.forms[best];
                    BigInt integer = l[k] * a0;
                    Real rest(0);
                    for (size_t j = 0; j < k; ++j) {
                        integer += a[j] * l[j];
                        rest += a[j] * small(best, j);
                    }
                    Real resid = bmp::abs(to_real(l[k]) * x - (to_real(integer) + rest));
                    rep.identity_residual = std::max(rep.identity_residual, static_cast<double>(resid));
                }
                if (std::ceil(-s) == std::floor(-s)) break;
            }
        }
        size_t i = 0;
        while (i < k && a[i] == amax[i]) {
            a[i] = -amax[i];
            ++i;
        }
        if (i == k) break;
        ++a[i];
    }
    return rep;
}

}  // namespace zc::crit
