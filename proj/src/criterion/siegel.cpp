#include <algorithm>
#include <cmath>

#include "linalg.hpp"
#include "zc/criterion.hpp"
#include "zc/errors.hpp"

namespace zc::crit {

using namespace detail;

namespace {

int index_of(const SiegelInstance& inst, int n) {
    auto it = std::find(inst.ns.begin(), inst.ns.end(), n);
    if (it == inst.ns.end()) throw InputError("n = " + std::to_string(n) + " not in the instance");
    return static_cast<int>(it - inst.ns.begin());
}

void validate(const SiegelInstance& inst) {
    if (inst.k < 1 || inst.p <= inst.k) throw InputError("siegel: need 1 <= k <= p-1");
    if (static_cast<int>(inst.points.size()) != inst.k || static_cast<int>(inst.tau.size()) != inst.k)
        throw InputError("siegel: need k points and k values of tau");
    for (const auto& e : inst.points)
        if (static_cast<int>(e.size()) != inst.p) throw InputError("siegel: point of wrong dimension");
    if (inst.ns.size() != inst.Q.size() || inst.ns.size() != inst.forms.size())
        throw InputError("siegel: ns, Q and forms must have equal length");
    for (size_t i = 0; i < inst.forms.size(); ++i) {
        if (inst.Q[i] < 1) throw InputError("siegel: Q_n must be positive");
        if (i > 0 && inst.Q[i] <= inst.Q[i - 1]) throw InputError("siegel: Q not increasing");
        if (static_cast<int>(inst.forms[i].size()) != inst.p) throw InputError("siegel: need p forms per n");
        for (const auto& f : inst.forms[i])
            if (static_cast<int>(f.size()) != inst.p) throw InputError("siegel: form of wrong dimension");
    }
}

Real apply(const std::vector<BigInt>& form, const std::vector<Real>& x) {
    Real s(0);
    for (size_t i = 0; i < form.size(); ++i) s += to_real(form[i]) * x[i];
    return s;
}

}  // namespace

bool SiegelReport::pass() const {
    if (!forms_independent || !subspace_ok) return false;
    for (const auto& r : rows)
        if (r.det_restricted == 0) return false;
    for (const auto& b : boxes)
        if (!b.pass()) return false;
    return true;
}

SiegelReport siegel_verify(const SiegelInstance& inst, const std::vector<std::vector<BigInt>>& subspace,
                           const std::vector<std::pair<int, double>>& boxes) {
    validate(inst);
    SiegelReport rep;
    rep.d = static_cast<int>(subspace.size());
    double tau_sum = 0;
    for (double t : inst.tau) tau_sum += t;
    rep.target_exponent = rep.d - inst.k - tau_sum;
    for (const auto& u : subspace)
        if (static_cast<int>(u.size()) != inst.p) throw InputError("siegel: subspace vector of wrong dimension");
    if (rep.d < inst.k || bareiss_rank(subspace) != rep.d) rep.subspace_ok = false;

    WorkingDigits wd(std::max(current_digits(), 50u));
    if (rep.subspace_ok) {
        // each point must lie in the real span of the u_j
        std::vector<std::vector<Real>> ub;
        for (const auto& u : subspace) {
            std::vector<Real> v;
            for (const auto& x : u) v.push_back(to_real(x));
            ub.push_back(v);
        }
        for (const auto& e : inst.points) {
            auto [lam, res] = project_t(ub, e);
            if (norm_t(res) > Real("1e-30") * norm_t(e)) rep.subspace_ok = false;
        }
    }

    std::vector<double> xs, ys;
    for (size_t idx = 0; idx < inst.ns.size(); ++idx) {
        SiegelRow row;
        row.n = inst.ns[idx];
        const auto& forms = inst.forms[idx];
        row.det_forms = bareiss_det(forms);
        row.independent = row.det_forms != 0;
        if (!row.independent) rep.forms_independent = false;
        const double logq = exact::log_abs(inst.Q[idx]);
        row.smallness = -INFINITY;
        for (int t = 0; t < inst.p; ++t)
            for (int j = 0; j < inst.k; ++j) {
                double lv = log10_abs(apply(forms[t], inst.points[j])) * std::log(10.0);
                if (logq > 0) row.smallness = std::max(row.smallness, lv / logq + inst.tau[j]);
            }
        if (rep.subspace_ok) {
            std::vector<std::vector<BigInt>> chosen;
            for (int t = 0; t < inst.p && static_cast<int>(chosen.size()) < rep.d; ++t) {
                std::vector<BigInt> r;
                for (const auto& u : subspace) {
                    BigInt s(0);
                    for (int i = 0; i < inst.p; ++i) s += forms[t][i] * u[i];
                    r.push_back(s);
                }
                chosen.push_back(r);
                if (bareiss_rank(chosen) < static_cast<int>(chosen.size())) chosen.pop_back();
            }
            if (static_cast<int>(chosen.size()) < rep.d) {
                rep.subspace_ok = false;
            } else {
                row.det_restricted = bareiss_det(chosen);
                if (row.det_restricted != 0 && logq > 0) {
                    row.det_exponent = exact::log_abs(row.det_restricted) / logq;
                    xs.push_back(logq);
                    ys.push_back(exact::log_abs(row.det_restricted));
                }
            }
        }
        rep.rows.push_back(std::move(row));
    }
    if (xs.size() >= 2) {
        double n = xs.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        rep.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    for (const auto& [n, eps] : boxes) rep.boxes.push_back(box_emptiness(inst, n, eps));
    return rep;
}

BoxResult box_emptiness(const SiegelInstance& inst, int n, double eps) {
    validate(inst);
    const int idx = index_of(inst, n);
    BoxResult res;
    res.n = n;
    res.eps = eps;
    const long double Q = inst.Q[idx].get_d();
    const int p = inst.p, k = inst.k;
    std::vector<long double> lam_max(k);
    for (int j = 0; j < k; ++j) lam_max[j] = std::pow(Q, static_cast<long double>(inst.tau[j] - eps));
    const long double u_max = std::pow(Q, static_cast<long double>(-1 - eps));
    std::vector<std::vector<long double>> el;
    for (const auto& e : inst.points) {
        std::vector<long double> v;
        for (const auto& x : e) v.push_back(x.convert_to<long double>());
        el.push_back(v);
    }
    std::vector<long> half(p);
    res.volume = 1;
    for (int i = 0; i < p; ++i) {
        long double h = u_max;
        for (int j = 0; j < k; ++j) h += lam_max[j] * std::fabs(el[j][i]);
        half[i] = static_cast<long>(std::floor(h));
        res.volume *= 2 * half[i] + 1;
    }
    if (p > 6 || res.volume > 1e7L) {
        res.skipped = true;
        return res;
    }
    std::vector<long> P(p);
    for (int i = 0; i < p; ++i) P[i] = -half[i];
    const Real u_max_r = boost::multiprecision::pow(to_real(inst.Q[idx]), Real(-1 - eps));
    while (true) {
        bool zero = std::all_of(P.begin(), P.end(), [](long v) { return v == 0; });
        if (!zero) {
            ++res.points;
            std::vector<long double> pl(P.begin(), P.end());
            auto [lam, u] = project_t(el, pl);
            long double worst = norm_t(u) / u_max;
            for (int j = 0; j < k; ++j) worst = std::max(worst, std::fabs(lam[j]) / lam_max[j]);
            if (worst <= 1 + 1e-9L) {
                std::vector<Real> pr(P.begin(), P.end());
                auto [lr, ur] = project_t(inst.points, pr);
                bool inside = norm_t(ur) <= u_max_r;
                for (int j = 0; j < k; ++j)
                    inside = inside && boost::multiprecision::abs(lr[j]) <=
                                           boost::multiprecision::pow(to_real(inst.Q[idx]), Real(inst.tau[j] - eps));
                if (inside) ++res.survivors;
            }
        }
        int i = 0;
        while (i < p && P[i] == half[i]) {
            P[i] = -half[i];
            ++i;
        }
        if (i == p) break;
        ++P[i];
    }
    return res;
}

}  // namespace zc::crit
