#include <cmath>

#include "zc/criterion.hpp"
#include "zc/errors.hpp"
#include "linalg.hpp"

namespace zc::crit {

namespace bmp = boost::multiprecision;

using namespace detail;

Real parse_real_spec(const nlohmann::json& j) {
    if (j.is_string()) return parse_real(j.get<std::string>());
    if (j.is_number_integer()) return Real(j.get<long>());
    if (j.is_object() && j.contains("sqrt")) {
        auto rat = [](const nlohmann::json& v) {
            return v.is_string() ? exact::parse_rational(v.get<std::string>()) : BigRational(v.get<long>());
        };
        BigRational rad = rat(j.at("sqrt"));
        BigRational scale = j.contains("scale") ? rat(j.at("scale")) : BigRational(1);
        BigRational shift = j.contains("shift") ? rat(j.at("shift")) : BigRational(0);
        if (rad < 0) throw InputError("negative radicand");
        return to_real(shift) + to_real(scale) * bmp::sqrt(to_real(rad));
    }
    throw InputError("expected a decimal string or {\"sqrt\": ...}");
}

Projection project(const std::vector<std::vector<Real>>& basis, const std::vector<Real>& point) {
    auto [lambda, u] = project_t(basis, point);
    Projection pr;
    Real np = norm_t(point);
    if (np == 0) throw InputError("projective distance of the zero vector");
    pr.distance = norm_t(u) / np;
    pr.lambda = std::move(lambda);
    pr.u = std::move(u);
    return pr;
}

Real projective_distance(const ProjectiveInstance& inst) { return project(inst.basis, inst.point).distance; }

Real kappa_constant(const std::vector<std::vector<Real>>& basis) {
    check_shape(basis, basis[0].size());
    auto g = gram(basis);
    Real best(0);
    for (size_t j = 0; j < basis.size(); ++j) {
        std::vector<Real> e(basis.size(), Real(0));
        e[j] = 1;
        Real d = solve(g, e)[j];
        if (d > best) best = d;
    }
    return bmp::sqrt(best);
}

std::vector<std::vector<long>> approximation_sweep(const Real& x, long qmax) {
    std::vector<std::vector<long>> pts;
    const long double xl = x.convert_to<long double>();
    for (long q = 1; q <= qmax; ++q) {
        long double v = q * xl;
        long double fl = std::floor(v);
        long double frac = v - fl;
        long f;
        if (frac < 1e-9L || frac > 1 - 1e-9L)
            f = static_cast<long>(bmp::floor(Real(q) * x).convert_to<long double>());
        else
            f = static_cast<long>(fl);
        if (f != 0) pts.push_back({q, f});
        if (f + 1 != 0) pts.push_back({q, f + 1});
    }
    return pts;
}

ThdistReport thdist_check(const std::vector<std::vector<Real>>& basis, double tau, double eps, double threshold,
                          const std::vector<std::vector<long>>& points) {
    if (!(tau > 0) || !(eps > 0)) throw InputError("thdist: tau and eps must be positive");
    check_shape(basis, basis[0].size());
    ThdistReport rep;
    rep.tau = tau;
    rep.eps = eps;
    rep.threshold = threshold;
    rep.bound_exponent = 1 + 1 / tau + eps;
    std::vector<std::vector<long double>> bl;
    for (const auto& e : basis) {
        std::vector<long double> v;
        for (const auto& x : e) v.push_back(x.convert_to<long double>());
        bl.push_back(v);
    }
    for (const auto& P : points) {
        if (P.size() != basis[0].size()) throw InputError("point of wrong dimension");
        std::vector<long double> pl(P.begin(), P.end());
        long double np = norm_t(pl);
        if (np == 0) continue;
        ++rep.checked;
        auto [lam, u] = project_t(bl, pl);
        long double dist = norm_t(u) / np;
        long double lognp = std::log(np);
        long double margin = (dist > 0 ? std::log(dist) : -INFINITY) + rep.bound_exponent * lognp;
        bool violated = margin < 0;
        if (std::fabs(margin) < 1e-6L) {
            std::vector<Real> pr(P.begin(), P.end());
            Projection exact_pr = project(basis, pr);
            Real lhs = exact_pr.distance;
            Real rhs = bmp::pow(norm_t(pr), -Real(rep.bound_exponent));
            violated = lhs < rhs;
        }
        if (violated) {
            if (np >= threshold)
                ++rep.violations_above;
            else
                ++rep.violations_below;
            rep.largest_violation_norm = std::max(rep.largest_violation_norm, static_cast<double>(np));
        }
        if (np >= threshold && lognp > 0 && dist > 0)
            rep.worst_exponent = std::max(rep.worst_exponent, static_cast<double>(-std::log(dist) / lognp));
    }
    return rep;
}

std::vector<std::pair<BigInt, BigInt>> convergents(const Real& x, int count) {
    std::vector<std::pair<BigInt, BigInt>> out;
    BigInt pm2(0), qm2(1), pm1(1), qm1(0);
    Real y = x;
    const Real tiny = bmp::pow(Real(10), -Real(static_cast<long>(current_digits()) - 10));
    for (int m = 0; m < count; ++m) {
        Real fl = bmp::floor(y);
        if (bmp::abs(fl) > Real("1e17")) throw NumericError("partial quotient too large");
        BigInt am(fl.convert_to<long>());
        BigInt p = am * pm1 + pm2, q = am * qm1 + qm2;
        out.emplace_back(p, q);
        pm2 = pm1;
        qm2 = qm1;
        pm1 = p;
        qm1 = q;
        Real frac = y - fl;
        if (frac < tiny) {
            if (m + 1 < count) throw NumericError("continued fraction terminated or precision exhausted");
            break;
        }
        y = 1 / frac;
    }
    return out;
}

}  // namespace zc::crit
