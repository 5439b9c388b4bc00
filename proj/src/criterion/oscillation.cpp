#include <cmath>

#include "zc/criterion.hpp"
#include "zc/errors.hpp"

namespace zc::crit {

OscillationResult oscillation_subsequence(const std::vector<double>& omega, const std::vector<double>& phi,
                                          double eps, long horizon, long count) {
    if (omega.empty() || omega.size() != phi.size()) throw InputError("oscillation: omega and phi differ in length");
    if (!(eps > 0) || !(eps < 1) || horizon < 1) throw InputError("oscillation: need 0 < eps < 1 and horizon >= 1");
    OscillationResult res;
    for (long n = 1; n <= horizon; ++n) {
        bool ok = true;
        for (size_t j = 0; j < omega.size() && ok; ++j) ok = std::fabs(std::cos(n * omega[j] + phi[j])) >= eps;
        if (ok) {
            res.psi.push_back(n);
            if (count > 0 && static_cast<long>(res.psi.size()) == count) break;
        }
    }
    if (res.psi.empty() || (count > 0 && static_cast<long>(res.psi.size()) < count))
        throw NumericError("oscillation: horizon exhausted");
    res.density = static_cast<double>(res.psi.size()) / (count > 0 ? res.psi.back() : horizon);
    res.lambda = static_cast<double>(res.psi.back()) / res.psi.size();
    return res;
}

}  // namespace zc::crit
