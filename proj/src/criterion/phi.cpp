#include <cmath>

#include "zc/criterion.hpp"
#include "zc/errors.hpp"

namespace zc::crit {

namespace {

// sign of Q_m^den - Q_n^{num+den}
int compare_power(const BigInt& qm, const BigInt& qn, const BigRational& one_plus) {
    const BigInt& num = one_plus.get_num();
    const BigInt& den = one_plus.get_den();
    double lhs = exact::log_abs(qm) * den.get_d();
    double rhs = exact::log_abs(qn) * num.get_d();
    double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    if (lhs - rhs > 1e-9 * scale) return 1;
    if (rhs - lhs > 1e-9 * scale) return -1;
    if (!den.fits_ulong_p() || !num.fits_ulong_p() || lhs > 1e7)
        throw NumericError("phi_build: exact comparison too large");
    BigInt a, b;
    mpz_pow_ui(a.get_mpz_t(), qm.get_mpz_t(), den.get_ui());
    mpz_pow_ui(b.get_mpz_t(), qn.get_mpz_t(), num.get_ui());
    return cmp(a, b) > 0 ? 1 : (cmp(a, b) < 0 ? -1 : 0);
}

}  // namespace

const BigInt& QSequence::at(int n) const {
    if (n < 1 || n > size()) throw InputError("Q index out of range");
    return values[n - 1];
}

void QSequence::validate() const {
    if (values.empty()) throw InputError("empty Q sequence");
    if (values[0] < 1) throw InputError("Q_1 must be >= 1");
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1]) throw InputError("Q sequence not strictly increasing");
}

int phi_build(const QSequence& q, const BigRational& eps1, int n) {
    q.validate();
    if (eps1 <= 0) throw InputError("eps1 must be positive");
    const BigInt& qn = q.at(n);
    BigRational one_plus = 1 + eps1;
    for (int m = n + 1; m <= q.size(); ++m)
        if (compare_power(q.at(m), qn, one_plus) > 0) return m;
    throw InputError("Q sequence exhausted before Q_n^{1+eps1}");
}

BigRational choose_eps1(int k, const BigRational& tau1, const BigRational& eps) {
    if (k < 1 || tau1 <= 0 || eps <= 0) throw InputError("choose_eps1: need k >= 1, tau1 > 0, eps > 0");
    if (k == 1) return BigRational(1);
    BigRational e(1);
    for (int guard = 0; guard < 4096; ++guard) {
        BigRational pw(1);
        for (int i = 0; i < k - 1; ++i) pw *= 1 + e;
        if ((pw - 1) * tau1 < eps / 4 && pw <= 1 + eps / 2) return e;
        e /= 2;
    }
    throw NumericError("choose_eps1: no dyadic value found");
}

}  // namespace zc::crit
