#include <string>

#include "zc/errors.hpp"
#include "zc/forms.hpp"

namespace zc::forms {

void FormSpec::validate() const {
    auto fail = [&](const std::string& why) {
        throw InputError("invalid spec (a=" + std::to_string(a) + ", r=" + std::to_string(r) +
                         ", n=" + std::to_string(n) + "): " + why);
    };
    if (a < 1 || a % 2 == 0) fail("a must be an odd positive integer");
    if (r < 1) fail("r must be >= 1");
    if (n < 1) fail("n must be >= 1");
    if (6 * r > a) fail("need 6r <= a");
    if (decay_exponent() < 2) fail("series does not converge absolutely");
}

long Summand::numerator_degree() const {
    long d = 0;
    for (const auto& f : numerator) d += f.multiplicity;
    return d;
}

long Summand::denominator_degree() const {
    long d = 0;
    for (const auto& f : poles) d += f.multiplicity;
    return d;
}

bool Summand::is_pole(const BigRational& t) const {
    if (t.get_den() != 1) return false;
    for (const auto& f : poles)
        if (t == f.root) return true;
    return false;
}

namespace {

BigRational power(const BigRational& x, int e) {
    BigRational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

}  // namespace

BigRational Summand::operator()(const BigRational& t) const {
    if (is_pole(t)) throw InputError("summand evaluated at a pole");
    BigRational num = 1;
    for (const auto& f : numerator) num *= power(t - f.root, f.multiplicity);
    BigRational den = 1;
    for (const auto& f : poles) den *= power(t - f.root, f.multiplicity);
    return BigRational(scale) * num / den;
}

Summand build_summand(const FormSpec& spec) {
    spec.validate();
    const int a = spec.a, r = spec.r, n = spec.n;
    Summand s;
    s.spec = spec;
    mpz_pow_ui(s.scale.get_mpz_t(), exact::factorial(2UL * n).get_mpz_t(),
               static_cast<unsigned long>(a - 6 * r));
    const long top = static_cast<long>(2 * r + 1) * n;
    // (t-(2r+1)n)_{2rn}: zeros n+1..(2r+1)n; (t+n+1)_{2rn}: zeros -(2r+1)n..-n-1
    for (long z = n + 1; z <= top; ++z) s.numerator.push_back({z, 3});
    for (long z = -top; z <= -n - 1; ++z) s.numerator.push_back({z, 3});
    for (long j = -n; j <= n; ++j) s.poles.push_back({j, a});
    return s;
}

BigRational summand_pochhammer(const FormSpec& spec, const BigRational& t) {
    spec.validate();
    const int a = spec.a, r = spec.r, n = spec.n;
    const unsigned long len = 2UL * r * n;
    BigRational p1 = exact::pochhammer(t - BigRational((2 * r + 1) * n), len);
    BigRational p2 = exact::pochhammer(t + BigRational(n + 1), len);
    BigRational q = exact::pochhammer(t - BigRational(n), 2UL * n + 1);
    if (q == 0) throw InputError("summand evaluated at a pole");
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), exact::factorial(2UL * n).get_mpz_t(), static_cast<unsigned long>(a - 6 * r));
    return BigRational(scale) * power(p1, 3) * power(p2, 3) / power(q, a);
}

}  // namespace zc::forms
