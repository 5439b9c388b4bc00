#include "zc/exact.hpp"

#include <cmath>

#include "zc/errors.hpp"

namespace zc::exact {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s, 10));
        return make_rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw InputError("not a rational number: '" + s + "'");
    }
}

std::string to_string(const BigRational& q) { return q.get_str(); }

BigRational pochhammer(const BigRational& alpha, unsigned long k) {
    BigRational acc = 1;
    BigRational x = alpha;
    for (unsigned long i = 0; i < k; ++i) {
        acc *= x;
        if (acc == 0) return acc;
        x += 1;
    }
    return acc;
}

BigInt factorial(unsigned long k) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

std::vector<unsigned long> primes_upto(unsigned long k) {
    std::vector<unsigned long> out;
    if (k < 2) return out;
    std::vector<bool> composite(k + 1, false);
    for (unsigned long p = 2; p <= k; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (unsigned long m = p * p; m <= k; m += p) composite[m] = true;
    }
    return out;
}

BigInt lcm_upto(unsigned long k) {
    if (k < 1) throw InputError("lcm_upto needs k >= 1");
    // multiply prime powers in a balanced tree to keep operands similar in size
    std::vector<BigInt> parts;
    for (unsigned long p : primes_upto(k)) {
        unsigned long q = p;
        while (q <= k / p) q *= p;
        parts.emplace_back(q);
    }
    if (parts.empty()) return 1;
    while (parts.size() > 1) {
        std::vector<BigInt> next;
        next.reserve((parts.size() + 1) / 2);
        for (size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] * parts[i + 1]);
        if (parts.size() % 2) next.push_back(parts.back());
        parts.swap(next);
    }
    return parts[0];
}

BigRational harmonic(long M, unsigned i) {
    BigRational h = 0;
    for (long m = 1; m <= M; ++m) {
        BigInt d;
        mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(m), i);
        h += BigRational(1, d);
    }
    h.canonicalize();
    return h;
}

double log_abs(const BigInt& x) {
    if (x == 0) return -INFINITY;
    long e = 0;
    double m = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

double log_abs(const BigRational& x) {
    if (x == 0) return -INFINITY;
    return log_abs(x.get_num()) - log_abs(x.get_den());
}

}  // namespace zc::exact
