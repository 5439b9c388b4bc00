#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace zc::exact {

using BigInt = mpz_class;
using BigRational = mpq_class;  // gmpxx keeps results canonical

// num/den reduced; throws InputError when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational parse_rational(const std::string& s);  // "p", "p/q"
std::string to_string(const BigRational& q);

BigRational pochhammer(const BigRational& alpha, unsigned long k);
BigInt factorial(unsigned long k);
BigInt binomial(unsigned long n, unsigned long k);

// d_k = lcm(1..k), assembled from the largest prime power p^e <= k.
BigInt lcm_upto(unsigned long k);
std::vector<unsigned long> primes_upto(unsigned long k);

// Generalized harmonic number sum_{m=1}^{M} m^{-i}; zero for M <= 0.
BigRational harmonic(long M, unsigned i);

// log|x| in double precision without overflow for huge integers.
double log_abs(const BigInt& x);
double log_abs(const BigRational& x);

}  // namespace zc::exact
