#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "zc/errors.hpp"
#include "zc/exact.hpp"
#include "zc/qpoly.hpp"
#include "zc/real.hpp"

using namespace zc;
using namespace zc::exact;

namespace {

BigRational random_rational(std::mt19937_64& rng, long span = 40) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return make_rational(BigInt(num(rng)), BigInt(den(rng)));
}

BigInt lcm_fold(unsigned long k) {
    BigInt acc = 1;
    for (unsigned long m = 1; m <= k; ++m) mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), m);
    return acc;
}

}  // namespace

TEST_CASE("pochhammer small values") {
    CHECK(pochhammer(1, 3) == 6);
    CHECK(pochhammer(BigRational(7, 3), 0) == 1);
    CHECK(pochhammer(-2, 5) == 0);
    CHECK(pochhammer(BigRational(1, 2), 2) == BigRational(3, 4));
}

TEST_CASE("pochhammer splits at any index") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        BigRational alpha = random_rational(rng);
        unsigned long j = rng() % 8, k = rng() % 8;
        CHECK(pochhammer(alpha, j + k) == pochhammer(alpha, j) * pochhammer(alpha + j, k));
    }
}

TEST_CASE("lcm_upto agrees with a pairwise fold") {
    CHECK(lcm_upto(1) == 1);
    CHECK(lcm_upto(4) == 12);
    CHECK(lcm_upto(10) == 2520);
    for (unsigned long k = 1; k <= 300; ++k) CHECK(lcm_upto(k) == lcm_fold(k));
    CHECK_THROWS_AS(lcm_upto(0), InputError);
}

TEST_CASE("lcm_upto is nondecreasing") {
    BigInt prev = 1;
    for (unsigned long k = 1; k <= 500; ++k) {
        BigInt cur = lcm_upto(k);
        CHECK(cur >= prev);
        CHECK(cur % prev == 0);
        prev = cur;
    }
}

TEST_CASE("log d_k / k approaches 1") {
    double prev_gap = 1e9;
    for (unsigned long k : {1000UL, 10000UL, 100000UL}) {
        double ratio = log_abs(lcm_upto(k)) / static_cast<double>(k);
        CHECK(ratio > 0.9);
        CHECK(ratio < 1.1);
        CHECK(std::fabs(ratio - 1) < prev_gap);
        prev_gap = std::fabs(ratio - 1);
    }
}

TEST_CASE("rational arithmetic is exact and canonical") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        BigRational x = random_rational(rng, 1000000), y = random_rational(rng, 1000000);
        BigRational z = (x + y) - y;
        CHECK(z == x);
        CHECK(z.get_num() == x.get_num());
        CHECK(z.get_den() == x.get_den());
        CHECK(z.get_den() > 0);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), z.get_num_mpz_t(), z.get_den_mpz_t());
        CHECK((z == 0 ? z.get_den() == 1 : g == 1));
    }
    CHECK(make_rational(6, -4) == BigRational(-3, 2));
    CHECK(make_rational(6, -4).get_den() == 2);
    CHECK(make_rational(0, 5).get_den() == 1);
    CHECK_THROWS_AS(make_rational(1, 0), InputError);
    CHECK(parse_rational("-10/4") == BigRational(-5, 2));
    CHECK_THROWS_AS(parse_rational("x/2"), InputError);
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 2) == 15);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0, 3) == 0);
    CHECK(harmonic(3, 1) == BigRational(11, 6));
    CHECK(harmonic(2, 3) == BigRational(9, 8));
}

TEST_CASE("QPolynomial canonical degree") {
    QPolynomial zero;
    CHECK(zero.degree() == QPolynomial::kZeroDegree);
    QPolynomial p({1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK((p - p).degree() == QPolynomial::kZeroDegree);
}

TEST_CASE("QPolynomial arithmetic identities") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BigRational> a(rng() % 6 + 1), b(rng() % 5 + 1);
        for (auto& x : a) x = random_rational(rng);
        for (auto& x : b) x = random_rational(rng);
        QPolynomial p(a), q(b);
        if (q.is_zero()) continue;
        auto [quo, rem] = p.divmod(q);
        CHECK(quo * q + rem == p);
        CHECK(rem.degree() < q.degree());
        BigRational x = random_rational(rng), h = random_rational(rng);
        CHECK((p * q)(x) == p(x) * q(x));
        CHECK(p.shift(h)(x) == p(x + h));
        CHECK(p.pow(3)(x) == p(x) * p(x) * p(x));
    }
    QPolynomial cube = QPolynomial::linear_factor(2).pow(3);
    CHECK(cube.derivative() == QPolynomial(std::vector<BigRational>{12, -12, 3}));
}

TEST_CASE("series division inverts multiplication") {
    std::vector<BigRational> den{2, -1, BigRational(1, 3)}, num{1, 5};
    auto q = series_divide(num, den, 8);
    // (q * den) truncated equals num
    for (size_t m = 0; m < 8; ++m) {
        BigRational acc = 0;
        for (size_t p = 0; p <= m && p < den.size(); ++p) acc += den[p] * q[m - p];
        CHECK(acc == (m < num.size() ? num[m] : BigRational(0)));
    }
}

TEST_CASE("poly_eval_precise examples") {
    WorkingDigits wd(50);
    Real tol("1e-48");
    auto e1 = poly_eval_precise(QPolynomial({-1, 1}), Complex(Real(1)));
    CHECK(abs(e1.value) < tol);
    auto e2 = poly_eval_precise(QPolynomial({1, 0, 1}), Complex(Real(0), Real(1)));
    CHECK(abs(e2.value) < tol);
    auto e3 = poly_eval_precise(QPolynomial({2, 3}), Complex(Real(1) / 3));
    CHECK(abs(e3.value - Complex(Real(3))) < tol);
    CHECK(e3.error_bound < tol);
}

TEST_CASE("complex helpers") {
    WorkingDigits wd(40);
    Real tol("1e-35");
    Complex z(Real(3), Real(-4));
    CHECK(abs(abs(z) - 5) < tol);
    CHECK(abs(exp(log(z)) - z) < tol);
    CHECK(abs(powi(z, 5) - z * z * z * z * z) < tol);
    CHECK(abs(arg(Complex(Real(-1))) - real_pi()) < tol);
    CHECK(abs(reduce_angle(3 * real_pi() - Real("0.1")) - (real_pi() - Real("0.1"))) < tol);
    CHECK(abs(reduce_angle(-3 * real_pi() + Real("0.1")) - (-real_pi() + Real("0.1"))) < tol);
    CHECK(reduce_angle(Real(100)) > -real_pi());
    CHECK(reduce_angle(Real(100)) <= real_pi());
    CHECK(abs(distance_mod(Real("3.5"), Real(0), Real(1)) - Real("0.5")) < tol);
}
