#include <doctest.h>

#include <cmath>
#include <random>

#include "zc/errors.hpp"
#include "zc/forms.hpp"
#include "zc/forms_json.hpp"
#include "zc/qpoly.hpp"

using namespace zc;
using namespace zc::forms;
using exact::QPolynomial;

namespace {

// c_{i,j} by expanding K*N(t) and D_j(t) = prod_{j' != j} (t-j')^a as full polynomials,
// shifting to t = j + h and running ascending long division.
std::vector<BigRational> oracle_pole_coeffs(const FormSpec& s, long j) {
    const long top = static_cast<long>(2 * s.r + 1) * s.n;
    QPolynomial num = QPolynomial::constant(BigRational(exact::factorial(2UL * s.n)));
    num = num.pow(static_cast<unsigned long>(s.a - 6 * s.r));
    for (long z = s.n + 1; z <= top; ++z) num *= QPolynomial::linear_factor(z).pow(3);
    for (long z = -top; z <= -s.n - 1; ++z) num *= QPolynomial::linear_factor(z).pow(3);
    QPolynomial den = QPolynomial::constant(1);
    for (long q = -s.n; q <= s.n; ++q)
        if (q != j) den *= QPolynomial::linear_factor(q).pow(static_cast<unsigned long>(s.a));
    QPolynomial rem = num.shift(j), d = den.shift(j);
    std::vector<BigRational> out;
    for (int k = 0; k < s.a; ++k) {
        BigRational qk = rem.coeff(static_cast<unsigned long>(k)) / d.coeff(0);
        out.push_back(qk);
        rem -= QPolynomial::monomial(qk, static_cast<unsigned long>(k)) * d;
    }
    return out;  // out[m] = [h^m]
}

BigRational random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-400, 400), den(1, 37);
    BigRational t = exact::make_rational(num(rng), den(rng));
    return t.get_den() == 1 ? t + BigRational(1, 2) : t;
}

const std::vector<FormSpec> kGrid = [] {
    std::vector<FormSpec> g;
    for (int a : {7, 9, 11, 13})
        for (int r : {1, 2})
            if (6 * r <= a)
                for (int n = 1; n <= 4; ++n) g.push_back({a, r, n});
    return g;
}();

}  // namespace

TEST_CASE("spec validation") {
    CHECK_NOTHROW((FormSpec{7, 1, 1}.validate()));
    CHECK_THROWS_AS((FormSpec{8, 1, 1}.validate()), InputError);
    CHECK_THROWS_AS((FormSpec{7, 2, 1}.validate()), InputError);
    CHECK_THROWS_AS((FormSpec{7, 0, 1}.validate()), InputError);
    CHECK_THROWS_AS((FormSpec{7, 1, 0}.validate()), InputError);
    CHECK_NOTHROW((FormSpec{13, 2, 3}.validate()));
}

TEST_CASE("summand structure for (7,1,1)") {
    auto s = build_summand({7, 1, 1});
    CHECK(s.numerator_degree() == 12);
    CHECK(s.denominator_degree() == 21);
    CHECK(s.poles.size() == 3);
    for (const auto& p : s.poles) CHECK(p.multiplicity == 7);
    CHECK(s.scale == 2);
    CHECK(FormSpec{7, 1, 1}.decay_exponent() == 9);
}

TEST_CASE("summand exact values") {
    FormSpec s{7, 1, 1};
    auto R = build_summand(s);
    CHECK(R(2) == 0);
    CHECK(summand_pochhammer(s, 2) == 0);
    // 2 * (1*2)^3 * (6*7)^3 / (3*4*5)^7
    BigRational expect = BigRational(2 * 8 * 74088) / BigRational(BigInt("2799360000000"));
    CHECK(R(4) == expect);
    CHECK(summand_pochhammer(s, 4) == expect);
    CHECK_THROWS_AS(R(0), InputError);
}

TEST_CASE("summand agrees with the Pochhammer quotient and is odd") {
    std::mt19937_64 rng(17);
    for (const auto& s : kGrid) {
        auto R = build_summand(s);
        for (int k = 0; k < 10; ++k) {
            BigRational t = random_point(rng);
            CHECK(R(t) == summand_pochhammer(s, t));
            CHECK(R(-t) == -R(t));
        }
    }
    auto R = build_summand({7, 1, 1});
    for (int k = 0; k < 50; ++k) {
        BigRational t = random_point(rng);
        CHECK(R(-t) == -R(t));
    }
}

TEST_CASE("partial fractions match the long-division oracle") {
    for (FormSpec s : {FormSpec{7, 1, 1}, FormSpec{7, 1, 2}, FormSpec{13, 2, 1}}) {
        auto table = partial_fractions(build_summand(s));
        for (long j = -s.n; j <= s.n; ++j) {
            auto o = oracle_pole_coeffs(s, j);
            for (int i = 1; i <= s.a; ++i) CHECK(table.at(i, j) == o[static_cast<size_t>(s.a - i)]);
        }
    }
}

TEST_CASE("partial fractions for (7,1,1) frozen values") {
    auto t = partial_fractions(build_summand({7, 1, 1}));
    CHECK(t.at(1, -1) == 2653847);
    CHECK(t.at(1, 0) == -5307694);
    CHECK(t.at(2, 1) == BigRational(-8041445, 8));
    CHECK(t.at(3, 0) == -1949400);
    CHECK(t.at(4, -1) == BigRational(727613, 8));
    CHECK(t.at(6, 0) == 0);
    CHECK(t.at(7, 0) == -93312);
    CHECK(t.at(7, 1) == 216);
    CHECK(t.reconstruct(BigRational(3, 2)) == build_summand({7, 1, 1})(BigRational(3, 2)));
}

TEST_CASE("reconstruction, convergence and parity across the grid") {
    std::mt19937_64 rng(23);
    for (const auto& s : kGrid) {
        auto R = build_summand(s);
        auto table = partial_fractions(R);
        BigRational c1 = 0;
        for (long j = -s.n; j <= s.n; ++j) c1 += table.at(1, j);
        CHECK(c1 == 0);
        for (int k = 0; k < 5; ++k) {
            BigRational t = random_point(rng);
            CHECK(table.reconstruct(t) == R(t));
        }
        auto plain = zeta_form_plain(table);
        for (int i = 2; i <= s.a; i += 2) CHECK(plain.ell[static_cast<size_t>(i)] == 0);
    }
    auto R = build_summand({9, 1, 2});
    auto table = partial_fractions(R);
    for (int k = 0; k < 100; ++k) {
        BigRational t = random_point(rng);
        CHECK(table.reconstruct(t) == R(t));
    }
}

TEST_CASE("zeta forms for (7,1,1) match the independent oracle") {
    auto table = partial_fractions(build_summand({7, 1, 1}));
    auto plain = zeta_form_plain(table);
    auto derived = zeta_form_derived(table);
    CHECK(plain.constant == BigRational(278121861, 128));
    CHECK(derived.constant == BigRational(588007057, 32));
    auto z = plain.zeta_coeffs();
    CHECK(z.size() == 3);
    CHECK(z[3] == BigRational(-2573943, 2));
    CHECK(z[5] == -513207);
    CHECK(z[7] == -92880);
    for (int i : {2, 4, 6}) CHECK(plain.ell[static_cast<size_t>(i)] == 0);
    CHECK(derived.ell == plain.ell);
}

TEST_CASE("finite partial sums reproduce the constant term") {
    // sum_{t=n+1}^{T} R(t) = l_0 + sum_{i,j} c_{i,j} H^{(i)}_{T-j}
    for (FormSpec s : {FormSpec{7, 1, 2}, FormSpec{11, 1, 2}, FormSpec{13, 2, 1}}) {
        auto table = partial_fractions(build_summand(s));
        auto plain = zeta_form_plain(table);
        BigRational lhs = 0;
        for (long T = s.n + 1; T <= s.n + 25; ++T) {
            lhs += summand_pochhammer(s, T);
            BigRational rhs = plain.constant;
            for (int i = 1; i <= s.a; ++i)
                for (long j = -s.n; j <= s.n; ++j)
                    rhs += table.at(i, j) * exact::harmonic(T - j, static_cast<unsigned>(i));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("derived multipliers") {
    auto table = partial_fractions(build_summand({7, 1, 1}));
    auto d = zeta_form_derived(table);
    CHECK(d.multiplier(3) == 6);
    CHECK(d.multiplier(5) == 15);
    CHECK(d.zeta_argument(3) == 5);
    CHECK(d.zeta_argument(5) == 7);
    auto p = zeta_form_plain(table);
    CHECK(p.multiplier(5) == 1);
    CHECK(p.zeta_argument(5) == 5);
}

TEST_CASE("denominator check") {
    for (FormSpec s : {FormSpec{7, 1, 1}, FormSpec{7, 1, 3}}) {
        auto table = partial_fractions(build_summand(s));
        for (const auto& f : {zeta_form_plain(table), zeta_form_derived(table)}) {
            auto rep = denominator_check(f);
            CHECK(rep.pass);
            CHECK(rep.smallest_exponent >= 0);
            CHECK(rep.smallest_exponent <= s.a + 2);
            CHECK(rep.scaled.size() == static_cast<size_t>((s.a + 1) / 2));
        }
    }
}

TEST_CASE("growth bound arithmetic") {
    CHECK(growth_bound(7, 1) == doctest::Approx(2 * std::log(2.0) + 18 * std::log(3.0)));
    auto rep = coeff_growth(7, 1, {1, 2, 3, 4});
    CHECK(rep.series.size() == 4);
    CHECK(rep.pass());
}

TEST_CASE("json is canonical and round-trips") {
    auto table = partial_fractions(build_summand({7, 1, 2}));
    auto f = zeta_form_derived(table);
    auto j1 = to_json(f).dump();
    auto j2 = to_json(zeta_form_derived(partial_fractions(build_summand({7, 1, 2})))).dump();
    CHECK(j1 == j2);
    auto back = form_from_json(Json::parse(j1));
    CHECK(back.constant == f.constant);
    CHECK(back.ell == f.ell);
    CHECK(back.kind == FormKind::DoubleDerived);
    auto r = rational_json(exact::make_rational(-6, 4));
    CHECK(r["num"] == "-3");
    CHECK(r["den"] == "2");
    CHECK_THROWS_AS(form_from_json(Json::parse(R"({"spec":{"a":8,"r":1,"n":1}})")), InputError);
}
