#pragma once

#include <map>
#include <utility>
#include <vector>

#include "zc/exact.hpp"

namespace zc::forms {

using exact::BigInt;
using exact::BigRational;

struct FormSpec {
    int a = 0;
    int r = 0;
    int n = 0;

    // Throws InputError unless a odd, r >= 1, n >= 1, 6r <= a and decay exponent >= 2.
    void validate() const;
    // R(t) = O(t^{-decay_exponent()}) as t -> infinity.
    long decay_exponent() const { return 2L * n * (a - 6 * r) + a; }
    bool operator==(const FormSpec&) const = default;
};

struct LinearFactor {
    long root;
    int multiplicity;
};

// R(t) = scale * prod (t - z)^m over numerator / prod (t - j)^a over poles.
struct Summand {
    FormSpec spec;
    BigInt scale;  // (2n)!^{a-6r}
    std::vector<LinearFactor> numerator;
    std::vector<LinearFactor> poles;

    long numerator_degree() const;
    long denominator_degree() const;
    bool is_pole(const BigRational& t) const;
    // exact value; throws InputError at a pole
    BigRational operator()(const BigRational& t) const;
};

Summand build_summand(const FormSpec& spec);

// The defining Pochhammer quotient evaluated literally (independent of build_summand).
BigRational summand_pochhammer(const FormSpec& spec, const BigRational& t);

struct PartialFractionTable {
    FormSpec spec;
    // c[i-1][j+n] = c_{i,j}, i = 1..a, j = -n..n
    std::vector<std::vector<BigRational>> c;

    const BigRational& at(int i, long j) const;
    BigRational reconstruct(const BigRational& t) const;
};

PartialFractionTable partial_fractions(const Summand& summand);

enum class FormKind { Plain, DoubleDerived };

struct ZetaLinearForm {
    FormSpec spec;
    FormKind kind = FormKind::Plain;
    BigRational constant;           // l_0 or l''_0
    std::vector<BigRational> ell;   // ell[i] = l_i for i = 0..a; ell[0] = ell[1] = 0

    // odd i in 3..a -> l_i
    std::map<int, BigRational> zeta_coeffs() const;
    // zeta argument carrying l_i: i (plain) or i+2 (derived)
    int zeta_argument(int i) const;
    // 1 (plain) or binom(i+1, 2) (derived)
    BigInt multiplier(int i) const;
    // (zeta argument, full coefficient) for every i = 2..a, even ones included
    std::vector<std::pair<int, BigRational>> zeta_terms() const;
};

ZetaLinearForm zeta_form_plain(const PartialFractionTable& table);
ZetaLinearForm zeta_form_derived(const PartialFractionTable& table);

struct DenominatorReport {
    BigInt common;                 // d_{2n}^{a+2}
    std::vector<BigInt> scaled;    // common * coefficient, constant first then l_3, l_5, ...
    bool pass = false;
    int smallest_exponent = -1;    // least e with d_{2n}^e clearing everything, -1 if > a+2
};

DenominatorReport denominator_check(const ZetaLinearForm& form);

struct GrowthPoint {
    int n;
    double max_log_over_n;        // max over odd i >= 3 of log|l_i| / n
    double log_constant_over_n;   // log|l_0| / n, reported only
    double log_constant_pp_over_n;
    bool exceeds;
};

struct GrowthReport {
    int a, r;
    double bound;  // 2(a-6r) log 2 + 6(2r+1) log(2r+1)
    double slack;
    std::vector<GrowthPoint> series;
    bool pass() const;
};

double growth_bound(int a, int r);
GrowthReport coeff_growth(int a, int r, const std::vector<int>& ns, double slack = 0.5);

}  // namespace zc::forms
