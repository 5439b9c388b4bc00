#include <algorithm>
#include <cmath>

#include "zc/errors.hpp"
#include "zc/forms.hpp"

namespace zc::forms {

std::map<int, BigRational> ZetaLinearForm::zeta_coeffs() const {
    std::map<int, BigRational> out;
    for (int i = 3; i <= spec.a; i += 2) out[i] = ell[static_cast<size_t>(i)];
    return out;
}

int ZetaLinearForm::zeta_argument(int i) const { return kind == FormKind::Plain ? i : i + 2; }

BigInt ZetaLinearForm::multiplier(int i) const {
    return kind == FormKind::Plain ? BigInt(1) : exact::binomial(static_cast<unsigned long>(i + 1), 2);
}

std::vector<std::pair<int, BigRational>> ZetaLinearForm::zeta_terms() const {
    std::vector<std::pair<int, BigRational>> out;
    for (int i = 2; i <= spec.a; ++i)
        out.emplace_back(zeta_argument(i), BigRational(multiplier(i)) * ell[static_cast<size_t>(i)]);
    return out;
}

namespace {

// H[i][m] = sum_{k=1}^m k^{-i} for m = 0..2n, i = 0..imax
std::vector<std::vector<BigRational>> harmonic_table(int imax, int mmax) {
    std::vector<std::vector<BigRational>> h(static_cast<size_t>(imax + 1),
                                            std::vector<BigRational>(static_cast<size_t>(mmax + 1)));
    for (int i = 1; i <= imax; ++i) {
        BigRational acc = 0;
        for (int m = 1; m <= mmax; ++m) {
            BigInt d;
            mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(i));
            acc += BigRational(1, d);
            h[static_cast<size_t>(i)][static_cast<size_t>(m)] = acc;
        }
    }
    return h;
}

ZetaLinearForm build_form(const PartialFractionTable& t, FormKind kind) {
    const FormSpec& spec = t.spec;
    const int a = spec.a, n = spec.n;
    BigRational c1 = 0;
    for (long j = -n; j <= n; ++j) c1 += t.at(1, j);
    if (c1 != 0) throw InvariantError("residues at simple poles do not sum to zero; series would diverge");

    ZetaLinearForm form;
    form.spec = spec;
    form.kind = kind;
    form.ell.assign(static_cast<size_t>(a + 1), BigRational(0));
    for (int i = 2; i <= a; ++i) {
        BigRational s = 0;
        for (long j = -n; j <= n; ++j) s += t.at(i, j);
        form.ell[static_cast<size_t>(i)] = s;
    }
    for (int i = 2; i <= a; i += 2)
        if (form.ell[static_cast<size_t>(i)] != 0)
            throw InvariantError("nonzero coefficient at an even zeta argument");

    // sum_{t>n} (t-j)^{-s} = zeta(s) - H^{(s)}_{n-j}; the s = 1 part telescopes because sum_j c_{1,j} = 0
    const int shift = kind == FormKind::Plain ? 0 : 2;
    auto h = harmonic_table(a + shift, 2 * n);
    BigRational constant = 0;
    for (int i = 1; i <= a; ++i) {
        BigRational weight = kind == FormKind::Plain
                                 ? BigRational(1)
                                 : BigRational(exact::binomial(static_cast<unsigned long>(i + 1), 2));
        BigRational s = 0;
        for (long j = -n; j <= n; ++j) s += t.at(i, j) * h[static_cast<size_t>(i + shift)][static_cast<size_t>(n - j)];
        constant -= weight * s;
    }
    form.constant = constant;
    return form;
}

}  // namespace

ZetaLinearForm zeta_form_plain(const PartialFractionTable& table) { return build_form(table, FormKind::Plain); }

ZetaLinearForm zeta_form_derived(const PartialFractionTable& table) {
    return build_form(table, FormKind::DoubleDerived);
}

DenominatorReport denominator_check(const ZetaLinearForm& form) {
    const int a = form.spec.a;
    BigInt d = exact::lcm_upto(2UL * form.spec.n);
    std::vector<BigRational> coeffs{form.constant};
    for (int i = 3; i <= a; i += 2) coeffs.push_back(form.ell[static_cast<size_t>(i)]);

    DenominatorReport rep;
    mpz_pow_ui(rep.common.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(a + 2));
    rep.pass = true;
    for (const auto& c : coeffs) {
        BigRational s = BigRational(rep.common) * c;
        if (s.get_den() != 1) rep.pass = false;
        rep.scaled.push_back(s.get_num());
    }
    BigInt de = 1;
    for (int e = 0; e <= a + 2; ++e) {
        bool clears = std::all_of(coeffs.begin(), coeffs.end(), [&](const BigRational& c) {
            BigRational s = BigRational(de) * c;
            return s.get_den() == 1;
        });
        if (clears) {
            rep.smallest_exponent = e;
            break;
        }
        de *= d;
    }
    return rep;
}

double growth_bound(int a, int r) {
    return 2.0 * (a - 6 * r) * std::log(2.0) + 6.0 * (2 * r + 1) * std::log(2.0 * r + 1);
}

bool GrowthReport::pass() const {
    return std::none_of(series.begin(), series.end(), [](const GrowthPoint& p) { return p.exceeds; });
}

GrowthReport coeff_growth(int a, int r, const std::vector<int>& ns, double slack) {
    if (ns.empty()) throw InputError("coeff_growth needs at least one n");
    GrowthReport rep{a, r, growth_bound(a, r), slack, {}};
    for (int n : ns) {
        FormSpec spec{a, r, n};
        auto table = partial_fractions(build_summand(spec));
        auto plain = zeta_form_plain(table);
        auto derived = zeta_form_derived(table);
        double m = -INFINITY;
        for (int i = 3; i <= a; i += 2) m = std::max(m, exact::log_abs(plain.ell[static_cast<size_t>(i)]));
        GrowthPoint p{n, m / n, exact::log_abs(plain.constant) / n, exact::log_abs(derived.constant) / n, false};
        p.exceeds = p.max_log_over_n > rep.bound + slack;
        rep.series.push_back(p);
    }
    std::sort(rep.series.begin(), rep.series.end(), [](const auto& x, const auto& y) { return x.n < y.n; });
    return rep;
}

}  // namespace zc::forms
