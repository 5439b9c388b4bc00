#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "../support/generators.hpp"
#include "zc/criterion.hpp"
#include "zc/errors.hpp"

using namespace zc;
using namespace zc::crit;
namespace bmp = boost::multiprecision;

namespace {

QSequence powers(long base, int count, int exp_square = 0) {
    QSequence q;
    for (int n = 1; n <= count; ++n) {
        BigInt v;
        unsigned long e = exp_square ? static_cast<unsigned long>(n) * n : static_cast<unsigned long>(n);
        mpz_ui_pow_ui(v.get_mpz_t(), base, e);
        q.values.push_back(v);
    }
    return q;
}

PhiMap shift_phi(int g) {
    return [g](int n) { return n + g; };
}

SymColumn col(SymbolField& f, std::initializer_list<const char*> entries) {
    SymColumn c;
    for (const char* e : entries) c.push_back(parse_sym(f, e));
    return c;
}

nlohmann::json load(const std::string& name) {
    std::ifstream in(std::string(ZC_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

Real golden() {
    return (1 + bmp::sqrt(Real(5))) / 2;
}

}  // namespace

TEST_CASE("phi_build") {
    QSequence q = powers(2, 40);
    CHECK(phi_build(q, BigRational(1), 5) == 11);
    // 3^{n^2}: Q_3^{3/2} = 3^{13.5}, and (m-1)^2 <= 13.5 < m^2 gives m = 4
    QSequence sq = powers(3, 12, 1);
    int scan = 0;
    for (int m = 2; m <= 12; ++m)
        if ((m - 1) * (m - 1) <= 13.5 && 13.5 < m * m) scan = m;
    CHECK(phi_build(sq, exact::make_rational(1, 2), 3) == scan);
    CHECK(scan == 4);
    // exact equality Q_m = Q_n^{1+eps1} is not "<"
    CHECK(phi_build(q, BigRational(1), 3) == 7);
    CHECK_THROWS_AS(phi_build(q, BigRational(1), 30), InputError);
    QSequence bad;
    bad.values = {BigInt(1), BigInt(3), BigInt(3)};
    CHECK_THROWS_AS(phi_build(bad, BigRational(1), 1), InputError);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> step(1, 50);
    for (int trial = 0; trial < 200; ++trial) {
        QSequence s;
        BigInt v(1 + step(rng));
        for (int i = 0; i < 60; ++i) {
            s.values.push_back(v);
            v = v * (1 + step(rng) % 4) + step(rng);
        }
        BigRational e1 = exact::make_rational(1 + step(rng) % 8, 8);
        int n = 1 + step(rng) % 10;
        int m = phi_build(s, e1, n);
        CHECK(m >= n + 1);
        double lhs = std::log(s.at(n).get_d()) * (1 + e1.get_d());
        CHECK(std::log(s.at(m).get_d()) > lhs - 1e-9);
        CHECK(std::log(s.at(m - 1).get_d()) <= lhs + 1e-9);
    }
}

TEST_CASE("choose_eps1") {
    CHECK(choose_eps1(1, BigRational(5), BigRational(1, 100)) == 1);
    CHECK(choose_eps1(2, BigRational(1), BigRational(1)) == BigRational(1, 8));
    for (int k = 2; k <= 6; ++k)
        for (auto tau : {BigRational(1, 3), BigRational(2), BigRational(17, 2)})
            for (auto eps : {BigRational(1, 10), BigRational(1), BigRational(3)}) {
                BigRational e = choose_eps1(k, tau, eps);
                BigRational pw(1);
                for (int i = 0; i < k - 1; ++i) pw *= 1 + e;
                CHECK((pw - 1) * tau < eps / 4);
                CHECK(pw <= 1 + eps / 2);
                if (e < 1) {
                    BigRational e2 = 2 * e, pw2(1);
                    for (int i = 0; i < k - 1; ++i) pw2 *= 1 + e2;
                    CHECK(!((pw2 - 1) * tau < eps / 4 && pw2 <= 1 + eps / 2));
                }
            }
}

TEST_CASE("lemb_check") {
    SUBCASE("identity is an equality") {
        EpsTable t;
        t.k = 2;
        t.eps = {{0.5L, 0.25L, 0.125L, 0.0625L}, {0.9L, 0.8L, 0.7L, 0.6L}};
        LembReport r = lemb_check(t, shift_phi(1), 1, 1);
        REQUIRE(r.conclusion_checked);
        CHECK(r.permutations.size() == 1);
        CHECK(r.permutations[0].log_lhs == r.permutations[0].log_rhs);
    }
    SUBCASE("k = 3, tau = (3, 2, 1), Q_n = 2^n") {
        QSequence q = powers(2, 200);
        // eps1 large enough that Q_n^{eps1} beats (k+1)! = 24 at n = 8
        BigRational eps1(1);
        PhiMap phi = [&](int n) { return phi_build(q, eps1, n); };
        EpsTable t;
        t.k = 3;
        t.n0 = 1;
        for (double tau : {3.0, 2.0, 1.0}) {
            std::vector<long double> row;
            for (int n = 1; n <= 200; ++n) row.push_back(std::pow(2.0L, -tau * n));
            t.eps.push_back(row);
        }
        LembReport r = lemb_check(t, phi, 8, 3);
        CHECK(r.hypothesis_ok);
        REQUIRE(r.conclusion_checked);
        CHECK(r.permutations.size() == 6);
        CHECK(r.conclusion_violations == 0);
    }
    SUBCASE("hypothesis violation is reported, conclusion not asserted") {
        EpsTable t;
        t.k = 2;
        t.eps = {{1e-1L, 1e-2L, 1e-3L, 1e-4L, 1e-5L}, {1e-1L, 1e-3L, 1e-5L, 1e-7L, 1e-9L}};
        LembReport r = lemb_check(t, shift_phi(1), 1, 2);
        CHECK(!r.hypothesis_ok);
        CHECK(!r.hypothesis_violations.empty());
        CHECK(!r.conclusion_checked);
        CHECK(!r.pass());
    }
    SUBCASE("randomized tables satisfying the hypothesis") {
        std::mt19937_64 rng(11);
        int checked = 0;
        for (int trial = 0; trial < 300; ++trial) {
            int k = 2 + trial % 4;
            auto rt = testgen::random_table(rng, k);
            EpsTable t = rt.forms.eps();
            LembReport r = lemb_check(t, shift_phi(rt.gap), 1 + trial % 5, k);
            if (!r.hypothesis_ok) continue;
            ++checked;
            CHECK(r.conclusion_violations == 0);
        }
        CHECK(checked > 250);
    }
}

TEST_CASE("propc_bound") {
    SUBCASE("k = 1 constant is 3") {
        FormTable f;
        f.k = 1;
        f.values = {{0.5L, -0.25L, 0.125L}};
        PropcReport r = propc_bound(f, shift_phi(1), {2.0L}, 1);
        CHECK(r.pass());
        CHECK(static_cast<double>(r.bounds[0]) == doctest::Approx(6.0));
    }
    SUBCASE("M = 0 forces zero bounds") {
        std::mt19937_64 rng(3);
        auto rt = testgen::random_table(rng, 3);
        PropcReport r = propc_bound(rt.forms, shift_phi(rt.gap), {0.0L, 0.0L, 0.0L}, 2);
        for (auto b : r.bounds) CHECK(b == 0);
        CHECK(r.pass());
    }
    SUBCASE("M = e_j gives slack at most 3k") {
        std::mt19937_64 rng(4);
        for (int k = 2; k <= 5; ++k) {
            auto rt = testgen::random_table(rng, k);
            for (int j = 0; j < k; ++j) {
                std::vector<long double> lam(k, 0.0L);
                lam[j] = 1;
                PropcReport r = propc_bound(rt.forms, shift_phi(rt.gap), lam, 1);
                CHECK(r.pass());
                CHECK(r.bounds[j] >= 1);
                CHECK(r.bounds[j] <= 3 * k);
            }
        }
    }
    SUBCASE("zero eps is an instance defect") {
        FormTable f;
        f.k = 2;
        f.values = {{0.5L, 0.0L, 0.1L}, {0.5L, 0.4L, 0.3L}};
        CHECK(propc_bound(f, shift_phi(1), {1.0L, 1.0L}, 1).defect);
    }
    SUBCASE("randomized coefficients") {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> u(-1000, 1000);
        int draws = 0;
        for (int trial = 0; trial < 200; ++trial) {
            int k = 2 + trial % 3;
            auto rt = testgen::random_table(rng, k);
            if (!lemb_check(rt.forms.eps(), shift_phi(rt.gap), 1, k).hypothesis_ok) continue;
            std::vector<long double> lam;
            for (int j = 0; j < k; ++j) lam.push_back(u(rng));
            CHECK(propc_bound(rt.forms, shift_phi(rt.gap), lam, 1).pass());
            ++draws;
        }
        CHECK(draws > 150);
    }
}

TEST_CASE("rank_lower_bound") {
    CHECK(rank_lower_bound(2, {0.5, 0.25}) == doctest::Approx(2.75));
    CHECK(rank_lower_bound(1, {0.7}) == doctest::Approx(1.7));
    CHECK_THROWS_AS(rank_lower_bound(2, {1.0, 1.0}), InputError);
    CHECK_THROWS_AS(rank_lower_bound(2, {1.0, -1.0}), InputError);
    CHECK_THROWS_AS(rank_lower_bound(2, {1.0}), InputError);
}

TEST_CASE("zeta_rank_bound arithmetic at a = 1001") {
    RankBoundCertificate c = zeta_rank_bound(1001, 0);
    CHECK(c.r == 72);
    CHECK(c.bound == doctest::Approx(2 + c.tau1 + c.tau2).epsilon(1e-14));
    CHECK(c.tau1 != c.tau2);
    CHECK(c.tau1 > 0);
    // eps''_a < eps_a makes -log(e^{2(a+2)} eps) larger for the derived form
    CHECK(c.tau2 > c.tau1);
    CHECK(c.tau1 == doctest::Approx(0.598575).epsilon(1e-5));
    CHECK(c.tau2 == doctest::Approx(0.600479).epsilon(1e-5));
    CHECK(c.reference == doctest::Approx(2 * std::log(1001.0) / (1 + std::log(2.0))));
    CHECK(c.reference_r == doctest::Approx(2 * std::log(72.0) / (1 + std::log(2.0))));
    double lb = 2 * 1003 + 2 * (1001 - 432) * std::log(2.0) + 6 * 145 * std::log(145.0);
    CHECK(c.log_beta == doctest::Approx(lb).epsilon(1e-12));
}

TEST_CASE("symbolic parsing") {
    SymbolField f;
    SymNumber x = parse_sym(f, "-2*log2 + 1/3");
    CHECK(f.symbols.size() == 2);
    CHECK(x[0] == BigRational(1, 3));
    CHECK(x[1] == -2);
    CHECK(format_sym(f, x) == "1/3 - 2*log2");
    SymNumber y = parse_sym(f, "0.25*zeta3 - zeta3 + 2");
    CHECK(y[2] == BigRational(-3, 4));
    CHECK(parse_sym(f, "010")[0] == 10);
    CHECK_THROWS_AS(parse_sym(f, "0.5/1"), InputError);
    CHECK_THROWS_AS(parse_sym(f, "log2*zeta3"), InputError);
    CHECK_THROWS_AS(parse_sym(f, "2 +"), InputError);
    CHECK_THROWS_AS(parse_sym(f, ""), InputError);
    CHECK_THROWS_AS(SymbolField({"a", "a"}), InputError);
}

TEST_CASE("rational_rank fixtures") {
    SUBCASE("canonical basis twice") {
        for (int k = 1; k <= 4; ++k) {
            SymbolField f;
            std::vector<SymColumn> cols;
            for (int rep = 0; rep < 2; ++rep)
                for (int i = 0; i < k; ++i) {
                    SymColumn c(k, sym_constant(f, 0));
                    c[i] = sym_constant(f, 1);
                    cols.push_back(c);
                }
            RankResult r = rational_rank(f, cols);
            CHECK(r.rank == k);
            CHECK(r.agree());
            CHECK(r.kernel_dim == k);
        }
    }
    SUBCASE("first Gutnik family") {
        SymbolField f;
        std::vector<SymColumn> cols{col(f, {"1", "0"}), col(f, {"0", "1"}), col(f, {"-2*log2", "zeta2"}),
                                    col(f, {"zeta2", "-3*zeta3"})};
        RankResult r = rational_rank(f, cols);
        CHECK(r.rank == 4);
        CHECK(r.agree());
    }
    SUBCASE("second Gutnik family") {
        SymbolField f;
        std::vector<SymColumn> cols{col(f, {"1", "0"}), col(f, {"0", "1"}), col(f, {"2*zeta3", "3*zeta4"}),
                                    col(f, {"3*zeta4", "6*zeta5"})};
        CHECK(rational_rank(f, cols).rank == 4);
    }
    SUBCASE("zeta family at a = 7 has all (a+3)/2 columns independent") {
        SymbolField f;
        auto cols = zeta_family_columns(f, 7);
        CHECK(cols.size() == 5);
        RankResult r = rational_rank(f, cols);
        CHECK(r.rank == 5);
        CHECK(r.agree());
    }
    SUBCASE("a rational relation is found in the kernel") {
        SymbolField f;
        std::vector<SymColumn> cols{col(f, {"1", "0"}), col(f, {"zeta2", "1"}), col(f, {"2 - 3*zeta2", "-3"})};
        RankResult r = rational_rank(f, cols);
        CHECK(r.rank == 2);
        REQUIRE(r.kernel.size() == 1);
        CHECK(r.kernel[0][0] == -2 * r.kernel[0][2]);
    }
    SUBCASE("random symbolic matrices: both routes agree") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 200; ++trial) {
            auto [f, cols] = testgen::random_symbolic(rng);
            RankResult r = rational_rank(f, cols);
            CHECK(r.agree());
            CHECK(r.rank <= std::min<int>(r.p, r.k * static_cast<int>(f.size())));
        }
    }
}

TEST_CASE("integer determinants") {
    CHECK(bareiss_det({{BigInt(2), BigInt(1)}, {BigInt(7), BigInt(4)}}) == 1);
    CHECK(bareiss_det({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1);
    CHECK(bareiss_det({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 0);
    CHECK(bareiss_rank({{BigInt(1), BigInt(2), BigInt(3)}, {BigInt(2), BigInt(4), BigInt(6)}}) == 1);
}

TEST_CASE("lemimprove_generate") {
    LemimproveResult r = lemimprove_generate(7, 2, 3);
    CHECK(r.i == 3);
    CHECK(r.j == 3);
    CHECK(r.construction == "recipe");
    CHECK(r.n_measured == 2);
    CHECK(r.N_measured == 3);

    LemimproveResult s = lemimprove_generate(9, 2, 5);
    CHECK(s.i == 3);
    CHECK(s.j == 7);
    CHECK(s.recipe_N == 4);
    CHECK(s.construction == "shifted+fresh");
    CHECK(s.verified());

    CHECK_NOTHROW(lemimprove_generate(11, 2, 5));
    CHECK_THROWS_AS(lemimprove_generate(11, 2, 6), InputError);
    CHECK_THROWS_AS(lemimprove_generate(7, 3, 6), InputError);
    CHECK_THROWS_AS(lemimprove_generate(7, 2, 2), InputError);

    for (int a : {7, 9, 11})
        for (int n = 1; 2 * (n + 1) <= a + 3; ++n)
            for (int N = n + 1; N <= 2 * n + 1 && 2 * N <= a + 3; ++N) {
                LemimproveResult g = lemimprove_generate(a, n, N);
                CHECK(g.verified());
                CHECK(g.N_measured >= g.n_measured + 1);
                CHECK(g.N_measured <= 2 * g.n_measured + 1);
                CHECK(g.recipe_N >= g.recipe_n + 1);
                CHECK(g.recipe_N <= 2 * g.recipe_n + 1);
            }
}

TEST_CASE("projective distance") {
    WorkingDigits wd(40);
    std::vector<std::vector<Real>> basis{{Real(1), Real(2), Real(0)}, {Real(0), Real(1), Real(1)}};
    CHECK(bmp::abs(projective_distance({basis, {Real(2), Real(5), Real(1)}})) < Real("1e-35"));
    // (2, -1, 1) is orthogonal to both basis vectors
    CHECK(bmp::abs(projective_distance({basis, {Real(2), Real(-1), Real(1)}}) - 1) < Real("1e-35"));
    CHECK_THROWS_AS(projective_distance({basis, {Real(0), Real(0), Real(0)}}), InputError);
    CHECK(bmp::abs(kappa_constant({{Real(1), Real(0)}, {Real(0), Real(1)}}) - 1) < Real("1e-35"));

    // 2-dimensional F in R^3 against a grid over unit vectors of F
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<Real>> b(2, std::vector<Real>(3));
        std::vector<Real> P(3);
        for (auto& e : b)
            for (auto& x : e) x = u(rng);
        for (auto& x : P) x = u(rng);
        double d = static_cast<double>(projective_distance({b, P}));
        // orthonormal pair in F
        double e0[3], e1[3], n0 = 0, dot = 0, n1 = 0, p[3];
        for (int i = 0; i < 3; ++i) e0[i] = static_cast<double>(b[0][i]), n0 += e0[i] * e0[i];
        for (int i = 0; i < 3; ++i) e0[i] /= std::sqrt(n0), dot += e0[i] * static_cast<double>(b[1][i]);
        for (int i = 0; i < 3; ++i) e1[i] = static_cast<double>(b[1][i]) - dot * e0[i], n1 += e1[i] * e1[i];
        for (int i = 0; i < 3; ++i) e1[i] /= std::sqrt(n1), p[i] = static_cast<double>(P[i]);
        double np = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        double best = 2;
        const int steps = 2000000;
        for (int s = 0; s < steps; ++s) {
            double th = M_PI * s / steps;
            double f[3], c = 0;
            for (int i = 0; i < 3; ++i) f[i] = std::cos(th) * e0[i] + std::sin(th) * e1[i], c += f[i] * p[i];
            double sin2 = 1 - (c / np) * (c / np);
            best = std::min(best, std::sqrt(std::max(0.0, sin2)));
        }
        CHECK(std::fabs(d - best) < 1e-6);
    }
}

TEST_CASE("thdist on the golden line") {
    WorkingDigits wd(40);
    Real g = golden();
    std::vector<std::vector<Real>> basis{{Real(1), g}};
    auto pts = approximation_sweep(g, 100000);
    // q |q g - p| >= 0.38 gives Dist >= 0.2 |P|^{-2}; above 5^{1/eps} no violation is possible
    ThdistReport r = thdist_check(basis, 1.0, 0.2, 3125.0, pts);
    CHECK(r.checked == 200000);
    CHECK(r.pass());
    CHECK(r.violations_below > 0);
    CHECK(r.largest_violation_norm < 3125.0);
    CHECK(r.worst_exponent < r.bound_exponent);
    CHECK(r.worst_exponent > 2.0);
    for (size_t i = 0; i < pts.size(); i += 997) {
        std::vector<Real> P{Real(pts[i][0]), Real(pts[i][1])};
        CHECK(project(basis, P).distance > 0);
    }
}

TEST_CASE("convergents") {
    WorkingDigits wd(60);
    auto cv = convergents(bmp::sqrt(Real(2)), 8);
    std::vector<long> p{1, 3, 7, 17, 41, 99, 239, 577}, q{1, 2, 5, 12, 29, 70, 169, 408};
    for (size_t i = 0; i < cv.size(); ++i) {
        CHECK(cv[i].first == p[i]);
        CHECK(cv[i].second == q[i]);
    }
    CHECK_THROWS_AS(convergents(Real(3) / 4, 5), NumericError);
}

TEST_CASE("siegel_verify") {
    WorkingDigits wd(80);
    Real x = bmp::sqrt(Real(2));
    auto cv = convergents(x, 24);
    auto make = [&](bool literal) {
        SiegelInstance inst;
        inst.p = 2;
        inst.k = 1;
        inst.points = {{x, Real(1)}};
        inst.tau = {1.0};
        for (int n = 1; n <= 20; ++n) {
            inst.ns.push_back(n);
            inst.Q.push_back(cv[n].second);
            std::vector<BigInt> l1{cv[n].second, -cv[n].first};
            std::vector<BigInt> l2 = literal ? std::vector<BigInt>{1, 0}
                                             : std::vector<BigInt>{cv[n + 1].second, -cv[n + 1].first};
            inst.forms.push_back({l1, l2});
        }
        return inst;
    };
    std::vector<std::vector<BigInt>> plane{{1, 0}, {0, 1}};
    SUBCASE("literal pair (q x1 - p x2, x1): determinants nonzero") {
        SiegelReport r = siegel_verify(make(true), plane, {});
        CHECK(r.forms_independent);
        for (const auto& row : r.rows) CHECK(row.det_forms == cv[row.n].first);
        // the second form is not small on e_1
        CHECK(r.rows.back().smallness > 0.5);
    }
    SUBCASE("consecutive convergents: unimodular, exponent d - k - tau = 0") {
        SiegelReport r = siegel_verify(make(false), plane, {{6, 0.25}, {9, 0.25}});
        CHECK(r.pass());
        CHECK(r.target_exponent == doctest::Approx(0.0));
        CHECK(std::fabs(r.fitted_slope) < 1e-12);
        for (const auto& row : r.rows) {
            CHECK(abs(row.det_forms) == 1);
            CHECK(row.smallness < 0);
        }
        REQUIRE(r.boxes.size() == 2);
        CHECK(r.boxes[1].points > 100000);
        CHECK(r.boxes[1].survivors == 0);
    }
    SUBCASE("box emptiness fails for small Q") {
        // 0.2 Q^{eps} < 1 lets a convergent fall inside C_n
        CHECK(box_emptiness(make(false), 2, 0.05).survivors > 0);
    }
    SUBCASE("duplicate forms are a hypothesis failure") {
        SiegelInstance inst = make(false);
        for (auto& f : inst.forms) f[1] = f[0];
        SiegelReport r = siegel_verify(inst, plane, {});
        CHECK(!r.forms_independent);
        CHECK(!r.pass());
    }
    SUBCASE("subspace must contain the points") {
        SiegelReport r = siegel_verify(make(false), {{1, 1}}, {});
        CHECK(!r.subspace_ok);
    }
}

TEST_CASE("cortype2_verify") {
    WorkingDigits wd(100);
    Real x = bmp::sqrt(Real(2));
    auto cv = convergents(x, 61);
    Type2Instance inst;
    inst.xi = {x};
    inst.tau = {1.0};
    for (int m = 1; m <= 60; ++m) {
        inst.Q.push_back(cv[m].second);
        inst.forms.push_back({cv[m].first, cv[m].second});
    }
    Type2Report r = cortype2_verify(inst, 100, 0.2);
    CHECK(r.hypothesis_ok);
    CHECK(r.conclusion_checked);
    CHECK(r.violations == 0);
    CHECK(r.pass());
    // |70 sqrt 2 - 99| = 0.00505 is the closest approach in the box
    CHECK(r.min_scaled == doctest::Approx(std::fabs(70 * std::sqrt(2.0) - 99) * std::pow(100.0, 1.2)).epsilon(1e-9));
    CHECK(r.identity_residual < 1e-60);

    Type2Instance broken = inst;
    for (auto& f : broken.forms) f[0] += 1;
    Type2Report b = cortype2_verify(broken, 100, 0.2);
    CHECK(!b.hypothesis_ok);
    CHECK(!b.conclusion_checked);
    CHECK(!b.pass());
}

TEST_CASE("oscillation_subsequence") {
    auto id = oscillation_subsequence({0.0}, {0.0}, 0.9, 100);
    CHECK(id.psi.size() == 100);
    CHECK(id.psi[41] == 42);
    auto pi = oscillation_subsequence({M_PI}, {0.0}, 0.99, 50);
    CHECK(pi.psi.size() == 50);
    auto g = oscillation_subsequence({static_cast<double>(golden()) * M_PI}, {0.0}, 0.5, 10000);
    CHECK(std::is_sorted(g.psi.begin(), g.psi.end()));
    for (long n : g.psi) CHECK(std::fabs(std::cos(n * static_cast<double>(golden()) * M_PI)) >= 0.5);
    MESSAGE("golden density " << g.density);
    CHECK_THROWS_AS(oscillation_subsequence({0.0}, {M_PI / 2}, 0.5, 1000), NumericError);
    CHECK_THROWS_AS(oscillation_subsequence({0.0}, {0.0}, 1.5, 10), InputError);
}

TEST_CASE("instance files") {
    auto g1 = run_instance(load("gutnik1.json"));
    CHECK(g1["rank"] == 4);
    CHECK(g1["pass"] == true);
    auto g2 = run_instance(load("gutnik2.json"));
    CHECK(g2["rank"] == 4);
    auto hp = run_instance(load("hessami_pilehrood.json"));
    CHECK(hp["rank"] == 6);
    CHECK(hp["pass"] == true);
    CHECK(run_instance(load("sqrt2_type2.json"))["pass"] == true);
    CHECK(run_instance(load("golden_thdist.json"))["pass"] == true);
    CHECK(run_instance(load("sqrt2_siegel.json"))["pass"] == true);
    CHECK_THROWS_AS(run_instance(nlohmann::json{{"kind", "nope"}}), InputError);
    CHECK_THROWS_AS(run_instance(nlohmann::json{{"kind", "rational_rank"}}), InputError);
}
