#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "zc/exact.hpp"
#include "zc/real.hpp"

namespace zc::crit {

using exact::BigInt;
using exact::BigRational;

// ---------------------------------------------------------------------------
// phi, eps_1

// Q_1, Q_2, ... stored from index 1.
struct QSequence {
    std::vector<BigInt> values;  // values[n-1] = Q_n

    int size() const { return static_cast<int>(values.size()); }
    const BigInt& at(int n) const;
    void validate() const;  // strictly increasing, Q_1 >= 1
};

// Unique m with Q_{m-1} <= Q_n^{1+eps1} < Q_m. Exact comparison for rational eps1.
int phi_build(const QSequence& q, const BigRational& eps1, int n);

// Largest 2^-e <= 1 with ((1+e1)^{k-1}-1) tau1 < eps/4 and (1+e1)^{k-1} <= 1+eps/2.
BigRational choose_eps1(int k, const BigRational& tau1, const BigRational& eps);

// ---------------------------------------------------------------------------
// Permutation inequality and the coefficient bound

// eps[j-1][n-n0] = eps_{j,n} for n in [n0, n0 + width).
struct EpsTable {
    int k = 0;
    int n0 = 1;
    std::vector<std::vector<long double>> eps;

    int n_end() const;  // one past the last n
    long double at(int j, int n) const;
    bool has(int n) const { return n >= n0 && n < n_end(); }
};

using PhiMap = std::function<int(int)>;

struct PermutationCheck {
    std::vector<int> sigma;  // sigma[j-1] = sigma(j)
    long double log_lhs = 0, log_rhs = 0;
    bool pass = false;
};

struct LembReport {
    int n = 0, k = 0;
    bool hypothesis_ok = true;
    std::vector<std::string> hypothesis_violations;
    bool conclusion_checked = false;
    int conclusion_violations = 0;
    std::vector<PermutationCheck> permutations;

    bool pass() const { return hypothesis_ok && conclusion_checked && conclusion_violations == 0; }
};

// Hypothesis: eps_{i,n'}/eps_{i,m} <= eps_{i+1,n'}/eps_{i+1,m} / (k+1)! for m in [n, phi^{k-1}(n)],
// n' >= phi(m), all inside the table. Conclusion checked only when the hypothesis holds.
LembReport lemb_check(const EpsTable& table, const PhiMap& phi, int n, int k);

// values[j-1][m-n0] = L_m(e_j), signed.
struct FormTable {
    int k = 0;
    int n0 = 1;
    std::vector<std::vector<long double>> values;

    EpsTable eps() const;
    long double at(int j, int m) const;
};

struct PropcReport {
    std::vector<long double> bounds;  // B_j
    std::vector<bool> holds;          // |lambda_j| <= B_j
    bool defect = false;              // some eps_{j, phi^{i-1}(n)} = 0
    bool pass() const;
};

// B_j = (1 + 1/k + 1/k^2) sum_i |L_{phi^{i-1}(n)}(M)| / |L_{phi^{i-1}(n)}(e_j)|, M = sum lambda_j e_j.
PropcReport propc_bound(const FormTable& forms, const PhiMap& phi, const std::vector<long double>& lambda, int n);

// k + sum tau_j; InputError unless tau positive and pairwise distinct.
double rank_lower_bound(int k, const std::vector<double>& tau);

struct RankBoundCertificate {
    int a = 0, r = 0;
    unsigned digits = 0;
    double log_beta = 0;
    double log_eps_a = 0, log_eps_pp_a = 0;
    double tau1 = 0, tau2 = 0;
    double bound = 0;
    double reference = 0;    // 2 log a / (1 + log 2)
    double reference_r = 0;  // 2 log r / (1 + log 2)

    double ratio_reference() const { return bound / reference; }
    double ratio_reference_r() const { return bound / reference_r; }
};

// tau_i = -log(e^{2(a+2)} eps) / log beta with beta = e^{2(a+2)} 2^{2(a-6r)} (2r+1)^{6(2r+1)}.
RankBoundCertificate zeta_rank_bound(int a, unsigned digits);

// ---------------------------------------------------------------------------
// Symbolic reals and rational rank

struct SymbolField {
    std::vector<std::string> symbols;          // symbols[0] == "1"
    std::map<std::string, std::string> values;  // optional decimal bindings

    explicit SymbolField(std::vector<std::string> names = {});
    void validate() const;
    int index(const std::string& name) const;  // -1 if absent
    int add(const std::string& name);          // returns index; no-op if present
    size_t size() const { return symbols.size(); }
};

// Rational combination of the symbols; coeffs.size() == field.size().
using SymNumber = std::vector<BigRational>;

// "-2*log2 + 1/3", "zeta2", "3/4*zeta3"; unknown symbols are added to the field.
SymNumber parse_sym(SymbolField& field, const std::string& text);
std::string format_sym(const SymbolField& field, const SymNumber& x);
SymNumber sym_constant(const SymbolField& field, const BigRational& q);
SymNumber sym_symbol(const SymbolField& field, const std::string& name);
SymNumber sym_scale(const SymNumber& x, const BigRational& q);
void sym_resize(const SymbolField& field, SymNumber& x);

using SymColumn = std::vector<SymNumber>;  // k entries

struct RankResult {
    int p = 0;                 // columns
    int k = 0;                 // rows
    int rank = 0;              // rank of psi by fraction-free elimination
    int kernel_dim = 0;        // dim ker psi from the reduced echelon form
    int dual_rank = 0;         // p - kernel_dim
    std::vector<std::vector<BigRational>> kernel;  // each verified psi(v) = 0
    bool agree() const { return rank == dual_rank; }
};

// psi(r_1..r_p) = sum r_i C_i, as a map Q^p -> Q^{k * |symbols|}.
RankResult rational_rank(const SymbolField& field, const std::vector<SymColumn>& columns);

// Rank of an integer matrix by Bareiss elimination.
int bareiss_rank(std::vector<std::vector<BigInt>> m);
BigInt bareiss_det(std::vector<std::vector<BigInt>> m);

struct LemimproveResult {
    int a = 0, n = 0, N = 0;
    int i = 0, j = 0;             // i = 2n-1, j = 2N-3
    int recipe_n = 0, recipe_N = 0;  // ranks reached by the literal recipe
    std::string construction;     // "recipe", "shifted" or "shifted+fresh"
    SymbolField field;
    std::map<int, SymNumber> xi;  // odd s in 3..a+2
    int n_measured = 0;
    int N_measured = 0;
    bool verified() const { return n_measured == n && N_measured == N; }
};

// n(xi) = rank(1, xi_3, ..., xi_a); N(xi) = rank of (1,0), (0,1), (xi_s, binom(s+1,2) xi_{s+2}).
int lemimprove_small_rank(const SymbolField& field, const std::map<int, SymNumber>& xi, int a);
int lemimprove_big_rank(const SymbolField& field, const std::map<int, SymNumber>& xi, int a);
// Literal recipe first. It falls one short for N = n+2 and N = 2n+1; then the copies start at
// xi_{i+2} = xi_3 instead of 1, and for N = 2n+1 the (n, 2n) vector gets a fresh xi_{a+2}.
LemimproveResult lemimprove_generate(int a, int n, int N);

// Columns of the rank-N family for (1, 0), (0, 1), (zeta(s), binom(s+1,2) zeta(s+2)), s = 3..a odd.
std::vector<SymColumn> zeta_family_columns(SymbolField& field, int a);

// ---------------------------------------------------------------------------
// Distance, Siegel-type checks, type II, oscillation

// A quadratic surd shift + scale * sqrt(radicand), or a plain decimal.
Real parse_real_spec(const nlohmann::json& j);

struct ProjectiveInstance {
    std::vector<std::vector<Real>> basis;  // e_1..e_k in R^p
    std::vector<Real> point;               // P
};

struct Projection {
    std::vector<Real> lambda;  // coordinates of the F-component
    std::vector<Real> u;       // component orthogonal to F
    Real distance;             // |u| / |P|
};

Projection project(const std::vector<std::vector<Real>>& basis, const std::vector<Real>& point);
Real projective_distance(const ProjectiveInstance& inst);
// max_j sqrt((G^{-1})_{jj}): max |lambda_j| <= kappa |f| for f in F.
Real kappa_constant(const std::vector<std::vector<Real>>& basis);

struct ThdistReport {
    double tau = 0, eps = 0, threshold = 0;
    long checked = 0;
    long violations_above = 0;
    long violations_below = 0;
    double largest_violation_norm = 0;  // empirical threshold
    double worst_exponent = 0;          // max of -log Dist / log |P| above threshold
    double bound_exponent = 0;          // 1 + 1/tau + eps
    bool pass() const { return violations_above == 0; }
};

// Dist(P, F) >= |P|^{-1-1/tau-eps} for every P with |P| >= threshold.
ThdistReport thdist_check(const std::vector<std::vector<Real>>& basis, double tau, double eps, double threshold,
                          const std::vector<std::vector<long>>& points);
// (q, floor(q x)) and (q, ceil(q x)) for q = 1..qmax.
std::vector<std::vector<long>> approximation_sweep(const Real& x, long qmax);

struct SiegelInstance {
    int p = 0, k = 0;
    std::vector<std::vector<Real>> points;  // e_1..e_k
    std::vector<double> tau;
    std::vector<int> ns;
    std::vector<BigInt> Q;                                   // Q_n per entry of ns
    std::vector<std::vector<std::vector<BigInt>>> forms;     // forms[idx][t][i]
};

struct SiegelRow {
    int n = 0;
    BigInt det_forms;        // det of the p forms
    bool independent = false;
    double smallness = 0;    // max_{t,j} (log |L^(t)(e_j)| / log Q_n + tau_j)
    BigInt det_restricted;   // det [L^(t)(u_j)] over the chosen d forms
    double det_exponent = 0; // log |det_restricted| / log Q_n
};

struct BoxResult {
    int n = 0;
    double eps = 0;
    long double volume = 0;
    long points = 0;
    long survivors = 0;  // nonzero integer points inside C_n
    bool skipped = false;
    bool pass() const { return !skipped && survivors == 0; }
};

struct SiegelReport {
    int d = 0;
    double target_exponent = 0;  // d - k - sum tau
    double fitted_slope = 0;     // slope of log |det_restricted| against log Q_n
    bool forms_independent = true;
    bool subspace_ok = true;     // F has rank d and the chosen forms restrict independently
    std::vector<SiegelRow> rows;
    std::vector<BoxResult> boxes;
    bool pass() const;
};

// subspace: integer basis u_1..u_d of a Q-defined F containing the points.
SiegelReport siegel_verify(const SiegelInstance& inst, const std::vector<std::vector<BigInt>>& subspace,
                           const std::vector<std::pair<int, double>>& boxes);
BoxResult box_emptiness(const SiegelInstance& inst, int n, double eps);

// Convergents p_m/q_m of x for m = 0..count-1.
std::vector<std::pair<BigInt, BigInt>> convergents(const Real& x, int count);

struct Type2Instance {
    std::vector<Real> xi;                          // xi_1..xi_k
    std::vector<double> tau;
    std::vector<BigInt> Q;                         // Q_n, n = 1..
    std::vector<std::vector<BigInt>> forms;        // forms[n-1] = (l_1, ..., l_k, l_{k+1})
};

struct Type2Report {
    bool hypothesis_ok = false;
    std::vector<double> fitted_exponents;  // per j: mean of log|l_{k+1} xi_j - l_j| / log Q_n, late window
    std::vector<double> drift;
    double coeff_exponent = 0;             // max_i log|l_i| / log Q_n, late window
    bool conclusion_checked = false;
    double Q = 0, eps = 0;
    long tuples = 0;
    long violations = 0;
    double min_scaled = 0;                 // min |a_0 + sum a_j xi_j| * Q^{1+eps}
    double identity_residual = 0;          // worst |l_{k+1} x - (integer part + small part)|
    bool pass() const { return hypothesis_ok && conclusion_checked && violations == 0; }
};

Type2Report cortype2_verify(const Type2Instance& inst, double Q, double eps, double tol = 0.1,
                            double drift_bound = 0.1);

struct OscillationResult {
    std::vector<long> psi;
    double density = 0;  // |psi| / scanned range
    double lambda = 0;   // psi(last) / |psi|
};

OscillationResult oscillation_subsequence(const std::vector<double>& omega, const std::vector<double>& phi,
                                          double eps, long horizon, long count = -1);

// ---------------------------------------------------------------------------
// Instance files

// Runs the checks described by an instance document; the report carries "pass".
nlohmann::ordered_json run_instance(const nlohmann::json& instance);

}  // namespace zc::crit
