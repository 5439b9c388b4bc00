#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "zc/criterion.hpp"
#include "zc/errors.hpp"

namespace zc::crit {

namespace {

constexpr long double kRelTol = 1e-15L;

long double log_factorial(int m) {
    long double s = 0;
    for (int i = 2; i <= m; ++i) s += std::log(static_cast<long double>(i));
    return s;
}

// n, phi(n), ..., phi^{count-1}(n)
std::vector<int> chain(const PhiMap& phi, int n, int count) {
    std::vector<int> c{n};
    for (int i = 1; i < count; ++i) {
        int next = phi(c.back());
        if (next < c.back() + 1) throw InputError("phi(n) < n + 1");
        c.push_back(next);
    }
    return c;
}

bool leq(long double lhs, long double rhs) {
    return lhs <= rhs + kRelTol * std::max({1.0L, std::fabs(lhs), std::fabs(rhs)});
}

}  // namespace

int EpsTable::n_end() const { return eps.empty() ? n0 : n0 + static_cast<int>(eps[0].size()); }

long double EpsTable::at(int j, int n) const {
    if (j < 1 || j > k || !has(n)) throw InputError("eps table index out of range");
    return eps[j - 1][n - n0];
}

LembReport lemb_check(const EpsTable& table, const PhiMap& phi, int n, int k) {
    if (k < 1 || k > table.k) throw InputError("lemb_check: bad k");
    LembReport rep;
    rep.n = n;
    rep.k = k;
    std::vector<int> c = chain(phi, n, k);
    if (!table.has(c.back())) throw InputError("lemb_check: phi chain leaves the table");
    for (int m = n; m <= c.back(); ++m)
        for (int j = 1; j <= k; ++j)
            if (!(table.at(j, m) > 0)) {
                rep.hypothesis_ok = false;
                rep.hypothesis_violations.push_back("eps_{" + std::to_string(j) + "," + std::to_string(m) + "} = 0");
            }
    if (!rep.hypothesis_ok) return rep;

    const long double log_c = -log_factorial(k + 1);
    for (int m = n; m <= c.back(); ++m) {
        int start = phi(m);
        for (int np = start; np < table.n_end(); ++np)
            for (int i = 1; i < k; ++i) {
                long double lhs = std::log(table.at(i, np)) - std::log(table.at(i, m));
                long double rhs = log_c + std::log(table.at(i + 1, np)) - std::log(table.at(i + 1, m));
                if (!leq(lhs, rhs)) {
                    rep.hypothesis_ok = false;
                    std::ostringstream os;
                    os << "i=" << i << " n=" << m << " n'=" << np;
                    if (rep.hypothesis_violations.size() < 20) rep.hypothesis_violations.push_back(os.str());
                }
            }
    }
    if (!rep.hypothesis_ok) return rep;

    rep.conclusion_checked = true;
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 1);
    long double base = 0;
    for (int j = 1; j <= k; ++j) base += std::log(table.at(j, c[j - 1]));
    do {
        PermutationCheck pc;
        pc.sigma = sigma;
        bool identity = std::is_sorted(sigma.begin(), sigma.end());
        for (int j = 1; j <= k; ++j) pc.log_lhs += std::log(table.at(j, c[sigma[j - 1] - 1]));
        pc.log_rhs = base + (identity ? 0 : log_c);
        pc.pass = leq(pc.log_lhs, pc.log_rhs);
        if (!pc.pass) ++rep.conclusion_violations;
        rep.permutations.push_back(std::move(pc));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return rep;
}

EpsTable FormTable::eps() const {
    EpsTable t;
    t.k = k;
    t.n0 = n0;
    t.eps = values;
    for (auto& row : t.eps)
        for (auto& v : row) v = std::fabs(v);
    return t;
}

long double FormTable::at(int j, int m) const {
    if (j < 1 || j > k || m < n0 || values.empty() || m >= n0 + static_cast<int>(values[0].size()))
        throw InputError("form table index out of range");
    return values[j - 1][m - n0];
}

bool PropcReport::pass() const {
    return !defect && std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

PropcReport propc_bound(const FormTable& forms, const PhiMap& phi, const std::vector<long double>& lambda, int n) {
    const int k = forms.k;
    if (static_cast<int>(lambda.size()) != k) throw InputError("propc_bound: lambda has wrong size");
    std::vector<int> c = chain(phi, n, k);
    const long double constant = 1 + 1.0L / k + 1.0L / (static_cast<long double>(k) * k);
    PropcReport rep;
    std::vector<long double> lm(k);
    for (int i = 0; i < k; ++i) {
        long double s = 0;
        for (int j = 1; j <= k; ++j) s += lambda[j - 1] * forms.at(j, c[i]);
        lm[i] = std::fabs(s);
    }
    for (int j = 1; j <= k; ++j) {
        long double b = 0;
        for (int i = 0; i < k; ++i) {
            long double e = std::fabs(forms.at(j, c[i]));
            if (e == 0) {
                rep.defect = true;
                continue;
            }
            b += lm[i] / e;
        }
        b *= constant;
        rep.bounds.push_back(b);
        rep.holds.push_back(leq(std::fabs(lambda[j - 1]), b * (1 + 1e-12L)));
    }
    return rep;
}

}  // namespace zc::crit
