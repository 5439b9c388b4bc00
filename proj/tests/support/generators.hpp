#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "zc/criterion.hpp"

namespace zc::testgen {

struct RandomTable {
    crit::FormTable forms;  // signed L_m(e_j)
    int gap = 1;            // phi(n) = n + gap
    int k = 0;
};

// eps_{j,n} = exp(-tau_j x_n + noise) with tau gaps wide enough for the ratio hypothesis.
inline RandomTable random_table(std::mt19937_64& rng, int k, int width = 30) {
    std::uniform_int_distribution<int> gap_d(1, 3);
    std::uniform_real_distribution<double> unit(0, 1);
    RandomTable t;
    t.k = k;
    t.gap = gap_d(rng);
    const double log_c = std::lgamma(k + 2.0);
    const double noise = 0.5 * unit(rng);
    const double step = 0.2 + unit(rng);
    // (tau_i - tau_{i+1}) * gap * step >= log (k+1)! + 4 noise, with margin
    const double min_gap = (log_c + 4 * noise) / (t.gap * step) * (1.05 + unit(rng));
    std::vector<double> tau(k);
    tau[k - 1] = 0.1 + unit(rng);
    for (int j = k - 2; j >= 0; --j) tau[j] = tau[j + 1] + min_gap + unit(rng);
    t.forms.k = k;
    t.forms.n0 = 1;
    t.forms.values.assign(k, std::vector<long double>(width));
    for (int j = 0; j < k; ++j)
        for (int n = 0; n < width; ++n) {
            double x = step * (n + 1);
            long double v = std::exp(static_cast<long double>(-tau[j] * x + noise * (2 * unit(rng) - 1)));
            t.forms.values[j][n] = unit(rng) < 0.5 ? -v : v;
        }
    return t;
}

// Random columns over symbols 1, s1..s_{m-1}; some columns are rational combinations of earlier ones.
inline std::pair<crit::SymbolField, std::vector<crit::SymColumn>> random_symbolic(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pd(1, 8), kd(1, 4), md(1, 4), cd(-3, 3), pick(0, 3);
    int p = pd(rng), k = kd(rng), m = md(rng);
    std::vector<std::string> names;
    for (int s = 1; s < m; ++s) names.push_back("s" + std::to_string(s));
    crit::SymbolField field(names);
    std::vector<crit::SymColumn> cols;
    for (int c = 0; c < p; ++c) {
        crit::SymColumn col(k, crit::SymNumber(field.size()));
        if (c > 0 && pick(rng) == 0) {
            for (int b = 0; b < c; ++b) {
                exact::BigRational f = exact::make_rational(cd(rng), 1 + pick(rng));
                for (int r = 0; r < k; ++r)
                    for (size_t s = 0; s < field.size(); ++s) col[r][s] += f * cols[b][r][s];
            }
        } else {
            for (int r = 0; r < k; ++r)
                for (size_t s = 0; s < field.size(); ++s)
                    if (pick(rng) != 0) col[r][s] = exact::make_rational(cd(rng), 1 + pick(rng));
        }
        cols.push_back(col);
    }
    return {field, cols};
}

}  // namespace zc::testgen
