#include "zc/criterion.hpp"
#include "zc/errors.hpp"

namespace zc::crit {

namespace {

SymNumber xi_at(const SymbolField& field, const std::map<int, SymNumber>& xi, int s) {
    auto it = xi.find(s);
    SymNumber x = it == xi.end() ? SymNumber(field.size()) : it->second;
    x.resize(field.size());
    return x;
}

// Fresh xi_3..xi_i, then xi_s = xi_{s-offset} for s = i+2..j (xi_1 = 1), zero afterwards.
// offset i+1 is the literal recipe; offset i-1 starts the copies at xi_3.
std::map<int, SymNumber> build(SymbolField& field, int a, int i, int j, int offset) {
    for (int s = 3; s <= i; s += 2) field.add("xi" + std::to_string(s));
    std::map<int, SymNumber> xi;
    for (int s = 3; s <= i; s += 2) xi[s] = sym_symbol(field, "xi" + std::to_string(s));
    for (int s = i + 2; s <= j; s += 2) {
        int src = s - offset;
        xi[s] = src == 1 ? sym_constant(field, 1) : xi.at(src);
    }
    for (int s = j + 2; s <= a + 2; s += 2) xi[s] = SymNumber(field.size());
    for (auto& [s, v] : xi) v.resize(field.size());
    return xi;
}

}  // namespace

int lemimprove_small_rank(const SymbolField& field, const std::map<int, SymNumber>& xi, int a) {
    std::vector<SymColumn> cols;
    cols.push_back({sym_constant(field, 1)});
    for (int s = 3; s <= a; s += 2) cols.push_back({xi_at(field, xi, s)});
    return rational_rank(field, cols).rank;
}

int lemimprove_big_rank(const SymbolField& field, const std::map<int, SymNumber>& xi, int a) {
    std::vector<SymColumn> cols;
    cols.push_back({sym_constant(field, 1), sym_constant(field, 0)});
    cols.push_back({sym_constant(field, 0), sym_constant(field, 1)});
    for (int s = 3; s <= a; s += 2) {
        BigRational b(exact::binomial(s + 1, 2));
        cols.push_back({xi_at(field, xi, s), sym_scale(xi_at(field, xi, s + 2), b)});
    }
    RankResult r = rational_rank(field, cols);
    if (!r.agree()) throw InvariantError("rank routes disagree");
    return r.rank;
}

LemimproveResult lemimprove_generate(int a, int n, int N) {
    if (a < 3 || a % 2 == 0) throw InputError("lemimprove: a must be odd and >= 3");
    if (n < 1 || 2 * N > a + 3 || N < n + 1 || N > 2 * n + 1)
        throw InputError("lemimprove: need N <= (a+3)/2 and n+1 <= N <= 2n+1");
    LemimproveResult res;
    res.a = a;
    res.n = n;
    res.N = N;
    res.i = 2 * n - 1;
    res.j = 2 * N - 3;
    res.construction = "recipe";
    res.xi = build(res.field, a, res.i, res.j, res.i + 1);
    res.recipe_n = res.n_measured = lemimprove_small_rank(res.field, res.xi, a);
    res.recipe_N = res.N_measured = lemimprove_big_rank(res.field, res.xi, a);
    if (res.verified()) return res;

    res.field = SymbolField();
    if (N == 2 * n + 1) {
        // entries up to xi_a span at most 2n dimensions over the two rows; only xi_{a+2} is free
        res.construction = "shifted+fresh";
        res.xi = build(res.field, a, res.i, 4 * n - 3, res.i - 1);
        int fresh = res.field.add("eta");
        for (auto& [s, v] : res.xi) v.resize(res.field.size());
        SymNumber e(res.field.size());
        e[fresh] = 1;
        res.xi[a + 2] = e;
    } else {
        res.construction = "shifted";
        res.xi = build(res.field, a, res.i, res.j, res.i - 1);
    }
    res.n_measured = lemimprove_small_rank(res.field, res.xi, a);
    res.N_measured = lemimprove_big_rank(res.field, res.xi, a);
    return res;
}

}  // namespace zc::crit
