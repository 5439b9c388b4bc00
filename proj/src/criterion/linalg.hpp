#pragma once

#include <cmath>
#include <type_traits>
#include <utility>
#include <vector>

#include "zc/errors.hpp"
#include "zc/real.hpp"

namespace zc::crit::detail {

template <class T>
T abs_t(const T& x) {
    return x < 0 ? T(-x) : x;
}

template <class T>
T sqrt_t(const T& x) {
    if constexpr (std::is_same_v<T, Real>)
        return boost::multiprecision::sqrt(x);
    else
        return std::sqrt(x);
}

// Solves G x = b by Gaussian elimination with partial pivoting.
template <class T>
std::vector<T> solve(std::vector<std::vector<T>> g, std::vector<T> b) {
    const size_t n = b.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t i = c + 1; i < n; ++i)
            if (abs_t(g[i][c]) > abs_t(g[piv][c])) piv = i;
        if (g[piv][c] == 0) throw InputError("basis vectors are linearly dependent");
        std::swap(g[piv], g[c]);
        std::swap(b[piv], b[c]);
        for (size_t i = c + 1; i < n; ++i) {
            T f = g[i][c] / g[c][c];
            for (size_t j = c; j < n; ++j) g[i][j] -= f * g[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<T> x(n);
    for (size_t i = n; i-- > 0;) {
        T s = b[i];
        for (size_t j = i + 1; j < n; ++j) s -= g[i][j] * x[j];
        x[i] = s / g[i][i];
    }
    return x;
}

template <class T>
std::vector<std::vector<T>> gram(const std::vector<std::vector<T>>& basis) {
    const size_t k = basis.size();
    std::vector<std::vector<T>> g(k, std::vector<T>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            T s(0);
            for (size_t t = 0; t < basis[i].size(); ++t) s += basis[i][t] * basis[j][t];
            g[i][j] = s;
        }
    return g;
}

template <class T>
void check_shape(const std::vector<std::vector<T>>& basis, size_t p) {
    if (basis.empty()) throw InputError("empty basis");
    for (const auto& e : basis)
        if (e.size() != p) throw InputError("basis vector of wrong dimension");
}

template <class T>
std::pair<std::vector<T>, std::vector<T>> project_t(const std::vector<std::vector<T>>& basis, const std::vector<T>& P) {
    check_shape(basis, P.size());
    std::vector<T> rhs(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        T s(0);
        for (size_t t = 0; t < P.size(); ++t) s += basis[j][t] * P[t];
        rhs[j] = s;
    }
    std::vector<T> lambda = solve(gram(basis), rhs);
    std::vector<T> u = P;
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t t = 0; t < P.size(); ++t) u[t] -= lambda[j] * basis[j][t];
    return {lambda, u};
}

template <class T>
T norm_t(const std::vector<T>& v) {
    T s(0);
    for (const auto& x : v) s += x * x;
    return sqrt_t(s);
}

}  // namespace zc::crit::detail
