#include "zc/errors.hpp"
#include "zc/forms.hpp"
#include "zc/qpoly.hpp"

namespace zc::forms {

namespace {

// s <- s * (alpha + h)^m, truncated to s.size() terms
void mul_linear_pow(std::vector<BigInt>& s, long alpha, int m) {
    for (int rep = 0; rep < m; ++rep)
        for (size_t k = s.size(); k-- > 0;) {
            s[k] *= alpha;
            if (k > 0) s[k] += s[k - 1];
        }
}

}  // namespace

const BigRational& PartialFractionTable::at(int i, long j) const {
    if (i < 1 || i > spec.a || j < -spec.n || j > spec.n) throw InputError("partial fraction index out of range");
    return c[static_cast<size_t>(i - 1)][static_cast<size_t>(j + spec.n)];
}

BigRational PartialFractionTable::reconstruct(const BigRational& t) const {
    BigRational sum = 0;
    for (long j = -spec.n; j <= spec.n; ++j) {
        BigRational x = t - j;
        if (x == 0) throw InputError("reconstruction evaluated at a pole");
        BigRational inv = 1 / x, p = inv;
        for (int i = 1; i <= spec.a; ++i) {
            sum += at(i, j) * p;
            p *= inv;
        }
    }
    return sum;
}

PartialFractionTable partial_fractions(const Summand& summand) {
    const FormSpec& spec = summand.spec;
    const int a = spec.a;
    const size_t terms = static_cast<size_t>(a);
    PartialFractionTable table;
    table.spec = spec;
    table.c.assign(terms, std::vector<BigRational>(static_cast<size_t>(2 * spec.n + 1)));

    // Taylor expansion at each pole j of G(h) = R(j+h) h^a; c_{i,j} = [h^{a-i}] G.
    for (const auto& pole : summand.poles) {
        const long j = pole.root;
        std::vector<BigInt> num(terms, BigInt(0)), den(terms, BigInt(0));
        num[0] = summand.scale;
        den[0] = 1;
        for (const auto& f : summand.numerator) mul_linear_pow(num, j - f.root, f.multiplicity);
        for (const auto& q : summand.poles)
            if (q.root != j) mul_linear_pow(den, j - q.root, q.multiplicity);
        std::vector<BigRational> nq(num.begin(), num.end()), dq(den.begin(), den.end());
        auto g = exact::series_divide(nq, dq, terms);
        for (int i = 1; i <= a; ++i)
            table.c[static_cast<size_t>(i - 1)][static_cast<size_t>(j + spec.n)] = g[static_cast<size_t>(a - i)];
    }
    return table;
}

}  // namespace zc::forms
