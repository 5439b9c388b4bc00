#include <algorithm>
#include <cctype>
#include <set>

#include "zc/criterion.hpp"
#include "zc/errors.hpp"

namespace zc::crit {

SymbolField::SymbolField(std::vector<std::string> names) {
    symbols.push_back("1");
    for (auto& s : names)
        if (s != "1") symbols.push_back(std::move(s));
    validate();
}

void SymbolField::validate() const {
    if (symbols.empty() || symbols[0] != "1") throw InputError("symbol field must start with \"1\"");
    std::set<std::string> seen(symbols.begin(), symbols.end());
    if (seen.size() != symbols.size()) throw InputError("duplicate symbol names");
}

int SymbolField::index(const std::string& name) const {
    auto it = std::find(symbols.begin(), symbols.end(), name);
    return it == symbols.end() ? -1 : static_cast<int>(it - symbols.begin());
}

int SymbolField::add(const std::string& name) {
    int i = index(name);
    if (i >= 0) return i;
    symbols.push_back(name);
    return static_cast<int>(symbols.size()) - 1;
}

void sym_resize(const SymbolField& field, SymNumber& x) { x.resize(field.size()); }

SymNumber sym_constant(const SymbolField& field, const BigRational& q) {
    SymNumber x(field.size());
    x[0] = q;
    return x;
}

SymNumber sym_symbol(const SymbolField& field, const std::string& name) {
    int i = field.index(name);
    if (i < 0) throw InputError("unknown symbol " + name);
    SymNumber x(field.size());
    x[i] = 1;
    return x;
}

SymNumber sym_scale(const SymNumber& x, const BigRational& q) {
    SymNumber y = x;
    for (auto& c : y) c *= q;
    return y;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw InputError("cannot parse \"" + s + "\" at offset " + std::to_string(pos) + ": " + what);
    }
};

BigRational parse_number(Lexer& lx) {
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() && (std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '/' ||
                                    lx.s[lx.pos] == '.'))
        ++lx.pos;
    std::string tok = lx.s.substr(start, lx.pos - start);
    auto dot = tok.find('.');
    if (dot != std::string::npos) {
        if (tok.find('/') != std::string::npos) lx.fail("mixed decimal and fraction");
        std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
        BigInt den(1);
        for (size_t i = dot + 1; i < tok.size(); ++i) den *= 10;
        return exact::make_rational(BigInt(digits.empty() ? "0" : digits, 10), den);
    }
    return exact::parse_rational(tok);
}

}  // namespace

SymNumber parse_sym(SymbolField& field, const std::string& text) {
    Lexer lx{text};
    std::vector<std::pair<int, BigRational>> terms;
    bool first = true;
    while (!lx.at_end()) {
        BigRational sign(1);
        char c = lx.peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = -1;
            ++lx.pos;
        } else if (!first) {
            lx.fail("expected + or -");
        }
        first = false;
        BigRational coef = sign;
        int sym = 0;
        bool have_factor = false;
        while (true) {
            char d = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
                coef *= parse_number(lx);
            } else if (std::isalpha(static_cast<unsigned char>(d)) || d == '_') {
                size_t start = lx.pos;
                while (lx.pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[lx.pos])) || text[lx.pos] == '_'))
                    ++lx.pos;
                if (sym != 0) lx.fail("product of two symbols");
                sym = field.add(text.substr(start, lx.pos - start));
            } else {
                lx.fail("expected a number or a symbol");
            }
            have_factor = true;
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (!have_factor) lx.fail("empty term");
        terms.emplace_back(sym, coef);
    }
    if (terms.empty()) throw InputError("empty symbolic expression");
    SymNumber x(field.size());
    for (auto& [i, q] : terms) x[i] += q;
    return x;
}

std::string format_sym(const SymbolField& field, const SymNumber& x) {
    std::string out;
    for (size_t i = 0; i < x.size() && i < field.size(); ++i) {
        if (x[i] == 0) continue;
        BigRational q = x[i];
        std::string sgn = q < 0 ? "-" : "+";
        if (q < 0) q = -q;
        std::string body;
        if (i == 0)
            body = exact::to_string(q);
        else
            body = (q == 1 ? std::string() : exact::to_string(q) + "*") + field.symbols[i];
        if (out.empty())
            out = (sgn == "-" ? "-" : "") + body;
        else
            out += " " + sgn + " " + body;
    }
    return out.empty() ? "0" : out;
}

int bareiss_rank(std::vector<std::vector<BigInt>> m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    BigInt prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                BigInt v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InputError("determinant of a non-square matrix");
    if (n == 0) return 1;
    BigInt prev(1);
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j) {
                BigInt v = m[c][c] * m[i][j] - m[i][c] * m[c][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

// Reduced echelon form in place; returns pivot columns.
std::vector<size_t> rref(std::vector<std::vector<BigRational>>& m, size_t cols) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        BigRational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            BigRational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RankResult rational_rank(const SymbolField& field, const std::vector<SymColumn>& columns) {
    field.validate();
    RankResult res;
    res.p = static_cast<int>(columns.size());
    if (columns.empty()) return res;
    res.k = static_cast<int>(columns[0].size());
    const size_t m = field.size();
    for (const auto& col : columns) {
        if (static_cast<int>(col.size()) != res.k) throw InputError("columns of different heights");
        for (const auto& x : col)
            if (x.size() > m) throw InputError("entry uses symbols outside the field");
    }
    // psi matrix: rows indexed by (row, symbol), columns by the p inputs
    const size_t rows = static_cast<size_t>(res.k) * m;
    std::vector<std::vector<BigRational>> psi(rows, std::vector<BigRational>(res.p));
    for (int c = 0; c < res.p; ++c)
        for (int r = 0; r < res.k; ++r)
            for (size_t s = 0; s < columns[c][r].size(); ++s) psi[r * m + s][c] = columns[c][r][s];

    // route 1: clear denominators column by column, Bareiss rank
    std::vector<std::vector<BigInt>> ints(rows, std::vector<BigInt>(res.p));
    for (int c = 0; c < res.p; ++c) {
        BigInt l(1);
        for (size_t r = 0; r < rows; ++r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), psi[r][c].get_den_mpz_t());
        for (size_t r = 0; r < rows; ++r) {
            BigRational v = psi[r][c] * l;
            ints[r][c] = v.get_num();
        }
    }
    res.rank = bareiss_rank(ints);

    // route 2: kernel from the reduced echelon form, each vector checked against psi
    std::vector<std::vector<BigRational>> red = psi;
    std::vector<size_t> pivots = rref(red, res.p);
    std::vector<bool> is_pivot(res.p, false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (int f = 0; f < res.p; ++f) {
        if (is_pivot[f]) continue;
        std::vector<BigRational> v(res.p);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][f];
        for (size_t r = 0; r < rows; ++r) {
            BigRational s(0);
            for (int c = 0; c < res.p; ++c) s += psi[r][c] * v[c];
            if (s != 0) throw InvariantError("kernel vector does not vanish under psi");
        }
        res.kernel.push_back(std::move(v));
    }
    res.kernel_dim = static_cast<int>(res.kernel.size());
    res.dual_rank = res.p - res.kernel_dim;
    return res;
}

std::vector<SymColumn> zeta_family_columns(SymbolField& field, int a) {
    if (a < 3 || a % 2 == 0) throw InputError("zeta family needs odd a >= 3");
    for (int s = 3; s <= a + 2; s += 2) field.add("zeta" + std::to_string(s));
    std::vector<SymColumn> cols;
    cols.push_back({sym_constant(field, 1), sym_constant(field, 0)});
    cols.push_back({sym_constant(field, 0), sym_constant(field, 1)});
    for (int s = 3; s <= a; s += 2) {
        BigRational b(exact::binomial(s + 1, 2));
        cols.push_back({sym_symbol(field, "zeta" + std::to_string(s)),
                        sym_scale(sym_symbol(field, "zeta" + std::to_string(s + 2)), b)});
    }
    return cols;
}

}  // namespace zc::crit
