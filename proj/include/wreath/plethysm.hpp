#pragma once

#include "wreath/symfunc.hpp"

namespace wreath {

/// r x r matrix of coefficient functions acting on the colored alphabet
/// vector: (M X)^(i) = sum_j M[i][j] X^(j).  Entries are stored at power 1;
/// plethysm into p_n raises them via substitute_powers(n).
struct PlethysmMatrix {
    long r = 1;
    std::vector<std::vector<RatFunc>> e;

    explicit PlethysmMatrix(long rr = 1)
        : r(rr), e(static_cast<std::size_t>(rr),
                   std::vector<RatFunc>(static_cast<std::size_t>(rr))) {}

    RatFunc& at(long i, long j) { return e[imod(i, r)][imod(j, r)]; }
    const RatFunc& at(long i, long j) const { return e[imod(i, r)][imod(j, r)]; }

    PlethysmMatrix operator+(const PlethysmMatrix& o) const {
        check(r == o.r, "rank mismatch");
        PlethysmMatrix out(r);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
        return out;
    }
    PlethysmMatrix operator-(const PlethysmMatrix& o) const {
        check(r == o.r, "rank mismatch");
        PlethysmMatrix out(r);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) out.at(i, j) = at(i, j) - o.at(i, j);
        return out;
    }
    PlethysmMatrix operator*(const PlethysmMatrix& o) const {
        check(r == o.r, "rank mismatch");
        PlethysmMatrix out(r);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) {
                RatFunc acc;
                for (long k = 0; k < r; ++k) acc += at(i, k) * o.at(k, j);
                out.at(i, j) = acc;
            }
        return out;
    }
    PlethysmMatrix scaled(const RatFunc& s) const {
        PlethysmMatrix out(r);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) out.at(i, j) = at(i, j) * s;
        return out;
    }
    PlethysmMatrix transposed() const {
        PlethysmMatrix out(r);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) out.at(i, j) = at(j, i);
        return out;
    }
    PlethysmMatrix substitute_powers(long n) const {
        PlethysmMatrix out(r);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) out.at(i, j) = at(i, j).substitute_powers(n);
        return out;
    }
    /// Sum of all entries, for trace arguments.
    RatFunc entry_sum() const {
        RatFunc acc;
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) acc += at(i, j);
        return acc;
    }
};

inline PlethysmMatrix pleth_identity(long r) {
    PlethysmMatrix m(r);
    for (long i = 0; i < r; ++i) m.at(i, i) = RatFunc(Rat(1));
    return m;
}

/// sigma^k rotates colors up: (sigma^k X)^(i) = X^(i+k).
inline PlethysmMatrix pleth_sigma_power(long r, long k) {
    PlethysmMatrix m(r);
    for (long i = 0; i < r; ++i) m.at(i, i + k) = RatFunc(Rat(1));
    return m;
}

/// iota negates colors: (iota X)^(i) = X^(-i).
inline PlethysmMatrix pleth_iota(long r) {
    PlethysmMatrix m(r);
    for (long i = 0; i < r; ++i) m.at(i, -i) = RatFunc(Rat(1));
    return m;
}

inline PlethysmMatrix pleth_scalar(long r, const RatFunc& s) {
    return pleth_identity(r).scaled(s);
}

/// I - s * sigma^dir for dir = +1 or -1.
inline PlethysmMatrix one_minus_s_sigma(long r, const RatFunc& s, int dir) {
    check(dir == 1 || dir == -1, "dir must be +-1");
    return pleth_identity(r) - pleth_sigma_power(r, dir).scaled(s);
}

/// (I - s * sigma^dir)^(-1): geometric series collapses to
/// entry(i,j) = s^((dir*(j-i)) mod r) / (1 - s^r).
inline PlethysmMatrix inv_one_minus_s_sigma(long r, const RatFunc& s, int dir) {
    check(dir == 1 || dir == -1, "dir must be +-1");
    RatFunc den = RatFunc(Rat(1)) - s.pow(r);
    PlethysmMatrix m(r);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
            m.at(i, j) = s.pow(imod(dir * (j - i), r)) / den;
    return m;
}

inline RatFunc rf_var(Var v) {
    Poly p;
    Exps e{};
    e.e[v] = 1;
    p.add_term(e, Rat(1));
    return RatFunc(p);
}

/// Twist defining the deformed pairing: (1 - q sigma^-1)(t sigma - 1).
inline PlethysmMatrix pairing_twist_matrix(long r) {
    PlethysmMatrix a = one_minus_s_sigma(r, rf_var(VQ), -1);
    PlethysmMatrix b = pleth_sigma_power(r, 1).scaled(rf_var(VT)) - pleth_identity(r);
    return a * b;
}

/// Inverse twist 1 / ((1 - q sigma^-1)(t sigma - 1)).
inline PlethysmMatrix inverse_twist_matrix(long r) {
    PlethysmMatrix binv = inv_one_minus_s_sigma(r, rf_var(VT), 1).scaled(RatFunc(Rat(-1)));
    PlethysmMatrix ainv = inv_one_minus_s_sigma(r, rf_var(VQ), -1);
    return binv * ainv;
}

/// Scalar multiples of colored alphabets: a represents sum_j a[j] X^(j).
using ColoredAlphabet = std::vector<RatFunc>;

inline ColoredAlphabet alphabet_unit(long r, long color) {
    ColoredAlphabet a(static_cast<std::size_t>(r));
    a[static_cast<std::size_t>(imod(color, r))] = RatFunc(Rat(1));
    return a;
}

inline ColoredAlphabet alphabet_scale(const ColoredAlphabet& a, const RatFunc& s) {
    ColoredAlphabet out = a;
    for (RatFunc& x : out) x = x * s;
    return out;
}

inline ColoredAlphabet alphabet_add(const ColoredAlphabet& a, const ColoredAlphabet& b) {
    check(a.size() == b.size(), "rank mismatch");
    ColoredAlphabet out = a;
    for (std::size_t j = 0; j < b.size(); ++j) out[j] += b[j];
    return out;
}

/// Substituting X -> M X turns the alphabet sum_j a[j] X^(j) into
/// sum_k (sum_j a[j] M[j][k]) X^(k).
inline ColoredAlphabet alphabet_apply(const PlethysmMatrix& m, const ColoredAlphabet& a) {
    check(static_cast<long>(a.size()) == m.r, "rank mismatch");
    ColoredAlphabet out(a.size());
    for (long k = 0; k < m.r; ++k) {
        RatFunc acc;
        for (long j = 0; j < m.r; ++j) acc += a[static_cast<std::size_t>(j)] * m.at(j, k);
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

/// p_n of the alphabet sum_j a[j] X^(j).
template <class B>
SymFunc<CoeffOf<B>> p_of_alphabet(const B& bk, const ColoredAlphabet& a, long n) {
    long r = static_cast<long>(a.size());
    SymFunc<CoeffOf<B>> out(r);
    for (long j = 0; j < r; ++j) {
        const RatFunc& c = a[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        out = sym_add(bk, out, sym_scale(bk, sym_p(bk, r, j, n),
                                         bk.inject(c.substitute_powers(n))));
    }
    return out;
}

/// Matrix plethysm f[M X]: ring map sending p_n[X^(i)] to
/// sum_j (M[i][j] at power n) p_n[X^(j)].
template <class B>
SymFunc<CoeffOf<B>> apply_matrix_plethysm(const B& bk, const PlethysmMatrix& m,
                                          const SymFunc<CoeffOf<B>>& f) {
    check(m.r == f.r, "rank mismatch");
    SymFunc<CoeffOf<B>> out(f.r);
    std::map<std::pair<long, long>, SymFunc<CoeffOf<B>>> image;  // (color, n) -> p_n[(MX)^(color)]
    for (const auto& [mp, c] : f.terms) {
        SymFunc<CoeffOf<B>> acc = sym_one(bk, f.r);
        for (long i = 0; i < f.r; ++i) {
            for (long n : mp[static_cast<std::size_t>(i)].parts()) {
                auto key = std::make_pair(i, n);
                auto it = image.find(key);
                if (it == image.end()) {
                    ColoredAlphabet row(static_cast<std::size_t>(f.r));
                    for (long j = 0; j < f.r; ++j) row[static_cast<std::size_t>(j)] = m.at(i, j);
                    it = image.emplace(key, p_of_alphabet(bk, row, n)).first;
                }
                acc = sym_mul(bk, acc, it->second);
            }
        }
        out = sym_add(bk, out, sym_scale(bk, acc, c));
    }
    return out;
}

}  // namespace wreath
