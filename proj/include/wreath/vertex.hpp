#pragma once

#include "wreath/json_io.hpp"
#include "wreath/nekrasov.hpp"
#include "wreath/wreath_ops.hpp"

namespace wreath {

/// Colored components of a scalar (q,t)-Laurent sum; multiplying the scalar
/// by q shifts components down one color, by t up one color.
inline ColoredAlphabet color_split(const Poly& s, long r) {
    ColoredAlphabet out(static_cast<std::size_t>(r));
    for (long i = 0; i < r; ++i) out[static_cast<std::size_t>(i)] = RatFunc(color_part(s, r, i));
    return out;
}

/// Colored components of s / ((1-q)(1-t)).  Fattening the numerator by
/// sum_{a,b<r} q^a t^b leaves the color-neutral denominator (1-q^r)(1-t^r).
inline ColoredAlphabet color_split_over_qt(const Poly& s, long r) {
    Poly fat;
    for (long a = 0; a < r; ++a)
        for (long b = 0; b < r; ++b) {
            Exps m;
            m.e[VQ] = static_cast<int16_t>(a);
            m.e[VT] = static_cast<int16_t>(b);
            fat.add_term(m, Rat(1));
        }
    Poly den = (Poly(Rat(1)) - Poly::var(VQ, static_cast<int>(r))) *
               (Poly(Rat(1)) - Poly::var(VT, static_cast<int>(r)));
    Poly prod = s * fat;
    ColoredAlphabet out(static_cast<std::size_t>(r));
    for (long i = 0; i < r; ++i)
        out[static_cast<std::size_t>(i)] = RatFunc(color_part(prod, r, i), den);
    return out;
}

inline ColoredAlphabet iota_alphabet(const ColoredAlphabet& a) {
    long r = static_cast<long>(a.size());
    ColoredAlphabet out(a.size());
    for (long j = 0; j < r; ++j)
        out[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(imod(-j, r))];
    return out;
}

inline RatFunc alphabet_dot(const ColoredAlphabet& a, const ColoredAlphabet& b) {
    check(a.size() == b.size(), "rank mismatch");
    RatFunc acc;
    for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * b[j];
    return acc;
}

/// Vector evaluation f[A]: the ring map p_n[X^(j)] -> a_j at power n.
template <class B>
CoeffOf<B> eval_at_alphabet(const B& bk, const SymFunc<CoeffOf<B>>& f, const ColoredAlphabet& a) {
    check(static_cast<long>(a.size()) == f.r, "rank mismatch");
    CoeffOf<B> acc = bk.zero();
    for (const auto& [mp, c] : f.terms) {
        CoeffOf<B> term = c;
        for (long j = 0; j < f.r; ++j)
            for (long n : mp[static_cast<std::size_t>(j)].parts())
                term = term * bk.inject(a[static_cast<std::size_t>(j)].substitute_powers(n));
        acc += term;
    }
    return acc;
}

/// Colored corner data of lambda: component i of qt*(removable sum) -
/// (addable sum) at color i.
inline ColoredAlphabet corner_alphabet(const Partition& lam, long r) {
    return color_split(d_sum(lam), r);
}

/// Argument of the delta-series exponential: the corner data divided by
/// (1-q)(t-1), or its starred mirror qt*bar / ((1-q)(1-t)).
inline ColoredAlphabet delta_alphabet(const Partition& lam, long r, bool starred) {
    if (starred) {
        Poly qt = Poly::var(VQ) * Poly::var(VT);
        return color_split_over_qt(qt * bar(d_sum(lam)), r);
    }
    return color_split_over_qt(-d_sum(lam), r);
}

/// Delta series: Omega of the colored delta alphabet, truncated at cap.
/// Pairing against it evaluates at the corner data: <f, E_lam>' = f[iota D]
/// and <f, E*_lam>' = f[-qt iota bar(D)].
template <class B>
SymFunc<CoeffOf<B>> delta_series(const B& bk, const Partition& lam, long r, long cap,
                                 bool starred) {
    return omega_of_alphabet(bk, delta_alphabet(lam, r, starred), cap);
}

/// Basis tables for one core across quotient sizes 0..max_degree, the data
/// every graded operator (nabla, V, Pieri expansions) works over.
struct BasisFamily {
    long r = 1;
    Partition core;
    std::vector<WreathBasisTable> tables;

    static BasisFamily build(long r, const Partition& core, long max_n, bool use_cache = true) {
        BasisFamily fam;
        fam.r = r;
        fam.core = core;
        for (long n = 0; n <= max_n; ++n)
            fam.tables.push_back(use_cache ? solve_basis_cached(r, core, n)
                                           : solve_basis(r, core, n));
        return fam;
    }

    long max_degree() const { return static_cast<long>(tables.size()) - 1; }
    const WreathBasisTable& table(long n) const {
        require(n >= 0 && n <= max_degree(), "degree outside basis family");
        return tables[static_cast<std::size_t>(n)];
    }
    long quot_size(const Partition& lam) const {
        return (lam.size() - core.size()) / r;
    }
    const SymFunc<RatFunc>& at(const Partition& lam) const {
        return table(quot_size(lam)).at(lam);
    }
};

/// Nabla on inhomogeneous input: acts degree by degree through the family.
inline SymFunc<RatFunc> nabla_apply(const BasisFamily& fam, const SymFunc<RatFunc>& f,
                                    long power = 1, bool daggered = false) {
    const ExactBackend bk;
    SymFunc<RatFunc> out(f.r);
    for (long d = 0; d <= f.max_degree(); ++d) {
        SymFunc<RatFunc> comp = sym_component(bk, f, d);
        if (comp.is_zero()) continue;
        out = sym_add(bk, out, nabla_apply(fam.table(d), comp, power, daggered));
    }
    return out;
}

/// Row 0 of the inverse pairing twist: the alphabet of
/// Omega[X^(0) / ((1 - q sigma^-1)(t sigma - 1))].
inline ColoredAlphabet smoothing_alphabet(long r) {
    return alphabet_apply(inverse_twist_matrix(r), alphabet_unit(r, 0));
}

/// V (starred = false) or V* (starred = true) applied to f, truncated at cap.
/// V = nabla . Omega[X^(0)/((1-q sigma^-1)(t sigma-1))] . T[X^(0)], and V*
/// flips the signs, scales the Omega data by qt, and uses the inverse
/// daggered nabla.
inline SymFunc<RatFunc> v_apply(const BasisFamily& fam, const SymFunc<RatFunc>& f, bool starred,
                                long cap) {
    const ExactBackend bk;
    ColoredAlphabet tr = alphabet_unit(fam.r, 0);
    ColoredAlphabet om = smoothing_alphabet(fam.r);
    if (starred) {
        tr = alphabet_scale(tr, RatFunc(Rat(-1)));
        om = alphabet_scale(om, -(rf_var(VQ) * rf_var(VT)));
    }
    SymFunc<RatFunc> g = translation_apply(bk, tr, f);
    g = omega_multiply(bk, om, g, cap);
    return nabla_apply(fam, g, starred ? -1 : 1, starred);
}

inline ColoredAlphabet ext_translation_alphabet(long r, const RatFunc& u) {
    RatFunc c = RatFunc(Rat(1)) - u * rf_var(VQ) * rf_var(VT);
    return alphabet_scale(alphabet_unit(r, 0), c);
}

inline ColoredAlphabet ext_omega_alphabet(long r, const RatFunc& u) {
    RatFunc c = RatFunc(Rat(1)) - u.pow(-1);
    return alphabet_scale(smoothing_alphabet(r), c);
}

/// Ext operator W(u) f = Omega[(1-1/u) X^(0)/((1-q sigma^-1)(t sigma-1))]
/// T[(1-u qt) X^(0)] f, truncated at cap.  u may be the Laurent marker or
/// any exact specialization; it is fixed before anything expands.
template <class B>
SymFunc<CoeffOf<B>> ext_apply(const B& bk, const RatFunc& u, const SymFunc<CoeffOf<B>>& f,
                              long cap) {
    SymFunc<CoeffOf<B>> g = translation_apply(bk, ext_translation_alphabet(f.r, u), f);
    return omega_multiply(bk, ext_omega_alphabet(f.r, u), g, cap);
}

/// <H_mu^dagger, W(u) H_lambda>'.  For same-core labels this is
/// u^(-|quot(mu)|) times the Nekrasov factor expansion.
inline RatFunc ext_pairing(const BasisFamily& fam, const Partition& lam, const Partition& mu,
                           const RatFunc& u) {
    const ExactBackend bk;
    long nmu = fam.quot_size(mu);
    SymFunc<RatFunc> w = ext_apply(bk, u, fam.at(lam), nmu);
    return wreath_pairing(bk, dagger(fam.at(mu)), w);
}

/// Same matrix element evaluated at a rational point (q, t, u).
inline Rat ext_pairing_at(const BasisFamily& fam, const Partition& lam, const Partition& mu,
                          const EvalPoint& pt) {
    const PointBackend bk{pt};
    long nmu = fam.quot_size(mu);
    SymFunc<Rat> w = ext_apply(bk, rf_var(VU), sym_convert(bk, fam.at(lam)), nmu);
    return wreath_pairing(bk, sym_convert(bk, dagger(fam.at(mu))), w);
}

/// Skewing Pieri operator h_n^perp[(1-qt) X^(0)].
template <class B>
SymFunc<CoeffOf<B>> pieri_skew_apply(const B& bk, long n, const SymFunc<CoeffOf<B>>& f) {
    ColoredAlphabet a =
        alphabet_scale(alphabet_unit(f.r, 0), RatFunc(Rat(1)) - rf_var(VQ) * rf_var(VT));
    return skew_by(bk, hn_of_alphabet(bk, a, n), f);
}

/// Multiplication Pieri operator e_n[(1-qt) X^(0)/((1-q sigma^-1)(1-t sigma))].
template <class B>
SymFunc<CoeffOf<B>> pieri_mult_apply(const B& bk, long n, const SymFunc<CoeffOf<B>>& f) {
    PlethysmMatrix k = inv_one_minus_s_sigma(f.r, rf_var(VQ), -1) *
                       inv_one_minus_s_sigma(f.r, rf_var(VT), 1);
    ColoredAlphabet b = alphabet_apply(
        k, alphabet_scale(alphabet_unit(f.r, 0), RatFunc(Rat(1)) - rf_var(VQ) * rf_var(VT)));
    return sym_mul(bk, en_of_alphabet(bk, b, n), f);
}

/// Containment with n boxes of every color: same core and quotient sizes
/// differing by n.
inline bool contains_colored(const Partition& big, const Partition& small, long r, long n) {
    if (!big.contains(small)) return false;
    CoreQuotient cb = core_quotient(big, r), cs = core_quotient(small, r);
    if (cb.core != cs.core) return false;
    long db = 0, ds = 0;
    for (const Partition& p : cb.quotient) db += p.size();
    for (const Partition& p : cs.quotient) ds += p.size();
    return db == ds + n;
}

/// Expected Pieri coefficient on mu of h_n^perp[(1-qt)X^(0)] H_lambda.
inline RatFunc pieri_skew_coeff(const Partition& lam, const Partition& mu, long r) {
    Poly one(Rat(1));
    Poly num = nekrasov_factor(lam, mu, r).specialized(one);
    Poly den = nekrasov_factor(mu, mu, r).specialized(one);
    return RatFunc(num, den);
}

/// Expected Pieri coefficient on mu of the multiplication operator:
/// (-1)^n (qt)^{|quot(mu)|} N_{lam,mu}(1/(qt)) / N_{mu,mu}(1).
inline RatFunc pieri_mult_coeff(const Partition& lam, const Partition& mu, long r, long n) {
    Exps inv_qt;
    inv_qt.e[VQ] = -1;
    inv_qt.e[VT] = -1;
    Poly num = nekrasov_factor(lam, mu, r).specialized(Poly::monomial(inv_qt, Rat(1)));
    Poly den = nekrasov_factor(mu, mu, r).specialized(Poly(Rat(1)));
    long nmu = hook_multiples_count(mu, r);
    Exps qt_pow;
    qt_pow.e[VQ] = static_cast<int16_t>(nmu);
    qt_pow.e[VT] = static_cast<int16_t>(nmu);
    RatFunc c = RatFunc(Poly::monomial(qt_pow, Rat(1)) * num, den);
    return n % 2 ? -c : c;
}

}  // namespace wreath
