#pragma once

#include "wreath/plethysm.hpp"

namespace wreath {

/// exp(g) truncated at total degree cap; g must have no constant term.
template <class B>
SymFunc<CoeffOf<B>> sym_exp(const B& bk, const SymFunc<CoeffOf<B>>& g, long cap) {
    check(g.terms.find(mp_empty(g.r)) == g.terms.end(), "exp needs vanishing constant term");
    SymFunc<CoeffOf<B>> out = sym_one(bk, g.r);
    SymFunc<CoeffOf<B>> power = out;
    Rat fact(1);
    for (long m = 1; m <= cap; ++m) {
        power = sym_mul(bk, power, g, cap);
        if (power.is_zero()) break;
        fact *= m;
        out = sym_add(bk, out, sym_scale(bk, power, bk.from_rat(Rat(1) / fact)));
    }
    return out;
}

/// Omega[A] = exp(sum_n p_n[A]/n) truncated at degree cap, for the alphabet
/// A = sum_j a[j] X^(j).
template <class B>
SymFunc<CoeffOf<B>> omega_of_alphabet(const B& bk, const ColoredAlphabet& a, long cap) {
    long r = static_cast<long>(a.size());
    SymFunc<CoeffOf<B>> log_term(r);
    for (long n = 1; n <= cap; ++n)
        log_term = sym_add(bk, log_term,
                           sym_scale(bk, p_of_alphabet(bk, a, n), bk.from_rat(Rat(1, n))));
    return sym_exp(bk, log_term, cap);
}

/// Multiplication by Omega[A], truncated at degree cap.
template <class B>
SymFunc<CoeffOf<B>> omega_multiply(const B& bk, const ColoredAlphabet& a,
                                   const SymFunc<CoeffOf<B>>& f, long cap) {
    return sym_mul(bk, omega_of_alphabet(bk, a, cap), f, cap);
}

/// Translation f(X) -> f(X + A) where A = sum_j a[j] * (trivial alphabet at
/// color j): ring map p_n[X^(j)] -> p_n[X^(j)] + a[j] at power n.
template <class B>
SymFunc<CoeffOf<B>> translation_apply(const B& bk, const ColoredAlphabet& a,
                                      const SymFunc<CoeffOf<B>>& f) {
    long r = f.r;
    check(static_cast<long>(a.size()) == r, "rank mismatch");
    SymFunc<CoeffOf<B>> out(r);
    std::map<std::pair<long, long>, SymFunc<CoeffOf<B>>> image;  // (color, n) -> shifted p_n
    for (const auto& [mp, c] : f.terms) {
        SymFunc<CoeffOf<B>> acc = sym_one(bk, r);
        for (long j = 0; j < r; ++j) {
            const RatFunc& aj = a[static_cast<std::size_t>(j)];
            for (long n : mp[static_cast<std::size_t>(j)].parts()) {
                if (aj.is_zero()) {
                    acc = sym_mul(bk, acc, sym_p(bk, r, j, n));
                    continue;
                }
                auto key = std::make_pair(j, n);
                auto it = image.find(key);
                if (it == image.end()) {
                    SymFunc<CoeffOf<B>> shifted = sym_p(bk, r, j, n);
                    sym_add_term(bk, shifted, mp_empty(r), bk.inject(aj.substitute_powers(n)));
                    it = image.emplace(key, shifted).first;
                }
                acc = sym_mul(bk, acc, it->second);
            }
        }
        out = sym_add(bk, out, sym_scale(bk, acc, c));
    }
    return out;
}

/// p_n[X^(color)]^perp: Hall adjoint of multiplication, the derivation
/// n * d/dp_n[X^(color)].
template <class B>
SymFunc<CoeffOf<B>> skew_by_power(const B& bk, long color, long n,
                                  const SymFunc<CoeffOf<B>>& g) {
    SymFunc<CoeffOf<B>> out(g.r);
    for (const auto& [mp, c] : g.terms) {
        const auto& parts = mp[static_cast<std::size_t>(color)].parts();
        long mult = static_cast<long>(std::count(parts.begin(), parts.end(), n));
        if (mult == 0) continue;
        MultiPartition reduced = mp;
        std::vector<long> rp = parts;
        rp.erase(std::find(rp.begin(), rp.end(), n));
        reduced[static_cast<std::size_t>(color)] = Partition(rp);
        sym_add_term(bk, out, reduced, c * bk.from_rat(Rat(n * mult)));
    }
    return out;
}

/// F^perp g: Hall adjoint of multiplication by F.
template <class B>
SymFunc<CoeffOf<B>> skew_by(const B& bk, const SymFunc<CoeffOf<B>>& f,
                            const SymFunc<CoeffOf<B>>& g) {
    check(f.r == g.r, "rank mismatch");
    SymFunc<CoeffOf<B>> out(g.r);
    for (const auto& [mp, c] : f.terms) {
        SymFunc<CoeffOf<B>> cur = g;
        for (long j = 0; j < f.r && !cur.is_zero(); ++j)
            for (long n : mp[static_cast<std::size_t>(j)].parts())
                cur = skew_by_power(bk, j, n, cur);
        out = sym_add(bk, out, sym_scale(bk, cur, c));
    }
    return out;
}

/// Complete homogeneous h_n[A] (sign = +1) or elementary e_n[A] (sign = -1):
/// sum over mu of n of eps(mu) p_mu[A] / z_mu.
template <class B>
SymFunc<CoeffOf<B>> hn_of_alphabet(const B& bk, const ColoredAlphabet& a, long n,
                                   int sign = 1) {
    long r = static_cast<long>(a.size());
    if (n == 0) return sym_one(bk, r);
    SymFunc<CoeffOf<B>> out(r);
    std::map<long, SymFunc<CoeffOf<B>>> pcache;
    for (const Partition& mu : partitions_of(n)) {
        SymFunc<CoeffOf<B>> term = sym_one(bk, r);
        for (long k : mu.parts()) {
            auto it = pcache.find(k);
            if (it == pcache.end()) it = pcache.emplace(k, p_of_alphabet(bk, a, k)).first;
            term = sym_mul(bk, term, it->second);
        }
        Rat coef = Rat(1) / z_value(mu);
        if (sign < 0 && (n - mu.length()) % 2 == 1) coef = -coef;
        out = sym_add(bk, out, sym_scale(bk, term, bk.from_rat(coef)));
    }
    return out;
}

template <class B>
SymFunc<CoeffOf<B>> en_of_alphabet(const B& bk, const ColoredAlphabet& a, long n) {
    return hn_of_alphabet(bk, a, n, -1);
}

/// Deformed pairing <f, g>' = <f[iota X], g[(1 - q sigma^-1)(t sigma - 1) X]>
/// where <,> is the Hall pairing.
template <class B>
CoeffOf<B> wreath_pairing(const B& bk, const SymFunc<CoeffOf<B>>& f,
                          const SymFunc<CoeffOf<B>>& g) {
    check(f.r == g.r, "rank mismatch");
    return hall_pairing(bk, apply_matrix_plethysm(bk, pleth_iota(f.r), f),
                        apply_matrix_plethysm(bk, pairing_twist_matrix(f.r), g));
}

}  // namespace wreath
