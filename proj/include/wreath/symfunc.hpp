#pragma once

#include <functional>
#include <optional>

#include "wreath/characters.hpp"
#include "wreath/core_quotient.hpp"
#include "wreath/evalpoint.hpp"
#include "wreath/series.hpp"

namespace wreath {

/// Index of a colored power sum / multi-Schur basis element: one partition
/// per color 0..r-1.
using MultiPartition = std::vector<Partition>;

inline long mp_size(const MultiPartition& mp) {
    long s = 0;
    for (const Partition& p : mp) s += p.size();
    return s;
}
inline std::vector<long> mp_color_sizes(const MultiPartition& mp) {
    std::vector<long> out;
    for (const Partition& p : mp) out.push_back(p.size());
    return out;
}
inline Rat z_multi(const MultiPartition& mp) {
    Rat z(1);
    for (const Partition& p : mp) z *= z_value(p);
    return z;
}
inline MultiPartition mp_empty(long r) { return MultiPartition(static_cast<std::size_t>(r)); }

inline std::string mp_str(const MultiPartition& mp) {
    std::string s = "(";
    for (std::size_t i = 0; i < mp.size(); ++i) {
        if (i) s += ";";
        s += mp[i].str();
    }
    return s + ")";
}

/// Element of the colored symmetric algebra in power-sum coordinates:
/// f = sum over indices vecmu of c_vecmu * prod_i p_{mu^(i)}[X^(i)].
template <class C>
struct SymFunc {
    long r = 1;
    std::map<MultiPartition, C> terms;

    explicit SymFunc(long rr = 1) : r(rr) {}

    bool is_zero() const { return terms.empty(); }
    long max_degree() const {
        long d = 0;
        for (const auto& [mp, c] : terms) d = std::max(d, mp_size(mp));
        return d;
    }
};

/// Exact backend: coefficients are rational functions in q, t, u (and the
/// series variables when used as formal markers).
struct ExactBackend {
    using C = RatFunc;
    C zero() const { return RatFunc(); }
    C one() const { return RatFunc(Rat(1)); }
    C from_rat(const Rat& x) const { return RatFunc(x); }
    C inject(const RatFunc& f) const { return f; }
    bool is_zero(const C& c) const { return c.is_zero(); }
    C div(const C& a, const C& b) const { return a / b; }
};

/// Probabilistic backend: q, t, u carry fixed rational values.
struct PointBackend {
    EvalPoint pt;
    using C = Rat;
    C zero() const { return Rat(0); }
    C one() const { return Rat(1); }
    C from_rat(const Rat& x) const { return x; }
    C inject(const RatFunc& f) const { return f.evaluate(pt.as_values()); }
    bool is_zero(const C& c) const { return sgn(c) == 0; }
    C div(const C& a, const C& b) const {
        require(sgn(b) != 0, "division by zero value");
        return a / b;
    }
};

/// Series backend: coefficients are truncated series; optional rational
/// pre-assignments (e.g. numeric q, t with symbolic u, p) are applied before
/// expansion.
struct SeriesBackend {
    SeriesCaps caps;
    std::array<std::optional<Rat>, kNumVars> pre{};
    using C = Series;
    C zero() const { return Series(caps); }
    C one() const { return Series(caps, Rat(1)); }
    C from_rat(const Rat& x) const { return Series(caps, x); }
    C inject(const RatFunc& f) const {
        RatFunc g = f;
        for (int v = 0; v < kNumVars; ++v)
            if (pre[v]) g = g.substitute_value(v, *pre[v]);
        return series_from_ratfunc(caps, g);
    }
    bool is_zero(const C& c) const { return c.is_zero(); }
    C div(const C& a, const C& b) const { return a * b.inverse(); }
};

template <class B>
using CoeffOf = typename B::C;

template <class B>
void sym_add_term(const B& bk, SymFunc<CoeffOf<B>>& f, const MultiPartition& mp,
                  const CoeffOf<B>& c) {
    if (bk.is_zero(c)) return;
    auto [it, fresh] = f.terms.emplace(mp, c);
    if (!fresh) {
        it->second += c;
        if (bk.is_zero(it->second)) f.terms.erase(it);
    }
}

template <class B>
SymFunc<CoeffOf<B>> sym_add(const B& bk, const SymFunc<CoeffOf<B>>& a,
                            const SymFunc<CoeffOf<B>>& b) {
    check(a.r == b.r, "rank mismatch");
    SymFunc<CoeffOf<B>> out = a;
    for (const auto& [mp, c] : b.terms) sym_add_term(bk, out, mp, c);
    return out;
}

template <class B>
SymFunc<CoeffOf<B>> sym_scale(const B& bk, const SymFunc<CoeffOf<B>>& a, const CoeffOf<B>& s) {
    SymFunc<CoeffOf<B>> out(a.r);
    if (bk.is_zero(s)) return out;
    for (const auto& [mp, c] : a.terms) sym_add_term(bk, out, mp, c * s);
    return out;
}

inline MultiPartition mp_union(const MultiPartition& a, const MultiPartition& b) {
    MultiPartition out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<long> parts = a[i].parts();
        const auto& bp = b[i].parts();
        parts.insert(parts.end(), bp.begin(), bp.end());
        std::sort(parts.begin(), parts.end(), std::greater<long>());
        out[i] = Partition(parts);
    }
    return out;
}

/// Product of power-sum monomials: indices accumulate, coefficients multiply.
/// cap < 0 means no truncation; otherwise indices above the cap are dropped.
template <class B>
SymFunc<CoeffOf<B>> sym_mul(const B& bk, const SymFunc<CoeffOf<B>>& a,
                            const SymFunc<CoeffOf<B>>& b, long cap = -1) {
    check(a.r == b.r, "rank mismatch");
    SymFunc<CoeffOf<B>> out(a.r);
    for (const auto& [ma, ca] : a.terms) {
        long da = mp_size(ma);
        for (const auto& [mb, cb] : b.terms) {
            if (cap >= 0 && da + mp_size(mb) > cap) continue;
            sym_add_term(bk, out, mp_union(ma, mb), ca * cb);
        }
    }
    return out;
}

template <class B>
SymFunc<CoeffOf<B>> sym_truncate(const B& bk, const SymFunc<CoeffOf<B>>& a, long cap) {
    SymFunc<CoeffOf<B>> out(a.r);
    for (const auto& [mp, c] : a.terms)
        if (mp_size(mp) <= cap) sym_add_term(bk, out, mp, c);
    return out;
}

/// Degree-d homogeneous component.
template <class B>
SymFunc<CoeffOf<B>> sym_component(const B& bk, const SymFunc<CoeffOf<B>>& a, long d) {
    SymFunc<CoeffOf<B>> out(a.r);
    for (const auto& [mp, c] : a.terms)
        if (mp_size(mp) == d) sym_add_term(bk, out, mp, c);
    return out;
}

/// Unit element 1 (empty index).
template <class B>
SymFunc<CoeffOf<B>> sym_one(const B& bk, long r) {
    SymFunc<CoeffOf<B>> out(r);
    out.terms.emplace(mp_empty(r), bk.one());
    return out;
}

/// Single colored power sum p_n[X^(color)].
template <class B>
SymFunc<CoeffOf<B>> sym_p(const B& bk, long r, long color, long n) {
    SymFunc<CoeffOf<B>> out(r);
    MultiPartition mp = mp_empty(r);
    mp[static_cast<std::size_t>(imod(color, r))] = Partition{n};
    out.terms.emplace(mp, bk.one());
    return out;
}

/// Multi-Schur function s_vecnu = prod_i s_{nu^(i)}[X^(i)] in power-sum
/// coordinates (coefficients are rational numbers).
template <class B>
SymFunc<CoeffOf<B>> schur_multi(const B& bk, const MultiPartition& nu) {
    long r = static_cast<long>(nu.size());
    SymFunc<CoeffOf<B>> out = sym_one(bk, r);
    for (long i = 0; i < r; ++i) {
        if (nu[i].empty()) continue;
        SymFunc<CoeffOf<B>> factor(r);
        for (const auto& [mu, coef] : schur_in_powersums(nu[i])) {
            MultiPartition mp = mp_empty(r);
            mp[i] = mu;
            sym_add_term(bk, factor, mp, bk.from_rat(coef));
        }
        out = sym_mul(bk, out, factor);
    }
    return out;
}

/// schur_to_powersum: expands a multi-Schur indexed combination into
/// power-sum coordinates.
template <class B>
SymFunc<CoeffOf<B>> schur_to_powersum(const B& bk,
                                      const std::map<MultiPartition, CoeffOf<B>>& schur_coeffs,
                                      long r) {
    SymFunc<CoeffOf<B>> out(r);
    for (const auto& [nu, c] : schur_coeffs)
        out = sym_add(bk, out, sym_scale(bk, schur_multi<B>(bk, nu), c));
    return out;
}

/// Hall pairing with colors mutually orthogonal:
/// <p_vecmu, p_vecnu> = delta * prod_i z_{mu^(i)}.
template <class B>
CoeffOf<B> hall_pairing(const B& bk, const SymFunc<CoeffOf<B>>& f, const SymFunc<CoeffOf<B>>& g) {
    check(f.r == g.r, "rank mismatch");
    CoeffOf<B> acc = bk.zero();
    const auto& small = f.terms.size() <= g.terms.size() ? f : g;
    const auto& big = f.terms.size() <= g.terms.size() ? g : f;
    for (const auto& [mp, c] : small.terms) {
        auto it = big.terms.find(mp);
        if (it == big.terms.end()) continue;
        acc += c * it->second * bk.from_rat(z_multi(mp));
    }
    return acc;
}

/// powersum_to_schur: coefficient of the multi-Schur s_vecnu in f, via Hall
/// orthonormality of the multi-Schur basis.
template <class B>
std::map<MultiPartition, CoeffOf<B>> powersum_to_schur(const B& bk,
                                                       const SymFunc<CoeffOf<B>>& f) {
    std::map<MultiPartition, CoeffOf<B>> out;
    // group terms by color-size vector, then pair against each multi-Schur
    std::map<std::vector<long>, SymFunc<CoeffOf<B>>> blocks;
    for (const auto& [mp, c] : f.terms) {
        auto key = mp_color_sizes(mp);
        auto [it, fresh] = blocks.emplace(key, SymFunc<CoeffOf<B>>(f.r));
        sym_add_term(bk, it->second, mp, c);
    }
    for (const auto& [sizes, block] : blocks) {
        // all multipartitions with these color sizes
        std::vector<MultiPartition> idx;
        MultiPartition cur(mp_empty(f.r));
        std::function<void(long)> rec = [&](long i) {
            if (i == f.r) {
                idx.push_back(cur);
                return;
            }
            for (const Partition& p : partitions_of(sizes[i])) {
                cur[i] = p;
                rec(i + 1);
            }
        };
        rec(0);
        for (const MultiPartition& nu : idx) {
            CoeffOf<B> c = hall_pairing(bk, schur_multi<B>(bk, nu), block);
            if (!bk.is_zero(c)) out[nu] = c;
        }
    }
    return out;
}

/// Converts exact coefficients into any backend.
template <class B>
SymFunc<CoeffOf<B>> sym_convert(const B& bk, const SymFunc<RatFunc>& f) {
    SymFunc<CoeffOf<B>> out(f.r);
    for (const auto& [mp, c] : f.terms) sym_add_term(bk, out, mp, bk.inject(c));
    return out;
}

}  // namespace wreath
