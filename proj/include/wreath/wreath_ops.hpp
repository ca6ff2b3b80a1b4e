#pragma once

#include <map>

#include "wreath/operators.hpp"
#include "wreath/solver.hpp"

namespace wreath {

/// Dagger involution: q, t -> 1/q, 1/t in the coefficients together with the
/// signed color flip p_n[X^(i)] -> -p_n[X^(-i)].
inline SymFunc<RatFunc> dagger(const SymFunc<RatFunc>& f) {
    SymFunc<RatFunc> out(f.r);
    for (const auto& [mp, c] : f.terms) {
        MultiPartition flip(mp.size());
        long nparts = 0;
        for (long i = 0; i < f.r; ++i) {
            flip[static_cast<std::size_t>(imod(-i, f.r))] = mp[static_cast<std::size_t>(i)];
            nparts += mp[static_cast<std::size_t>(i)].length();
        }
        RatFunc cc = c.invert_vars({VQ, VT});
        if (nparts % 2) cc = -cc;
        out.terms.emplace(std::move(flip), std::move(cc));
    }
    return out;
}

/// Diagonal character of nabla on H_lambda: the signed product of q^a t^b
/// over the color-0 boxes of lambda outside its core.
inline RatFunc nabla_eigenvalue(long r, const Partition& core, const Partition& lam) {
    Poly ev(1);
    for (const Box& box : lam.boxes()) {
        if (core.contains_box(box) || box.color(r) != 0) continue;
        Exps m;
        m.e[VQ] = static_cast<int16_t>(box.a);
        m.e[VT] = static_cast<int16_t>(box.b);
        ev = ev * (-Poly::monomial(m, Rat(1)));
    }
    return RatFunc(ev);
}

/// Pairing norm <H_lambda^dagger, H_lambda>'.
inline RatFunc h_norm(const WreathBasisTable& tab, const Partition& lam) {
    const ExactBackend bk;
    const SymFunc<RatFunc>& h = tab.at(lam);
    return wreath_pairing(bk, dagger(h), h);
}

/// Coordinates of f in the basis {H_lambda} (daggered = true: in
/// {H_lambda^dagger}).  Requires f to lie in the span; the residual is
/// checked and a failure raises an internal error.
inline std::map<Partition, RatFunc> h_expand(const WreathBasisTable& tab,
                                             const SymFunc<RatFunc>& f, bool daggered = false) {
    const ExactBackend bk;
    std::map<Partition, RatFunc> coords;
    SymFunc<RatFunc> residual = f;
    for (const auto& [lam, h] : tab.h) {
        SymFunc<RatFunc> hd = dagger(h);
        RatFunc norm = wreath_pairing(bk, hd, h);
        check(!norm.is_zero(), "degenerate pairing norm");
        const SymFunc<RatFunc>& dual = daggered ? h : hd;
        const SymFunc<RatFunc>& member = daggered ? hd : h;
        RatFunc c = wreath_pairing(bk, dual, f) / norm;
        if (c.is_zero()) continue;
        coords[lam] = c;
        residual = sym_add(bk, residual, sym_scale(bk, member, -c));
    }
    check(residual.is_zero(), "function lies outside the span of the basis table");
    return coords;
}

/// Applies nabla (power = +1) or any integer power through the H-expansion;
/// daggered = true applies the adjoint power on the daggered basis, which has
/// the same eigenvalues.
inline SymFunc<RatFunc> nabla_apply(const WreathBasisTable& tab, const SymFunc<RatFunc>& f,
                                    long power = 1, bool daggered = false) {
    const ExactBackend bk;
    SymFunc<RatFunc> out(tab.r);
    for (const auto& [lam, c] : h_expand(tab, f, daggered)) {
        RatFunc ev = nabla_eigenvalue(tab.r, tab.core, lam).pow(power);
        const SymFunc<RatFunc>& h = tab.at(lam);
        out = sym_add(bk, out, sym_scale(bk, daggered ? dagger(h) : h, c * ev));
    }
    return out;
}

}  // namespace wreath
