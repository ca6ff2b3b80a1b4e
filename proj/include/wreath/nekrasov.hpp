#pragma once

#include <vector>

#include "wreath/partition.hpp"
#include "wreath/poly.hpp"

namespace wreath {

/// q^a t^b for the box in column a, row b.
inline Poly box_weight(const Box& box) {
    Exps m;
    m.e[VQ] = static_cast<int16_t>(box.a);
    m.e[VT] = static_cast<int16_t>(box.b);
    return Poly::monomial(m, Rat(1));
}

/// Sum of the box weights of the diagram.
inline Poly b_sum(const Partition& lam) {
    Poly out;
    for (const Box& box : lam.boxes()) out += box_weight(box);
    return out;
}

/// Inverts q and t.
inline Poly bar(const Poly& p) { return p.invert_vars({VQ, VT}); }

/// Terms q^a t^b of p with b - a = i mod r.
inline Poly color_part(const Poly& p, long r, long i) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        check(m.e[VU] == 0 && m.e[VBT] == 0 && m.e[VP] == 0 && m.e[VS] == 0,
              "color_part expects a q,t-sum");
        if (imod(m.e[VT] - m.e[VQ], r) == i) out.add_term(m, c);
    }
    return out;
}

/// qt-weighted removable corners minus addable corners; the change character
/// of the diagram's boundary.  d_sum of the empty diagram is -1.
inline Poly d_sum(const Partition& lam) {
    AddableRemovable ar = addable_removable(lam, 1, 0);
    Poly qt = Poly::var(VQ) * Poly::var(VT);
    Poly out;
    for (const Box& box : ar.removable) out += qt * box_weight(box);
    for (const Box& box : ar.addable) out -= box_weight(box);
    return out;
}

/// Mixed arm/leg sum over the two diagrams: q^{-a_mu} t^{l_lam + 1} over
/// boxes of lam plus q^{a_lam + 1} t^{-l_mu} over boxes of mu.
inline Poly mixed_e_sum_boxes(const Partition& lam, const Partition& mu) {
    Poly out;
    for (const Box& box : lam.boxes()) {
        Exps m;
        m.e[VQ] = static_cast<int16_t>(-arm(mu, box));
        m.e[VT] = static_cast<int16_t>(leg(lam, box) + 1);
        out.add_term(m, Rat(1));
    }
    for (const Box& box : mu.boxes()) {
        Exps m;
        m.e[VQ] = static_cast<int16_t>(arm(lam, box) + 1);
        m.e[VT] = static_cast<int16_t>(-leg(mu, box));
        out.add_term(m, Rat(1));
    }
    return out;
}

/// The same sum assembled from whole-diagram characters.
inline Poly mixed_e_sum_chars(const Partition& lam, const Partition& mu) {
    Poly bl = b_sum(lam);
    Poly bm = bar(b_sum(mu));
    Poly q = Poly::var(VQ), t = Poly::var(VT);
    return bm + q * t * bl - (Poly(1) - q) * (Poly(1) - t) * bl * bm;
}

inline Poly mixed_e_sum(const Partition& lam, const Partition& mu) {
    return mixed_e_sum_chars(lam, mu);
}

/// Product of factors (1 - u w) over a multiset of (q,t)-monomial weights w.
struct NekrasovFactorization {
    std::vector<Poly> weights;

    long factor_count() const { return static_cast<long>(weights.size()); }

    /// The product with u substituted; the value may be any polynomial,
    /// including Laurent monomials and 1.
    Poly specialized(const Poly& u) const {
        Poly out(1);
        for (const Poly& w : weights) out = out * (Poly(1) - u * w);
        return out;
    }

    /// The product with u left symbolic.
    Poly expanded() const { return specialized(Poly::var(VU)); }
};

/// Weights collected from boxes whose mixed hook is divisible by r, arm side
/// from one diagram and leg side from the other.
inline NekrasovFactorization nekrasov_factor(const Partition& lam, const Partition& mu, long r) {
    NekrasovFactorization nf;
    for (const Box& box : lam.boxes()) {
        if (imod(mixed_hook(mu, lam, box), r) != 0) continue;
        Exps m;
        m.e[VQ] = static_cast<int16_t>(-arm(mu, box));
        m.e[VT] = static_cast<int16_t>(leg(lam, box) + 1);
        nf.weights.push_back(Poly::monomial(m, Rat(1)));
    }
    for (const Box& box : mu.boxes()) {
        if (imod(mixed_hook(lam, mu, box), r) != 0) continue;
        Exps m;
        m.e[VQ] = static_cast<int16_t>(arm(lam, box) + 1);
        m.e[VT] = static_cast<int16_t>(-leg(mu, box));
        nf.weights.push_back(Poly::monomial(m, Rat(1)));
    }
    return nf;
}

/// The same weights read off the diagonal color part of the mixed character
/// sum; multiplicities must come out as nonnegative integers.
inline NekrasovFactorization nekrasov_via_omega(const Partition& lam, const Partition& mu, long r) {
    NekrasovFactorization nf;
    Poly invariant = color_part(mixed_e_sum(lam, mu), r, 0);
    for (const auto& [m, c] : invariant.terms()) {
        check(c.get_den() == 1 && c > 0, "mixed character multiplicities are not positive integers");
        long mult = c.get_num().get_si();
        for (long k = 0; k < mult; ++k) nf.weights.push_back(Poly::monomial(m, Rat(1)));
    }
    return nf;
}

}  // namespace wreath
