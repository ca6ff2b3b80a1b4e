#pragma once

#include <optional>
#include <random>
#include <vector>

#include "wreath/poly.hpp"

namespace wreath {

/// Rational assignment for q, t, u used by the probabilistic backend.
/// Every value is num/den with 2 <= |num|, 2 <= den, so no assigned value is
/// 0 or +-1 and no pure power of a single variable can vanish in 1 - q^a.
struct EvalPoint {
    Rat q, t, u;

    std::array<std::optional<Rat>, kNumVars> as_values() const {
        std::array<std::optional<Rat>, kNumVars> vals;
        vals[VQ] = q;
        vals[VT] = t;
        vals[VU] = u;
        return vals;
    }
    Rat value_of(int var) const {
        switch (var) {
            case VQ: return q;
            case VT: return t;
            case VU: return u;
            default: throw InvalidInput("EvalPoint carries only q, t, u");
        }
    }
};

/// Draws an evaluation point whose coordinates are distinct rationals of
/// height in [2, height] and which avoids the zero set of every polynomial in
/// `forbidden`.  Deterministic in `seed`; retries up to `max_tries` times.
inline EvalPoint random_eval_point(std::uint64_t seed, const std::vector<Poly>& forbidden = {},
                                   long height = 9, int max_tries = 64) {
    require(height >= 2, "eval point height must be >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> mag(2, height);
    std::uniform_int_distribution<int> coin(0, 1);
    auto draw = [&]() {
        while (true) {
            long num = mag(rng), den = mag(rng);
            Int g;
            mpz_gcd_ui(g.get_mpz_t(), Int(num).get_mpz_t(), static_cast<unsigned long>(den));
            if (g != 1) continue;
            Rat v(coin(rng) ? num : -num, den);
            v.canonicalize();
            return v;
        }
    };
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        EvalPoint pt{draw(), draw(), draw()};
        if (pt.q == pt.t || pt.q == pt.u || pt.t == pt.u) continue;
        bool ok = true;
        auto vals = pt.as_values();
        for (const Poly& f : forbidden) {
            if (sgn(f.evaluate(vals)) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) return pt;
    }
    throw DegeneratePoint("random_eval_point: retry budget exhausted");
}

}  // namespace wreath
