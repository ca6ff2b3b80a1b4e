#pragma once

#include "wreath/vertex.hpp"

namespace wreath {

/// Plethystic exponential of a scalar: exp(sum_j s(x^j)/j) truncated under
/// the caps.  Every term of s must have positive series weight.
inline Series omega_scalar(const SeriesCaps& caps, const RatFunc& s) {
    long bound = 0;
    for (int v = 0; v < kNumVars; ++v)
        if (caps.var_cap[v] >= 0) bound += caps.var_cap[v];
    if (caps.qt_total >= 0) bound += caps.qt_total;
    Series log_sum(caps);
    for (long j = 1; j <= bound; ++j) {
        Series term = series_from_ratfunc(caps, s.substitute_powers(j));
        if (term.is_zero()) break;
        log_sum += term * Rat(1, j);
    }
    return series_exp(log_sum);
}

/// T^d-coefficients of the graded trace of Omega[B] T[A]: for each degree
/// d <= cap_deg, the sum of diagonal matrix elements on the multi-Schur
/// basis of degree d.
inline std::map<long, RatFunc> trace_diagonal(long r, const ColoredAlphabet& a,
                                              const ColoredAlphabet& b, long cap_deg) {
    const ExactBackend bk;
    std::map<long, RatFunc> out;
    for (long d = 0; d <= cap_deg; ++d) {
        RatFunc acc;
        for (const MultiPartition& nu : multipartitions_of(d, r)) {
            SymFunc<RatFunc> snu = schur_multi(bk, nu);
            SymFunc<RatFunc> img = omega_multiply(bk, b, translation_apply(bk, a, snu), d);
            acc += hall_pairing(bk, snu, img);
        }
        out[d] = acc;
    }
    return out;
}

/// Product form of the same trace:
/// Omega[(T/(1-T)) (r + sum_j a_j b_j)]; the r summand is 1/(T;T)_inf^r.
inline Series trace_product(const SeriesCaps& caps, long r, const ColoredAlphabet& a,
                            const ColoredAlphabet& b) {
    RatFunc t_factor(Poly::var(VBT), Poly(Rat(1)) - Poly::var(VBT));
    return omega_scalar(caps, t_factor * (alphabet_dot(a, b) + RatFunc(Rat(r))));
}

/// Compares the diagonal sum against the product form as truncated series.
/// The T^d coefficient of the trace is exactly the degree-d diagonal block,
/// so the T cap in `caps` doubles as the degree cap.
inline bool trace_matches(const SeriesCaps& caps, long r, const ColoredAlphabet& a,
                          const ColoredAlphabet& b) {
    check(caps.var_cap[VBT] >= 0, "trace comparison needs a T cap");
    std::map<long, RatFunc> diag = trace_diagonal(r, a, b, caps.var_cap[VBT]);
    Series lhs(caps);
    for (const auto& [d, c] : diag) {
        Series td(caps, Poly::var(VBT, static_cast<int>(d)));
        lhs += td * series_from_ratfunc(caps, c);
    }
    return lhs == trace_product(caps, r, a, b);
}

}  // namespace wreath
