#pragma once

#include <map>
#include <vector>

#include "wreath/core_quotient.hpp"
#include "wreath/plethysm.hpp"
#include "wreath/symfunc.hpp"

namespace wreath {

inline constexpr long kSolverVersion = 1;

/// All wreath Macdonald polynomials H_lambda with a fixed r-core and quotient
/// size n, in colored power-sum coordinates with rational-function
/// coefficients.  Labels are full partitions of |core| + r*n.
struct WreathBasisTable {
    long r = 1;
    Partition core;
    long n = 0;
    std::vector<MultiPartition> quotients;  // multipartitions_of(n, r) order
    std::vector<Partition> labels;          // from_core_quotient images
    std::map<Partition, SymFunc<RatFunc>> h;

    const SymFunc<RatFunc>& at(const Partition& lam) const {
        auto it = h.find(lam);
        require(it != h.end(), "partition missing from basis table");
        return it->second;
    }
};

namespace detail {

/// Shared state for solving every H_lambda with the same core and degree.
/// Column rho holds the multi-Schur coordinates of s_rho[M X] where
/// M = inv(1 - q sigma^{-1}) (1 - t^{-1} sigma^{-1}); the triangularity
/// constraints on H_lambda[(1-q sigma^{-1})X] become a null space problem on
/// a submatrix of these.
struct HSolveContext {
    long r = 1;
    long n = 0;
    Partition core;
    std::vector<MultiPartition> quotients;
    std::vector<Partition> labels;
    std::vector<std::vector<char>> leq;  // leq[i][j]: labels[i] <= labels[j] in dominance
    PlethysmMatrix inv_a;
    PlethysmMatrix shift;
    ExactBackend bk;

    HSolveContext(long r_, Partition core_, long n_)
        : r(r_),
          n(n_),
          core(std::move(core_)),
          quotients(multipartitions_of(n_, r_)),
          inv_a(inv_one_minus_s_sigma(r_, rf_var(VQ), -1)),
          shift(inv_a * one_minus_s_sigma(r_, rf_var(VT).pow(-1), -1)) {
        require(is_r_core(core, r), "core argument is not an r-core");
        labels.reserve(quotients.size());
        for (const MultiPartition& q : quotients) labels.push_back(from_core_quotient(core, q, r));
        for (long i = 0; i < static_cast<long>(quotients.size()); ++i) index_[quotients[i]] = i;
        long m = static_cast<long>(labels.size());
        leq.assign(m, std::vector<char>(m, 0));
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j) leq[i][j] = dominance_leq(labels[i], labels[j]) ? 1 : 0;
        columns_.resize(labels.size());
        have_column_.assign(labels.size(), 0);
    }

    const std::map<long, RatFunc>& column(long rho) {
        if (!have_column_[rho]) {
            SymFunc<RatFunc> img =
                apply_matrix_plethysm(bk, shift, schur_multi(bk, quotients[rho]));
            std::map<long, RatFunc> col;
            for (auto& [idx, c] : powersum_to_schur(bk, img))
                if (!c.is_zero()) col[index_of(idx)] = std::move(c);
            columns_[rho] = std::move(col);
            have_column_[rho] = 1;
        }
        return columns_[rho];
    }

    long index_of(const MultiPartition& mp) const {
        auto it = index_.find(mp);
        require(it != index_.end(), "unknown multipartition index");
        return it->second;
    }

private:
    std::map<MultiPartition, long> index_;
    std::vector<std::map<long, RatFunc>> columns_;
    std::vector<char> have_column_;
};

/// Scales a row of constraint coefficients to primitive polynomials: divides
/// by the polynomial gcd of the entries, then by the rational content.  Row
/// scaling never changes the null space.
inline void strip_row(std::vector<Poly>& row, long from) {
    Poly g;
    for (long j = from; j < static_cast<long>(row.size()); ++j) {
        if (row[j].is_zero()) continue;
        g = g.is_zero() ? row[j] : poly_gcd(g, row[j]);
        if (g.is_constant()) break;
    }
    if (g.is_zero()) return;
    if (!g.is_constant())
        for (long j = from; j < static_cast<long>(row.size()); ++j)
            if (!row[j].is_zero()) row[j] = exact_div(row[j], g);

    mpz_class num(0), den(1);
    for (long j = from; j < static_cast<long>(row.size()); ++j)
        for (const auto& [e, c] : row[j].terms()) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        }
    Rat scale(den, num);
    scale.canonicalize();
    for (long j = from; j < static_cast<long>(row.size()); ++j) row[j] = row[j] * Poly(scale);
}

/// Elimination over exact polynomials, tailored to the one-dimensional null
/// space the solver expects.  Updates rows by cross-multiplication and
/// immediately strips each row back to primitive form, so entries stay close
/// to the size of the reduced answer instead of growing like full minors.
/// Rows and columns may both be permuted; pivots favor the sparsest entry.
/// Returns the null vector in the original column order.
inline std::vector<RatFunc> echelon_null_vector(std::vector<std::vector<Poly>> m, long cols) {
    long rows = static_cast<long>(m.size());
    std::vector<long> perm(cols);
    for (long j = 0; j < cols; ++j) perm[j] = j;
    for (long i = 0; i < rows; ++i) strip_row(m[i], 0);

    long rank = 0;
    for (long k = 0; k < rows && k < cols; ++k) {
        long pi = -1, pj = -1;
        long best = -1;
        for (long i = k; i < rows; ++i)
            for (long j = k; j < cols; ++j) {
                if (m[i][j].is_zero()) continue;
                long tc = m[i][j].term_count();
                if (best < 0 || tc < best) best = tc, pi = i, pj = j;
            }
        if (pi < 0) break;
        std::swap(m[k], m[pi]);
        if (pj != k) {
            for (long i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);
            std::swap(perm[k], perm[pj]);
        }
        for (long i = k + 1; i < rows; ++i) {
            if (m[i][k].is_zero()) continue;
            for (long j = k + 1; j < cols; ++j)
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
            m[i][k] = Poly();
            strip_row(m[i], k + 1);
        }
        rank = k + 1;
    }
    check(rank == cols - 1, "triangularity system does not have a one-dimensional solution");

    std::vector<RatFunc> x(cols);
    x[cols - 1] = RatFunc(Poly(1));
    for (long k = rank - 1; k >= 0; --k) {
        RatFunc s;
        for (long j = k + 1; j < cols; ++j)
            if (!m[k][j].is_zero()) s = s + RatFunc(m[k][j]) * x[j];
        x[k] = -s / RatFunc(m[k][k]);
    }
    std::vector<RatFunc> g(cols);
    for (long j = 0; j < cols; ++j) g[perm[j]] = x[j];
    return g;
}

/// Solves for a single H_lambda inside a shared context.
inline SymFunc<RatFunc> solve_h_in(HSolveContext& cx, long lam_idx) {
    long m = static_cast<long>(cx.labels.size());
    std::vector<long> up;      // rho with labels[rho] >= lambda: allowed support
    std::vector<long> banned;  // tau with not labels[tau] <= lambda: must vanish
    for (long i = 0; i < m; ++i) {
        if (cx.leq[lam_idx][i]) up.push_back(i);
        if (!cx.leq[i][lam_idx]) banned.push_back(i);
    }

    std::vector<RatFunc> g;
    if (up.size() == 1) {
        g.assign(1, RatFunc(Poly(1)));
    } else {
        std::vector<std::vector<RatFunc>> rf(banned.size(),
                                             std::vector<RatFunc>(up.size()));
        for (std::size_t j = 0; j < up.size(); ++j) {
            const std::map<long, RatFunc>& col = cx.column(up[j]);
            for (std::size_t i = 0; i < banned.size(); ++i) {
                auto it = col.find(banned[i]);
                if (it != col.end()) rf[i][j] = it->second;
            }
        }
        std::vector<std::vector<Poly>> sys(banned.size(), std::vector<Poly>(up.size()));
        for (std::size_t i = 0; i < banned.size(); ++i) {
            Poly lcm(1);
            for (const RatFunc& c : rf[i])
                if (!c.is_zero()) lcm = exact_div(lcm * c.den(), poly_gcd(lcm, c.den()));
            for (std::size_t j = 0; j < up.size(); ++j)
                if (!rf[i][j].is_zero())
                    sys[i][j] = rf[i][j].num() * exact_div(lcm, rf[i][j].den());
        }
        g = echelon_null_vector(std::move(sys), static_cast<long>(up.size()));
    }

    SymFunc<RatFunc> g1(cx.r);
    for (std::size_t j = 0; j < up.size(); ++j) {
        if (g[j].is_zero()) continue;
        g1 = sym_add(cx.bk, g1, sym_scale(cx.bk, schur_multi(cx.bk, cx.quotients[up[j]]), g[j]));
    }
    SymFunc<RatFunc> h = apply_matrix_plethysm(cx.bk, cx.inv_a, g1);

    // Normalize by the evaluation at the one-point alphabet: every colored
    // power sum goes to 1, so the value is the plain sum of coefficients.
    RatFunc total;
    for (const auto& [idx, c] : h.terms) {
        check(mp_size(idx) == cx.n, "solver produced an inhomogeneous polynomial");
        total = total + c;
    }
    check(!total.is_zero(), "solver normalization failed: H[1] = 0");
    for (auto& [idx, c] : h.terms) c = c / total;
    return h;
}

}  // namespace detail

/// Wreath Macdonald polynomial for the partition with the given r-core and
/// r-quotient, normalized by H[1] = 1.
inline SymFunc<RatFunc> solve_h(long r, const Partition& core, const MultiPartition& quot) {
    detail::HSolveContext cx(r, core, mp_size(quot));
    return detail::solve_h_in(cx, cx.index_of(quot));
}

/// Solves the full degree-n table over a fixed core.
inline WreathBasisTable solve_basis(long r, const Partition& core, long n) {
    detail::HSolveContext cx(r, core, n);
    WreathBasisTable tab;
    tab.r = r;
    tab.core = core;
    tab.n = n;
    tab.quotients = cx.quotients;
    tab.labels = cx.labels;
    for (long i = 0; i < static_cast<long>(cx.labels.size()); ++i)
        tab.h[cx.labels[i]] = detail::solve_h_in(cx, i);
    return tab;
}

}  // namespace wreath
