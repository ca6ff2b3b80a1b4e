#include <catch2/catch_amalgamated.hpp>

#include "wreath/nekrasov.hpp"
#include "wreath/wreath_ops.hpp"

using namespace wreath;

namespace {

const ExactBackend bk;

RatFunc rf(long c) { return RatFunc(Poly(c)); }
RatFunc rfq() { return rf_var(VQ); }
RatFunc rft() { return rf_var(VT); }

bool sym_equal(const SymFunc<RatFunc>& a, const SymFunc<RatFunc>& b) {
    return sym_add(bk, a, sym_scale(bk, b, rf(-1))).is_zero();
}

/// One-color Schur function as a rank-1 colored function.
SymFunc<RatFunc> s1(std::initializer_list<long> parts) {
    return schur_multi(bk, MultiPartition{Partition(parts)});
}

SymFunc<RatFunc> combine(std::vector<std::pair<SymFunc<RatFunc>, RatFunc>> parts) {
    SymFunc<RatFunc> out(parts.empty() ? 1 : parts[0].first.r);
    for (auto& [f, c] : parts) out = sym_add(bk, out, sym_scale(bk, f, c));
    return out;
}

}  // namespace

TEST_CASE("classical table at two boxes") {
    WreathBasisTable tab = solve_basis(1, Partition{}, 2);
    REQUIRE(tab.labels.size() == 2);
    CHECK(sym_equal(tab.at(Partition{2}), combine({{s1({2}), rf(1)}, {s1({1, 1}), rfq()}})));
    CHECK(sym_equal(tab.at(Partition{1, 1}), combine({{s1({2}), rf(1)}, {s1({1, 1}), rft()}})));
}

TEST_CASE("classical table at three boxes") {
    WreathBasisTable tab = solve_basis(1, Partition{}, 3);
    RatFunc q = rfq(), t = rft();
    CHECK(sym_equal(tab.at(Partition{3}),
                    combine({{s1({3}), rf(1)}, {s1({2, 1}), q + q * q}, {s1({1, 1, 1}), q.pow(3)}})));
    CHECK(sym_equal(tab.at(Partition{2, 1}),
                    combine({{s1({3}), rf(1)}, {s1({2, 1}), q + t}, {s1({1, 1, 1}), q * t}})));
    CHECK(sym_equal(tab.at(Partition{1, 1, 1}),
                    combine({{s1({3}), rf(1)}, {s1({2, 1}), t + t * t}, {s1({1, 1, 1}), t.pow(3)}})));
}

TEST_CASE("triangularity re-verified by direct expansion") {
    struct Case {
        long r;
        Partition core;
        long n;
    };
    for (const Case& c : {Case{1, Partition{}, 2}, Case{1, Partition{}, 3}, Case{3, Partition{}, 1},
                          Case{3, Partition{}, 2}, Case{3, Partition{1}, 2}}) {
        WreathBasisTable tab = solve_basis(c.r, c.core, c.n);
        PlethysmMatrix up = one_minus_s_sigma(c.r, rfq(), -1);
        PlethysmMatrix down = one_minus_s_sigma(c.r, rft().pow(-1), -1);
        std::map<MultiPartition, Partition> full;
        for (std::size_t i = 0; i < tab.quotients.size(); ++i)
            full[tab.quotients[i]] = tab.labels[i];
        for (std::size_t i = 0; i < tab.labels.size(); ++i) {
            const Partition& lam = tab.labels[i];
            const SymFunc<RatFunc>& h = tab.at(lam);
            for (const auto& [idx, coeff] : h.terms) CHECK(mp_size(idx) == c.n);

            RatFunc at_one;
            for (const auto& [idx, coeff] : h.terms) at_one = at_one + coeff;
            CHECK(ratfunc_equal(at_one, rf(1)));

            for (auto& [idx, coeff] : powersum_to_schur(bk, apply_matrix_plethysm(bk, up, h)))
                CHECK(dominance_leq(lam, full.at(idx)));
            for (auto& [idx, coeff] : powersum_to_schur(bk, apply_matrix_plethysm(bk, down, h)))
                CHECK(dominance_leq(full.at(idx), lam));
        }
    }
}

TEST_CASE("orthogonality and hook-product norms at up to four boxes") {
    for (long n = 1; n <= 4; ++n) {
        WreathBasisTable tab = solve_basis(1, Partition{}, n);
        for (const Partition& lam : tab.labels) {
            for (const Partition& mu : tab.labels) {
                RatFunc pair = wreath_pairing(bk, dagger(tab.at(lam)), tab.at(mu));
                if (lam == mu) {
                    Poly norm = nekrasov_factor(lam, lam, 1).specialized(Poly(1));
                    CHECK(ratfunc_equal(pair, RatFunc(norm)));
                } else {
                    CHECK(pair.is_zero());
                }
            }
        }
    }
}

TEST_CASE("expansion in the wreath basis recovers coefficients") {
    WreathBasisTable tab = solve_basis(3, Partition{}, 2);
    RatFunc q = rfq(), t = rft();
    SymFunc<RatFunc> f = combine({{tab.at(Partition{6}), q - t},
                                  {tab.at(Partition{3, 3}), rf(3)},
                                  {tab.at(Partition{3, 1, 1, 1}), q * t.pow(-2)}});
    auto coords = h_expand(tab, f);
    REQUIRE(coords.size() == 3);
    CHECK(ratfunc_equal(coords.at(Partition{6}), q - t));
    CHECK(ratfunc_equal(coords.at(Partition{3, 3}), rf(3)));
    CHECK(ratfunc_equal(coords.at(Partition{3, 1, 1, 1}), q * t.pow(-2)));

    SymFunc<RatFunc> fd = dagger(f);
    auto dcoords = h_expand(tab, fd, true);
    REQUIRE(dcoords.size() == 3);
    CHECK(ratfunc_equal(dcoords.at(Partition{6}), (q - t).invert_vars({VQ, VT})));
}

TEST_CASE("nabla acts diagonally with box-character eigenvalues") {
    RatFunc q = rfq(), t = rft();

    WreathBasisTable one = solve_basis(1, Partition{}, 2);
    CHECK(ratfunc_equal(nabla_eigenvalue(1, Partition{}, Partition{2}), q));
    CHECK(ratfunc_equal(nabla_eigenvalue(1, Partition{}, Partition{1, 1}), t));
    CHECK(sym_equal(nabla_apply(one, one.at(Partition{2})),
                    sym_scale(bk, one.at(Partition{2}), q)));

    WreathBasisTable tab = solve_basis(3, Partition{}, 2);
    CHECK(ratfunc_equal(nabla_eigenvalue(3, Partition{}, Partition{6}), q.pow(3)));
    SymFunc<RatFunc> h = tab.at(Partition{6});
    CHECK(sym_equal(nabla_apply(tab, h), sym_scale(bk, h, q.pow(3))));
    CHECK(sym_equal(nabla_apply(tab, h, -1), sym_scale(bk, h, q.pow(-3))));
    SymFunc<RatFunc> hd = dagger(h);
    CHECK(sym_equal(nabla_apply(tab, hd, 1, true), sym_scale(bk, hd, q.pow(3))));

    SymFunc<RatFunc> mixed = sym_add(bk, h, tab.at(Partition{3, 2, 1}));
    SymFunc<RatFunc> expect =
        sym_add(bk, sym_scale(bk, h, q.pow(3)),
                sym_scale(bk, tab.at(Partition{3, 2, 1}),
                          nabla_eigenvalue(3, Partition{}, Partition{3, 2, 1})));
    CHECK(sym_equal(nabla_apply(tab, mixed), expect));
}
