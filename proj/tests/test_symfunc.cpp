#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "wreath/operators.hpp"

using namespace wreath;

namespace {

const ExactBackend bk;

RatFunc rf(long n) { return RatFunc(Rat(n)); }

SymFunc<RatFunc> random_symfunc(long r, long maxdeg, std::mt19937_64& rng) {
    SymFunc<RatFunc> f(r);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (long d = 0; d <= maxdeg; ++d)
        for (const auto& mp : multipartitions_of(d, r)) {
            long c = coef(rng);
            if (c != 0) sym_add_term(bk, f, mp, rf(c));
        }
    return f;
}

}  // namespace

TEST_CASE("symmetric group characters") {
    CHECK(sn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(sn_character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(sn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(sn_character(Partition{2}, Partition{1, 1}) == 1);
    CHECK(sn_character(Partition{1, 1}, Partition{2}) == -1);
    CHECK(sn_character(Partition{}, Partition{}) == 1);
    CHECK(z_value(Partition{3, 1, 1}) == Rat(6));
    CHECK(z_value(Partition{2, 2, 1}) == Rat(8));

    // column orthogonality: sum_lam chi(lam,mu) chi(lam,nu) = delta * z_mu
    for (long n = 1; n <= 6; ++n) {
        auto cls = partitions_of(n);
        auto irr = partitions_of(n);
        for (const auto& mu : cls)
            for (const auto& nu : cls) {
                Int acc = 0;
                for (const auto& lam : irr) acc += sn_character(lam, mu) * sn_character(lam, nu);
                CHECK(Rat(acc) == (mu == nu ? z_value(mu) : Rat(0)));
            }
    }
}

TEST_CASE("schur expansions in power sums") {
    auto s2 = schur_in_powersums(Partition{2});
    CHECK(s2[Partition{2}] == Rat(1, 2));
    CHECK(s2[Partition{1, 1}] == Rat(1, 2));
    auto s11 = schur_in_powersums(Partition{1, 1});
    CHECK(s11[Partition{2}] == Rat(-1, 2));
    CHECK(s11[Partition{1, 1}] == Rat(1, 2));
    auto s21 = schur_in_powersums(Partition{2, 1});
    CHECK(s21[Partition{1, 1, 1}] == Rat(1, 3));
    CHECK(s21[Partition{3}] == Rat(-1, 3));
    CHECK(s21.count(Partition{2, 1}) == 0);
}

TEST_CASE("multi-schur basis is orthonormal under the Hall pairing") {
    for (long r = 1; r <= 3; ++r)
        for (long n = 0; n <= 3; ++n) {
            auto idx = multipartitions_of(n, r);
            for (const auto& mu : idx)
                for (const auto& nu : idx) {
                    RatFunc v = hall_pairing(bk, schur_multi(bk, mu), schur_multi(bk, nu));
                    CHECK(v == (mu == nu ? rf(1) : rf(0)));
                }
        }
}

TEST_CASE("powersum to schur coordinates round trip") {
    std::mt19937_64 rng(2024);
    for (long r = 1; r <= 3; ++r) {
        SymFunc<RatFunc> f = random_symfunc(r, 3, rng);
        auto coords = powersum_to_schur(bk, f);
        SymFunc<RatFunc> back = schur_to_powersum(bk, coords, r);
        CHECK(sym_add(bk, f, sym_scale(bk, back, rf(-1))).is_zero());
    }
}

TEST_CASE("inverse shift plethysm matches geometric expansion") {
    // p_1 of X^(0) / (1 - q sigma^-1) at r = 3
    auto m = inv_one_minus_s_sigma(3, rf_var(VQ), -1);
    auto got = apply_matrix_plethysm(bk, m, sym_p(bk, 3, 0, 1));
    RatFunc den = RatFunc(Rat(1)) - rf_var(VQ).pow(3);
    SymFunc<RatFunc> want(3);
    sym_add_term(bk, want, {Partition{1}, Partition{}, Partition{}}, rf(1) / den);
    sym_add_term(bk, want, {Partition{}, Partition{}, Partition{1}}, rf_var(VQ) / den);
    sym_add_term(bk, want, {Partition{}, Partition{1}, Partition{}}, rf_var(VQ).pow(2) / den);
    CHECK(sym_add(bk, got, sym_scale(bk, want, rf(-1))).is_zero());

    // p_2 picks up squared entries
    auto got2 = apply_matrix_plethysm(bk, m, sym_p(bk, 3, 0, 2));
    RatFunc den2 = RatFunc(Rat(1)) - rf_var(VQ).pow(6);
    auto it = got2.terms.find({Partition{}, Partition{}, Partition{2}});
    REQUIRE(it != got2.terms.end());
    CHECK(it->second == rf_var(VQ).pow(2) / den2);
}

TEST_CASE("shift matrices invert each other") {
    std::mt19937_64 rng(7);
    for (long r = 1; r <= 4; ++r)
        for (int dir : {-1, 1})
            for (Var v : {VQ, VT}) {
                auto m = one_minus_s_sigma(r, rf_var(v), dir);
                auto minv = inv_one_minus_s_sigma(r, rf_var(v), dir);
                auto prod = m * minv;
                for (long i = 0; i < r; ++i)
                    for (long j = 0; j < r; ++j)
                        CHECK(prod.at(i, j) == (i == j ? rf(1) : rf(0)));
                SymFunc<RatFunc> f = random_symfunc(r, 2, rng);
                auto round = apply_matrix_plethysm(bk, m, apply_matrix_plethysm(bk, minv, f));
                CHECK(sym_add(bk, round, sym_scale(bk, f, rf(-1))).is_zero());
            }
}

TEST_CASE("matrix plethysm composes contravariantly") {
    std::mt19937_64 rng(11);
    long r = 3;
    auto a = pairing_twist_matrix(r);
    auto b = inv_one_minus_s_sigma(r, rf_var(VT), 1);
    SymFunc<RatFunc> f = random_symfunc(r, 2, rng);
    auto lhs = apply_matrix_plethysm(bk, a, apply_matrix_plethysm(bk, b, f));
    auto rhs = apply_matrix_plethysm(bk, b * a, f);
    CHECK(sym_add(bk, lhs, sym_scale(bk, rhs, rf(-1))).is_zero());
}

TEST_CASE("omega of a single color alphabet") {
    auto om = omega_of_alphabet(bk, alphabet_unit(1, 0), 2);
    SymFunc<RatFunc> want(1);
    sym_add_term(bk, want, {Partition{}}, rf(1));
    sym_add_term(bk, want, {Partition{1}}, rf(1));
    sym_add_term(bk, want, {Partition{2}}, RatFunc(Rat(1, 2)));
    sym_add_term(bk, want, {Partition{1, 1}}, RatFunc(Rat(1, 2)));
    CHECK(sym_add(bk, om, sym_scale(bk, want, rf(-1))).is_zero());
}

TEST_CASE("omega equals the sum of complete homogeneous pieces") {
    ColoredAlphabet a(3);
    a[0] = rf(1) - rf_var(VU) * rf_var(VQ);
    a[1] = rf_var(VT).pow(-1);
    a[2] = rf_var(VQ) / (rf(1) - rf_var(VT));
    long cap = 4;
    auto om = omega_of_alphabet(bk, a, cap);
    SymFunc<RatFunc> hsum(3);
    for (long n = 0; n <= cap; ++n) hsum = sym_add(bk, hsum, hn_of_alphabet(bk, a, n));
    CHECK(sym_add(bk, om, sym_scale(bk, hsum, rf(-1))).is_zero());
}

TEST_CASE("h and e of the standard alphabet are schur rows and columns") {
    for (long n = 1; n <= 5; ++n) {
        auto h = hn_of_alphabet(bk, alphabet_unit(1, 0), n);
        auto e = en_of_alphabet(bk, alphabet_unit(1, 0), n);
        auto hs = schur_multi(bk, {Partition{n}});
        auto es = schur_multi(bk, {Partition(std::vector<long>(n, 1))});
        CHECK(sym_add(bk, h, sym_scale(bk, hs, rf(-1))).is_zero());
        CHECK(sym_add(bk, e, sym_scale(bk, es, rf(-1))).is_zero());
    }
}

TEST_CASE("translation by a constant alphabet") {
    // shift p_2 by the rank-one alphabet 1 - u q t
    ColoredAlphabet a{rf(1) - rf_var(VU) * rf_var(VQ) * rf_var(VT)};
    auto got = translation_apply(bk, a, sym_p(bk, 1, 0, 2));
    SymFunc<RatFunc> want(1);
    sym_add_term(bk, want, {Partition{2}}, rf(1));
    sym_add_term(bk, want, {Partition{}},
                 rf(1) - (rf_var(VU) * rf_var(VQ) * rf_var(VT)).pow(2));
    CHECK(sym_add(bk, got, sym_scale(bk, want, rf(-1))).is_zero());

    // translation is a ring map: check on a product
    auto p11 = sym_mul(bk, sym_p(bk, 1, 0, 1), sym_p(bk, 1, 0, 1));
    auto tr = translation_apply(bk, a, p11);
    auto tr1 = translation_apply(bk, a, sym_p(bk, 1, 0, 1));
    auto sq = sym_mul(bk, tr1, tr1);
    CHECK(sym_add(bk, tr, sym_scale(bk, sq, rf(-1))).is_zero());
}

TEST_CASE("skew is adjoint to multiplication under the Hall pairing") {
    std::mt19937_64 rng(23);
    for (long r : {1L, 3L}) {
        SymFunc<RatFunc> f = random_symfunc(r, 2, rng);
        SymFunc<RatFunc> g = random_symfunc(r, 4, rng);
        SymFunc<RatFunc> h = random_symfunc(r, 2, rng);
        RatFunc lhs = hall_pairing(bk, sym_mul(bk, f, h), g);
        RatFunc rhs = hall_pairing(bk, h, skew_by(bk, f, g));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("deformed pairing at rank one") {
    SymFunc<RatFunc> p1 = sym_p(bk, 1, 0, 1);
    RatFunc got = wreath_pairing(bk, p1, p1);
    RatFunc want = (rf(1) - rf_var(VQ)) * (rf_var(VT) - rf(1));
    CHECK(got == want);
}

TEST_CASE("omega multiplication is adjoint to twisted translation") {
    // <Omega[X^(i)] f, g>' = <f, T[(1 - q sigma)(t sigma^-1 - 1) X^(-i)] g>'
    std::mt19937_64 rng(31);
    long r = 3;
    PlethysmMatrix twist =
        one_minus_s_sigma(r, rf_var(VQ), 1) *
        (pleth_sigma_power(r, -1).scaled(rf_var(VT)) - pleth_identity(r));
    for (long i = 0; i < r; ++i) {
        SymFunc<RatFunc> f = random_symfunc(r, 2, rng);
        SymFunc<RatFunc> g = random_symfunc(r, 3, rng);
        long cap = g.max_degree();
        RatFunc lhs = wreath_pairing(bk, omega_multiply(bk, alphabet_unit(r, i), f, cap), g);
        ColoredAlphabet ta = alphabet_apply(twist, alphabet_unit(r, -i));
        RatFunc rhs = wreath_pairing(bk, f, translation_apply(bk, ta, g));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("point backend agrees with exact evaluation") {
    std::mt19937_64 rng(47);
    EvalPoint pt = random_eval_point(5);
    PointBackend pb{pt};
    SymFunc<RatFunc> f = random_symfunc(3, 2, rng);
    SymFunc<RatFunc> g = random_symfunc(3, 2, rng);
    // scale by something nontrivial in q, t, u
    f = sym_scale(bk, f, rf_var(VQ) / (rf(1) - rf_var(VT) * rf_var(VU)));
    RatFunc exact = wreath_pairing(bk, f, g);
    Rat pointwise = wreath_pairing(pb, sym_convert(pb, f), sym_convert(pb, g));
    CHECK(exact.evaluate(pt.as_values()) == pointwise);
}

TEST_CASE("series backend truncates omega consistently") {
    SeriesCaps caps;
    caps.var_cap[VQ] = 3;
    caps.var_cap[VT] = 3;
    SeriesBackend sb{caps};
    ColoredAlphabet a(2);
    a[0] = rf_var(VQ) / (rf(1) - rf_var(VQ));
    a[1] = rf_var(VT);
    auto om = omega_of_alphabet(sb, a, 3);
    auto exact = omega_of_alphabet(bk, a, 3);
    for (const auto& [mp, c] : exact.terms) {
        auto it = om.terms.find(mp);
        Series want = sb.inject(c);
        if (it == om.terms.end()) {
            CHECK(want.is_zero());
        } else {
            CHECK((it->second - want).is_zero());
        }
    }
}
