#include <catch2/catch_amalgamated.hpp>

#include "wreath/nekrasov.hpp"

using namespace wreath;

namespace {

Poly qt_monomial(long a, long b) {
    Exps m;
    m.e[VQ] = static_cast<int16_t>(a);
    m.e[VT] = static_cast<int16_t>(b);
    return Poly::monomial(m, Rat(1));
}

}  // namespace

TEST_CASE("b_sum and d_sum on small shapes") {
    CHECK(b_sum(Partition{2, 1}) == Poly(Rat(1)) + qt_monomial(1, 0) + qt_monomial(0, 1));
    CHECK(d_sum(Partition{}) == Poly(Rat(-1)));
    Poly d1 = d_sum(Partition{1});
    CHECK(d1 == qt_monomial(1, 1) - qt_monomial(1, 0) - qt_monomial(0, 1));
    CHECK(color_part(d1, 3, 0) == qt_monomial(1, 1));
    CHECK(color_part(d1, 3, 1) == -qt_monomial(0, 1));
    CHECK(color_part(d1, 3, 2) == -qt_monomial(1, 0));
}

TEST_CASE("color parts decompose and obey the shift rules") {
    for (const Partition& lam : partitions_of(5)) {
        Poly d = d_sum(lam);
        for (long r : {2L, 3L, 4L}) {
            Poly back;
            for (long i = 0; i < r; ++i) back += color_part(d, r, i);
            CHECK(back == d);
            Poly q = Poly::var(VQ), t = Poly::var(VT);
            for (long i = 0; i < r; ++i) {
                CHECK(color_part(q * d, r, imod(i - 1, r)) == q * color_part(d, r, i));
                CHECK(color_part(t * d, r, imod(i + 1, r)) == t * color_part(d, r, i));
                CHECK(color_part(bar(d), r, i) == bar(color_part(d, r, imod(-i, r))));
            }
        }
    }
}

TEST_CASE("d_sum decomposes over addable and removable boxes") {
    Poly qt = qt_monomial(1, 1);
    for (long n = 0; n <= 6; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            for (long r : {1L, 2L, 3L}) {
                for (long i = 0; i < r; ++i) {
                    AddableRemovable ar = addable_removable(lam, r, i);
                    Poly expect;
                    for (const Box& box : ar.removable) expect += qt * box_weight(box);
                    for (const Box& box : ar.addable) expect -= box_weight(box);
                    CHECK(color_part(d_sum(lam), r, i) == expect);
                }
            }
        }
    }
}

TEST_CASE("mixed character sum: box route equals character route") {
    CHECK(mixed_e_sum(Partition{1}, Partition{1}) == qt_monomial(1, 0) + qt_monomial(0, 1));
    for (long nl = 0; nl <= 4; ++nl)
        for (long nm = 0; nm <= 4; ++nm)
            for (const Partition& lam : partitions_of(nl))
                for (const Partition& mu : partitions_of(nm))
                    CHECK(mixed_e_sum_boxes(lam, mu) == mixed_e_sum_chars(lam, mu));
}

TEST_CASE("nekrasov factor of the worked example") {
    NekrasovFactorization nf = nekrasov_factor(Partition{3}, Partition{3}, 3);
    Poly expect = (Poly(Rat(1)) - Poly::var(VU) * qt_monomial(-2, 1)) *
                  (Poly(Rat(1)) - Poly::var(VU) * qt_monomial(3, 0));
    CHECK(nf.expanded() == expect);
    CHECK(nf.factor_count() == 2);
}

TEST_CASE("nekrasov box route equals omega route") {
    for (long nl = 0; nl <= 4; ++nl) {
        for (long nm = 0; nm <= 4; ++nm) {
            for (const Partition& lam : partitions_of(nl)) {
                for (const Partition& mu : partitions_of(nm)) {
                    for (long r : {1L, 2L, 3L}) {
                        Poly a = nekrasov_factor(lam, mu, r).expanded();
                        Poly b = nekrasov_via_omega(lam, mu, r).expanded();
                        CHECK(a == b);
                    }
                }
            }
        }
    }
}

TEST_CASE("nekrasov structural properties") {
    for (const Partition& lam : partitions_of(4)) {
        for (const Partition& mu : partitions_of(3)) {
            for (long r : {1L, 2L, 3L}) {
                NekrasovFactorization nf = nekrasov_factor(lam, mu, r);
                Poly p = nf.expanded();
                CHECK(p.substitute_value(VU, Rat(0)) == Poly(Rat(1)));
                if (nf.factor_count() > 0)
                    CHECK(p.degree_range(VU) == std::pair<int, int>{0, static_cast<int>(nf.factor_count())});
            }
        }
    }
    // an r-core paired with itself has no hook multiples, so N = 1
    NekrasovFactorization core_nf = nekrasov_factor(Partition{3, 1, 1}, Partition{3, 1, 1}, 3);
    CHECK(core_nf.factor_count() == 0);
    CHECK(core_nf.expanded() == Poly(Rat(1)));
}
