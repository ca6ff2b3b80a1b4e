#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "wreath/core_quotient.hpp"

using namespace wreath;

namespace {

// Border-strip oracle, independent of the Maya-diagram implementation:
// repeatedly find mu inside lam with |lam| - |mu| = r such that lam/mu is a
// connected ribbon (no 2x2 square), remove it, and return the final shape.
bool is_ribbon(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) return false;
    std::vector<Box> cells;
    for (const Box& box : lam.boxes())
        if (!mu.contains_box(box)) cells.push_back(box);
    if (cells.empty()) return false;
    std::set<std::pair<long, long>> cs;
    for (const Box& b : cells) cs.insert({b.a, b.b});
    for (const Box& b : cells)
        if (cs.count({b.a + 1, b.b}) && cs.count({b.a, b.b + 1}) && cs.count({b.a + 1, b.b + 1}))
            return false;
    // connectivity by flood fill
    std::set<std::pair<long, long>> seen;
    std::vector<std::pair<long, long>> stack = {*cs.begin()};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (!cs.count({a, b}) || seen.count({a, b})) continue;
        seen.insert({a, b});
        stack.push_back({a + 1, b});
        stack.push_back({a - 1, b});
        stack.push_back({a, b + 1});
        stack.push_back({a, b - 1});
    }
    return seen.size() == cs.size();
}

std::vector<Partition> sub_partitions_of_size(const Partition& lam, long target) {
    std::vector<Partition> out;
    for (const Partition& mu : partitions_of(target))
        if (lam.contains(mu)) out.push_back(mu);
    return out;
}

Partition strip_to_core(Partition lam, long r) {
    bool removed = true;
    while (removed && lam.size() >= r) {
        removed = false;
        for (const Partition& mu : sub_partitions_of_size(lam, lam.size() - r)) {
            if (is_ribbon(lam, mu)) {
                lam = mu;
                removed = true;
                break;
            }
        }
    }
    return lam;
}

}  // namespace

TEST_CASE("arm, leg and hooks match hand values") {
    Partition lam{6, 4, 1};
    CHECK(arm_leg(lam, Box{0, 0}) == std::pair<long, long>{5, 2});
    CHECK(mixed_hook(lam, lam, Box{0, 0}) == 8);
    CHECK(mixed_hook(Partition{3}, Partition{1, 1, 1}, Box{0, 0}) == 5);
    std::multiset<long> hooks;
    for (const Box& box : lam.boxes()) hooks.insert(hook(lam, box));
    CHECK(hooks == std::multiset<long>{8, 6, 5, 5, 4, 3, 2, 2, 1, 1, 1});
    CHECK(hook_multiples_count(lam, 3) == 2);
    // generalized arm/leg go negative outside the diagram
    CHECK(arm(Partition{1}, Box{2, 0}) == -2);
    CHECK(leg(Partition{1}, Box{0, 2}) == -2);
}

TEST_CASE("transpose and dominance behave") {
    Partition lam{6, 4, 1};
    CHECK(lam.transpose() == Partition{3, 2, 2, 2, 1, 1});
    CHECK(lam.transpose().transpose() == lam);
    for (const Partition& a : partitions_of(6)) {
        CHECK(dominance_leq(a, Partition{6}));
        CHECK(dominance_leq(Partition{1, 1, 1, 1, 1, 1}, a));
        CHECK(dominance_leq(a, a));
        for (const Partition& b : partitions_of(6)) {
            bool ab = dominance_leq(a, b);
            CHECK(ab == dominance_leq(b.transpose(), a.transpose()));
            if (ab && dominance_leq(b, a)) CHECK(a == b);
        }
    }
}

TEST_CASE("partition counts") {
    long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n) CHECK(static_cast<long>(partitions_of(n).size()) == expected[n]);
    CHECK(multipartitions_of(2, 3).size() == 9);
    CHECK(multipartitions_of(4, 3).size() == 51);
}

TEST_CASE("maya diagram of the worked example and round trips") {
    Partition lam{6, 4, 1};
    MayaDiagram m = to_maya(lam);
    CHECK(m.blacks_nonneg() == std::set<long>{0, 2});
    CHECK(m.whites_neg() == std::set<long>{-6, -3});
    CHECK(m.charge() == 0);
    CHECK(from_maya(m) == lam);
    for (long n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n)) CHECK(from_maya(to_maya(p)) == p);
}

TEST_CASE("core and quotient of the worked example") {
    Partition lam{6, 4, 1};
    CoreQuotient cq = core_quotient(lam, 3);
    CHECK(cq.charges == std::vector<long>{-1, 0, 1});
    CHECK(cq.quotient == std::vector<Partition>{Partition{1, 1}, Partition{}, Partition{}});
    CHECK(cq.core == Partition{3, 1, 1});
    CHECK(cq.core.size() == 5);
    CHECK(cq.quotient_size() == 2);
    CHECK(from_core_quotient(cq.core, cq.quotient, 3) == lam);
}

TEST_CASE("core agrees with ribbon stripping and sizes balance") {
    for (long n = 0; n <= 10; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            for (long r = 1; r <= 5; ++r) {
                CoreQuotient cq = core_quotient(lam, r);
                CHECK(cq.core == strip_to_core(lam, r));
                CHECK(is_r_core(cq.core, r));
                CHECK(lam.size() == cq.core.size() + r * cq.quotient_size());
                CHECK(hook_multiples_count(lam, r) == cq.quotient_size());
                long csum = 0;
                for (long c : cq.charges) csum += c;
                CHECK(csum == 0);
                CHECK(from_core_quotient(cq.core, cq.quotient, r) == lam);
            }
        }
    }
}

TEST_CASE("enumerate_with_core lists each partition exactly once") {
    Partition core{1};
    for (long n : {0L, 1L, 2L}) {
        auto list = enumerate_with_core(core, 3, n);
        CHECK(list.size() == multipartitions_of(n, 3).size());
        std::set<Partition> distinct(list.begin(), list.end());
        CHECK(distinct.size() == list.size());
        for (const Partition& lam : list) {
            CoreQuotient cq = core_quotient(lam, 3);
            CHECK(cq.core == core);
            CHECK(cq.quotient_size() == n);
        }
    }
}

TEST_CASE("addable and removable boxes by color") {
    Partition lam{2, 1};
    for (long r = 1; r <= 4; ++r) {
        for (long i = 0; i < r; ++i) {
            AddableRemovable ar = addable_removable(lam, r, i);
            for (const Box& box : ar.addable) {
                CHECK_FALSE(lam.contains_box(box));
                CHECK(box.color(r) == i);
                std::vector<long> parts(lam.parts());
                if (box.b < lam.length())
                    parts[box.b] += 1;
                else
                    parts.push_back(1);
                Partition grown(parts);
                CHECK(grown.contains_box(box));
                auto back = addable_removable(grown, r, i);
                bool found = false;
                for (const Box& rem : back.removable) found |= (rem == box);
                CHECK(found);
            }
            for (const Box& box : ar.removable) {
                CHECK(lam.contains_box(box));
                CHECK(box.color(r) == i);
            }
        }
    }
    AddableRemovable ar0 = addable_removable(Partition{1}, 3, 0);
    CHECK(ar0.removable == std::vector<Box>{Box{0, 0}});
    CHECK(ar0.addable.empty());
}

TEST_CASE("partition parsing round trips") {
    CHECK(parse_partition("6,4,1") == Partition{6, 4, 1});
    CHECK(parse_partition("(6,4,1)") == Partition{6, 4, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("()") == Partition{});
    CHECK_THROWS_AS(parse_partition("1,2"), InvalidInput);
    CHECK_THROWS_AS(parse_partition("a,b"), InvalidInput);
}
