#pragma once

#include <functional>

#include "wreath/maya.hpp"

namespace wreath {

/// r-core plus r-quotient data of a partition.
/// charges[i] is the charge of the i-th Maya subdiagram (positions congruent
/// to i mod r); they always sum to 0.
struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;  // size r
    std::vector<long> charges;        // size r

    long quotient_size() const {
        long s = 0;
        for (const Partition& p : quotient) s += p.size();
        return s;
    }
};

/// i-th Maya subdiagram: n -> m(i + n*r).
inline MayaDiagram maya_subdiagram(const MayaDiagram& m, long r, long i) {
    std::set<long> blk, wht;
    long rad = m.support_radius() / r + 2;
    for (long n = -rad; n <= rad; ++n) {
        bool black = m.is_black(i + n * r);
        if (n >= 0 && black) blk.insert(n);
        if (n < 0 && !black) wht.insert(n);
    }
    return MayaDiagram(std::move(blk), std::move(wht));
}

/// Decomposes lambda into its r-core and r-quotient via Maya subdiagrams:
/// the i-th quotient component reads off the i-th subdiagram recentered to
/// charge 0, and the core replaces each subdiagram by the pure vacuum of the
/// same charge (white exactly at n >= charge).
inline CoreQuotient core_quotient(const Partition& lam, long r) {
    require(r >= 1, "r must be >= 1");
    MayaDiagram m = to_maya(lam);
    CoreQuotient out;
    out.quotient.resize(r);
    out.charges.resize(r);
    std::vector<MayaDiagram> subs(r);
    for (long i = 0; i < r; ++i) {
        subs[i] = maya_subdiagram(m, r, i);
        out.charges[i] = subs[i].charge();
        out.quotient[i] = from_maya(subs[i].shifted(out.charges[i]));
    }
    // Reassemble the core diagram from charge-shifted vacua.
    long rad = m.support_radius() + r * 2;
    std::set<long> blk, wht;
    for (long n = -rad; n <= rad; ++n) {
        long i = imod(n, r);
        long sub = (n - i) / r;
        bool black = sub < out.charges[i];  // vacuum shifted to charge c_i
        if (n >= 0 && black) blk.insert(n);
        if (n < 0 && !black) wht.insert(n);
    }
    out.core = from_maya(MayaDiagram(std::move(blk), std::move(wht)));
    return out;
}

/// True when lambda is its own r-core.
inline bool is_r_core(const Partition& lam, long r) {
    return hook_multiples_count(lam, r) == 0;
}

/// Inverse bijection: rebuilds lambda from an r-core and an r-quotient.
/// The core fixes the subdiagram charges; component i of the quotient is
/// planted into subdiagram i at that charge via m_i(n) = m_{mu_i}(n - c_i).
inline Partition from_core_quotient(const Partition& core, const std::vector<Partition>& quot,
                                    long r) {
    require(r >= 1, "r must be >= 1");
    require(static_cast<long>(quot.size()) == r, "quotient must have r components");
    require(is_r_core(core, r), "core argument is not an r-core");
    MayaDiagram mcore = to_maya(core);
    std::vector<long> charges(r);
    std::vector<MayaDiagram> parts(r);
    long rad = mcore.support_radius() + r;
    for (long i = 0; i < r; ++i) {
        charges[i] = maya_subdiagram(mcore, r, i).charge();
        parts[i] = to_maya(quot[i]).shifted(-charges[i]);
        rad = std::max(rad, r * (parts[i].support_radius() + 1));
    }
    std::set<long> blk, wht;
    for (long n = -rad; n <= rad; ++n) {
        long i = imod(n, r);
        long sub = (n - i) / r;
        bool black = parts[i].is_black(sub);
        if (n >= 0 && black) blk.insert(n);
        if (n < 0 && !black) wht.insert(n);
    }
    return from_maya(MayaDiagram(std::move(blk), std::move(wht)));
}

/// All partitions with the given r-core and |quotient| = n, ordered by the
/// graded lexicographic order on quotient tuples.
inline std::vector<Partition> enumerate_with_core(const Partition& core, long r, long n);

/// All r-tuples of partitions with total size n, in lexicographic order of
/// the size composition, then lexicographic in each component (largest part
/// first).
inline std::vector<std::vector<Partition>> multipartitions_of(long n, long r) {
    require(r >= 1 && n >= 0, "bad multipartition parameters");
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur(r);
    std::function<void(long, long)> rec = [&](long slot, long rest) {
        if (slot == r - 1) {
            for (const Partition& p : partitions_of(rest)) {
                cur[slot] = p;
                out.push_back(cur);
            }
            return;
        }
        for (long k = rest; k >= 0; --k) {
            for (const Partition& p : partitions_of(k)) {
                cur[slot] = p;
                rec(slot + 1, rest - k);
            }
        }
    };
    rec(0, n);
    return out;
}

inline std::vector<Partition> enumerate_with_core(const Partition& core, long r, long n) {
    std::vector<Partition> out;
    for (const auto& quot : multipartitions_of(n, r)) out.push_back(from_core_quotient(core, quot, r));
    return out;
}

}  // namespace wreath
