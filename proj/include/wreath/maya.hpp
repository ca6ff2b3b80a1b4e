#pragma once

#include <set>

#include "wreath/partition.hpp"

namespace wreath {

/// Maya diagram: a two-coloring of Z that agrees with the vacuum (black on
/// n < 0, white on n >= 0) outside a finite window.  Stored as the finite
/// deviation sets from the vacuum.
///
/// The bijection with partitions at charge 0 puts the white beads at
/// positions  { i - 1 - lambda_i : i >= 1 },  so for lambda = (6,4,1) the
/// black beads are {2, 0} together with all of {-1,-2,-4,-5} u {n <= -7}.
class MayaDiagram {
public:
    MayaDiagram() = default;
    MayaDiagram(std::set<long> blacks_nonneg, std::set<long> whites_neg)
        : blacks_nonneg_(std::move(blacks_nonneg)), whites_neg_(std::move(whites_neg)) {
        for (long n : blacks_nonneg_) require(n >= 0, "blacks_nonneg holds positions >= 0");
        for (long n : whites_neg_) require(n < 0, "whites_neg holds positions < 0");
    }

    const std::set<long>& blacks_nonneg() const { return blacks_nonneg_; }
    const std::set<long>& whites_neg() const { return whites_neg_; }

    bool is_black(long n) const {
        if (n >= 0) return blacks_nonneg_.count(n) > 0;
        return whites_neg_.count(n) == 0;
    }

    /// Charge: #(black beads at n >= 0) - #(white beads at n < 0).
    long charge() const {
        return static_cast<long>(blacks_nonneg_.size()) - static_cast<long>(whites_neg_.size());
    }

    /// Positions beyond which the diagram agrees with a shifted vacuum.
    long support_radius() const {
        long rad = 1;
        if (!blacks_nonneg_.empty()) rad = std::max(rad, *blacks_nonneg_.rbegin() + 1);
        if (!whites_neg_.empty()) rad = std::max(rad, -*whites_neg_.begin() + 1);
        return rad;
    }

    /// The diagram n -> m(n + c); shifting by the charge recenters to 0.
    MayaDiagram shifted(long c) const {
        std::set<long> blk, wht;
        long rad = support_radius() + std::abs(c) + 1;
        for (long n = -rad; n <= rad; ++n) {
            bool black = is_black(n + c);
            if (n >= 0 && black) blk.insert(n);
            if (n < 0 && !black) wht.insert(n);
        }
        return MayaDiagram(std::move(blk), std::move(wht));
    }

    bool operator==(const MayaDiagram&) const = default;

private:
    std::set<long> blacks_nonneg_;
    std::set<long> whites_neg_;
};

/// Partition -> charge-0 Maya diagram: white beads at i - 1 - lambda_i.
inline MayaDiagram to_maya(const Partition& lam) {
    std::set<long> blk, wht;
    long len = lam.length();
    std::set<long> white_set;
    for (long i = 1; i <= len; ++i) white_set.insert(i - 1 - lam.part(i));
    for (long w : white_set)
        if (w < 0) wht.insert(w);
    for (long n = 0; n < len; ++n)
        if (!white_set.count(n)) blk.insert(n);
    return MayaDiagram(std::move(blk), std::move(wht));
}

/// Charge-0 Maya diagram -> partition: if the white positions in increasing
/// order are w_1 < w_2 < ..., then lambda_i = i - 1 - w_i.
inline Partition from_maya(const MayaDiagram& m) {
    require(m.charge() == 0, "from_maya wants a charge-0 diagram");
    std::vector<long> parts;
    long rad = m.support_radius();
    long i = 0;
    for (long n = -rad; n <= rad; ++n) {
        if (!m.is_black(n)) {
            ++i;
            long lam_i = i - 1 - n;
            if (lam_i <= 0) break;  // all later whites give zero parts
            parts.push_back(lam_i);
        }
    }
    return Partition(std::move(parts));
}

}  // namespace wreath
