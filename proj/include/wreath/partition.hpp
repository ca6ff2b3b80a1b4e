#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <vector>

#include "wreath/base.hpp"

namespace wreath {

/// Box of a Young diagram in French convention: a = column index, b = row
/// index, both 0-based.  Box (a,b) lies in lambda iff a < lambda_{b+1}.
struct Box {
    long a = 0, b = 0;
    long content() const { return b - a; }
    long color(long r) const { return imod(b - a, r); }
    auto operator<=>(const Box&) const = default;
};

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            require(parts_[i] > 0, "partition parts must be positive");
            require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must weakly decrease");
        }
    }
    Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

    const std::vector<long>& parts() const { return parts_; }
    long length() const { return static_cast<long>(parts_.size()); }
    long size() const {
        long s = 0;
        for (long p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }
    /// Part by 1-based index; 0 beyond the length.
    long part(long i) const {
        require(i >= 1, "part index is 1-based");
        return i <= length() ? parts_[i - 1] : 0;
    }
    bool contains_box(const Box& box) const {
        return box.a >= 0 && box.b >= 0 && box.a < part(box.b + 1);
    }
    bool contains(const Partition& mu) const {
        for (long i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    Partition transpose() const {
        std::vector<long> tp;
        if (parts_.empty()) return Partition();
        tp.resize(parts_[0]);
        for (long a = 0; a < parts_[0]; ++a)
            tp[a] = static_cast<long>(
                std::count_if(parts_.begin(), parts_.end(), [&](long p) { return p > a; }));
        return Partition(std::move(tp));
    }

    std::vector<Box> boxes() const {
        std::vector<Box> bs;
        for (long b = 0; b < length(); ++b)
            for (long a = 0; a < parts_[b]; ++a) bs.push_back(Box{a, b});
        return bs;
    }

    auto operator<=>(const Partition&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ",";
            os << parts_[i];
        }
        os << ")";
        return os.str();
    }

private:
    std::vector<long> parts_;
};

/// Generalized arm of a box relative to lambda: lambda_{b+1} - a - 1.
/// The box need not lie in lambda, so the value may be negative.
inline long arm(const Partition& lam, const Box& box) { return lam.part(box.b + 1) - box.a - 1; }

/// Generalized leg relative to lambda: (transpose lambda)_{a+1} - b - 1.
inline long leg(const Partition& lam, const Box& box) {
    long count = 0;
    for (long p : lam.parts())
        if (p > box.a) ++count;
    return count - box.b - 1;
}

inline std::pair<long, long> arm_leg(const Partition& lam, const Box& box) {
    return {arm(lam, box), leg(lam, box)};
}

/// Mixed hook h_{lambda,mu}(box) = arm_lambda(box) + leg_mu(box) + 1.
inline long mixed_hook(const Partition& lam, const Partition& mu, const Box& box) {
    return arm(lam, box) + leg(mu, box) + 1;
}

inline long hook(const Partition& lam, const Box& box) { return mixed_hook(lam, lam, box); }

/// Number of boxes of lambda whose ordinary hook length is divisible by r.
inline long hook_multiples_count(const Partition& lam, long r) {
    require(r >= 1, "r must be >= 1");
    long n = 0;
    for (const Box& box : lam.boxes())
        if (hook(lam, box) % r == 0) ++n;
    return n;
}

/// Dominance order on partitions of equal size: mu <= lam iff all prefix
/// sums of mu are <= those of lam.  Requires |mu| == |lam|.
inline bool dominance_leq(const Partition& mu, const Partition& lam) {
    require(mu.size() == lam.size(), "dominance compares equal sizes");
    long pm = 0, pl = 0;
    long n = std::max(mu.length(), lam.length());
    for (long i = 1; i <= n; ++i) {
        pm += mu.part(i);
        pl += lam.part(i);
        if (pm > pl) return false;
    }
    return true;
}

/// Boxes that can be added to / removed from lambda keeping a partition,
/// restricted to boxes of color i mod r.
struct AddableRemovable {
    std::vector<Box> addable;
    std::vector<Box> removable;
};

inline AddableRemovable addable_removable(const Partition& lam, long r, long color) {
    require(r >= 1 && color >= 0 && color < r, "bad color");
    AddableRemovable out;
    for (long b = 0; b <= lam.length(); ++b) {
        long row = lam.part(b + 1);
        Box cand{row, b};
        bool row_ok = (b == 0) || lam.part(b) > row;
        if (row_ok && cand.color(r) == color) out.addable.push_back(cand);
        if (row > 0) {
            Box last{row - 1, b};
            bool rem_ok = lam.part(b + 2) < row;
            if (rem_ok && last.color(r) == color) out.removable.push_back(last);
        }
    }
    return out;
}

/// All partitions of n, in descending lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(long n) {
    require(n >= 0, "partitions_of wants n >= 0");
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rest, long maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Parses "6,4,1" or "(6,4,1)" or "" / "()" / "0" for the empty partition.
inline Partition parse_partition(std::string s) {
    std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == '[' || c == ']' || c == ' '; });
    if (s.empty() || s == "0") return Partition();
    std::vector<long> parts;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            parts.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw InvalidInput("malformed partition: " + s);
        }
    }
    return Partition(parts);
}

}  // namespace wreath
