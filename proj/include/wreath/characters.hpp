#pragma once

#include <map>
#include <mutex>

#include "wreath/partition.hpp"

namespace wreath {

/// z_mu = prod_i i^{m_i} m_i!  (order of the centralizer of cycle type mu).
inline Rat z_value(const Partition& mu) {
    Int z = 1;
    long run = 0, prev = 0;
    auto flush = [&]() {
        if (run > 0) z *= factorial(run);
        run = 0;
    };
    for (long p : mu.parts()) {
        if (p != prev) flush();
        prev = p;
        ++run;
        z *= p;
    }
    flush();
    return Rat(z);
}

/// Irreducible symmetric-group character chi^lambda(mu) by the border-strip
/// recursion on beta-numbers, memoized.
inline Int sn_character(const Partition& lam, const Partition& mu) {
    require(lam.size() == mu.size(), "character needs |lambda| == |mu|");
    using Key = std::pair<std::vector<long>, std::vector<long>>;
    static std::map<Key, Int> memo;
    static std::mutex memo_mutex;

    std::function<Int(std::vector<long>, std::vector<long>)> go =
        [&](std::vector<long> lparts, std::vector<long> rest) -> Int {
        if (lparts.empty()) return Int(1);
        Key key{lparts, rest};
        {
            std::lock_guard<std::mutex> lock(memo_mutex);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        long k = rest.back();  // smallest part; order of removal is irrelevant
        std::vector<long> rest2(rest.begin(), rest.end() - 1);
        long L = static_cast<long>(lparts.size());
        std::vector<long> betas(L);
        for (long i = 0; i < L; ++i) betas[i] = lparts[i] + (L - 1 - i);
        Int total = 0;
        for (long i = 0; i < L; ++i) {
            long target = betas[i] - k;
            if (target < 0) continue;
            bool clash = false;
            long height = 0;
            for (long j = 0; j < L; ++j) {
                if (j == i) continue;
                if (betas[j] == target) clash = true;
                if (betas[j] > target && betas[j] < betas[i]) ++height;
            }
            if (clash) continue;
            std::vector<long> nb = betas;
            nb[i] = target;
            std::sort(nb.begin(), nb.end(), std::greater<long>());
            std::vector<long> nl;
            for (long j = 0; j < L; ++j) {
                long part = nb[j] - (L - 1 - j);
                check(part >= 0, "beta numbers went negative");
                if (part > 0) nl.push_back(part);
            }
            Int sub = go(nl, rest2);
            total += (height % 2 == 0) ? sub : -sub;
        }
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(key, total);
        return total;
    };
    return go(lam.parts(), mu.parts());
}

/// Schur expansion in power sums: s_lambda = sum_mu chi^lambda(mu)/z_mu p_mu.
inline std::map<Partition, Rat> schur_in_powersums(const Partition& lam) {
    std::map<Partition, Rat> out;
    for (const Partition& mu : partitions_of(lam.size())) {
        Int chi = sn_character(lam, mu);
        if (chi != 0) out[mu] = Rat(chi) / z_value(mu);
    }
    return out;
}

/// Power sum in Schurs: p_mu = sum_lambda chi^lambda(mu) s_lambda.
inline std::map<Partition, Rat> powersum_in_schurs(const Partition& mu) {
    std::map<Partition, Rat> out;
    for (const Partition& lam : partitions_of(mu.size())) {
        Int chi = sn_character(lam, mu);
        if (chi != 0) out[lam] = Rat(chi);
    }
    return out;
}

}  // namespace wreath
