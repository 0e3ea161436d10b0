#pragma once

#include "socrep/core.hpp"

#include <functional>
#include <numeric>
#include <vector>

// Every tuple of positive integers with m entries, sum at most max_sum and gcd 1.
inline void for_each_normalized(int m, long max_sum, const std::function<void(const socrep::WeightTuple&)>& f) {
    std::vector<long> cur;
    std::function<void(long)> rec = [&](long used) {
        if (static_cast<int>(cur.size()) == m) {
            long g = 0;
            for (long v : cur) g = std::gcd(g, v);
            if (g == 1) f(socrep::WeightTuple(std::vector<socrep::Integer>(cur.begin(), cur.end())));
            return;
        }
        const long left = m - static_cast<long>(cur.size()) - 1;
        for (long v = 1; used + v + left <= max_sum; ++v) {
            cur.push_back(v);
            rec(used + v);
            cur.pop_back();
        }
    };
    rec(0);
}
