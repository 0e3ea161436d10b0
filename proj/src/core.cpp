#include "socrep/core.hpp"

#include "socrep/errors.hpp"

#include <algorithm>
#include <sstream>

namespace socrep {

WeightTuple::WeightTuple(std::vector<Integer> entries) : s_(std::move(entries)) {
    Integer g = 0;
    for (const auto& x : s_) {
        if (x < 0) throw InvalidInput("weight entries must be nonnegative");
        s_hat_ += x;
        if (x > 0) g = gcd(g, x);
    }
    normalized_ = (g == 1);
}

WeightTuple WeightTuple::from_user(std::vector<Integer> entries) {
    if (entries.empty()) throw InvalidInput("weight tuple is empty");
    for (const auto& x : entries) {
        if (x < 1) throw InvalidInput("weight entries must be >= 1, got " + to_string(x));
    }
    return WeightTuple(std::move(entries));
}

WeightTuple WeightTuple::from_strings(const std::vector<std::string>& entries) {
    std::vector<Integer> values;
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(parse_integer(e));
    return from_user(std::move(values));
}

WeightTuple WeightTuple::of(std::initializer_list<long long> entries) {
    std::vector<Integer> values;
    for (long long e : entries) values.emplace_back(e);
    return WeightTuple(std::move(values));
}

std::vector<Integer> WeightTuple::sorted_desc() const {
    auto v = s_;
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::string WeightTuple::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (i) os << ',';
        os << s_[i];
    }
    os << ')';
    return os.str();
}

Normalized normalize(const WeightTuple& w) {
    if (w.m() == 0) throw InvalidInput("weight tuple is empty");
    Integer g = 0;
    for (const auto& x : w.entries()) {
        if (x == 0) throw InvalidInput("weight tuple has a zero entry");
        g = gcd(g, x);
    }
    std::vector<Integer> reduced;
    reduced.reserve(w.m());
    for (const auto& x : w.entries()) reduced.push_back(x / g);
    return {WeightTuple(std::move(reduced)), g};
}

BitProfile omega(const Integer& r) {
    if (r < 0) throw InvalidInput("omega requires a nonnegative integer");
    BitProfile profile;
    if (r == 0) return profile;
    const auto top = static_cast<int>(boost::multiprecision::msb(r));
    for (int k = 0; k <= top; ++k) {
        if (boost::multiprecision::bit_test(r, k)) profile.omega.insert(k);
    }
    profile.delta = *profile.omega.begin();
    return profile;
}

int delta_or(const Integer& r, int zero_value) {
    auto low = lowest_bit(r);
    return low ? *low : zero_value;
}

namespace {

void require_normalized(const WeightTuple& w, const char* op) {
    if (w.m() == 0) throw InvalidInput(std::string(op) + ": empty tuple");
    if (!w.normalized()) throw InvalidInput(std::string(op) + ": tuple " + w.str() + " is not normalized");
}

void require_bivariate_or_more(const WeightTuple& w, const char* op) {
    if (w.m() < 2) throw InvalidInput(std::string(op) + ": need at least two entries");
}

}  // namespace

int lower_bound(const WeightTuple& w) {
    require_normalized(w, "lower_bound");
    require_bivariate_or_more(w, "lower_bound");
    return std::max(ceil_log2(w.s_hat()), static_cast<int>(w.m()) - 1);
}

int peeling_cost(const std::vector<Integer>& ordered) {
    Integer suffix = 0;
    for (const auto& x : ordered) suffix += x;
    int total = 0;
    for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
        if (ordered[i] > 0 && suffix > ordered[i]) total += ceil_log2(suffix / gcd(suffix, ordered[i]));
        suffix -= ordered[i];
    }
    return total;
}

PermutationBound upper_bound_perm(const WeightTuple& w) {
    require_normalized(w, "upper_bound_perm");
    require_bivariate_or_more(w, "upper_bound_perm");
    auto order = w.entries();
    std::sort(order.begin(), order.end());
    PermutationBound bound;
    if (w.m() <= 8) {
        bound.value = peeling_cost(order);
        while (std::next_permutation(order.begin(), order.end())) {
            bound.value = std::min(bound.value, peeling_cost(order));
        }
        return bound;
    }
    bound.exhaustive = false;
    bound.value = peeling_cost(order);
    auto try_swaps = [&](std::vector<Integer> base) {
        bound.value = std::min(bound.value, peeling_cost(base));
        for (std::size_t a = 0; a < base.size(); ++a) {
            for (std::size_t b = a + 1; b < base.size(); ++b) {
                if (base[a] == base[b]) continue;
                std::swap(base[a], base[b]);
                bound.value = std::min(bound.value, peeling_cost(base));
                std::swap(base[a], base[b]);
            }
        }
    };
    try_swaps(order);
    std::reverse(order.begin(), order.end());
    try_swaps(order);
    return bound;
}

std::vector<Integer> padded_entries(const WeightTuple& w) {
    auto entries = w.entries();
    const int l = ceil_log2(w.s_hat());
    Integer pad = pow2(l) - w.s_hat();
    if (pad > 0) entries.push_back(pad);
    return entries;
}

int upper_bound_common_one(const WeightTuple& w) {
    require_normalized(w, "upper_bound_common_one");
    int ones = 0;
    for (const auto& x : padded_entries(w)) ones += popcount(x);
    return ones - 1;
}

int upper_bound_power_two(const WeightTuple& w) {
    require_normalized(w, "upper_bound_power_two");
    const int l = ceil_log2(w.s_hat());
    int sum = 0;
    for (const auto& x : padded_entries(w)) sum += l - delta_or(x, l);
    return (sum + 1) / 2;
}

Bounds compute_bounds(const WeightTuple& w) {
    Bounds b;
    b.lower = lower_bound(w);
    auto perm = upper_bound_perm(w);
    b.upper_perm = perm.value;
    b.upper_perm_exhaustive = perm.exhaustive;
    b.upper_common_one = upper_bound_common_one(w);
    b.upper_power_two = upper_bound_power_two(w);
    return b;
}

}  // namespace socrep
