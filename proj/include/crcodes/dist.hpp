#pragma once

// Distance distributions and the q-ary MacWilliams transform, in exact
// rational arithmetic.

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "crcodes/codeset.hpp"

namespace crcodes {

using Rat = boost::rational<long long>;

// Binomial coefficient with overflow checking (throws std::overflow_error).
long long binomial(int n, int k);

// q-ary Krawtchouk polynomial value
//   K_k(i) = sum_j (-1)^j (q-1)^(k-j) C(i,j) C(n-i, k-j).
long long krawtchouk(int n, int q, int k, int i);

struct DistanceDistribution {
    int n = 0, q = 0;
    std::vector<Rat> a;  // a[0..n], a[0] = 1 for nonempty codes

    Rat code_size() const {
        Rat s = 0;
        for (const auto& v : a) s += v;
        return s;
    }
};

// A_i = |{(u,v) in C^2 : d(u,v) = i}| / |C|, by pairwise scan.
DistanceDistribution distance_distribution(const CodeSet& c);

struct MacWilliamsResult {
    DistanceDistribution dual;       // A'_k = (1/|C|) sum_i A_i K_k(i)
    std::vector<int> negative_at;    // indices with A'_k < 0 (invalid input)
    bool valid() const { return negative_at.empty(); }
};

MacWilliamsResult macwilliams(const DistanceDistribution& d);

}  // namespace crcodes
