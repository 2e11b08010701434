#include "crcodes/dist.hpp"

#include <stdexcept>

namespace crcodes {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

}  // namespace

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

long long krawtchouk(int n, int q, int k, int i) {
    long long sum = 0;
    for (int j = 0; j <= k; ++j) {
        long long t = checked_mul(binomial(i, j), binomial(n - i, k - j));
        for (int e = 0; e < k - j; ++e) t = checked_mul(t, q - 1);
        sum = checked_add(sum, (j & 1) ? -t : t);
    }
    return sum;
}

DistanceDistribution distance_distribution(const CodeSet& c) {
    if (c.empty()) throw std::invalid_argument("distance_distribution: empty code");
    const Space& sp = c.space();
    const auto& r = c.ranks();
    std::vector<long long> counts(sp.n() + 1, 0);
    counts[0] = static_cast<long long>(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            counts[sp.distance(r[i], r[j])] += 2;  // ordered pairs
    DistanceDistribution d;
    d.n = sp.n();
    d.q = sp.q();
    d.a.reserve(sp.n() + 1);
    const long long m = static_cast<long long>(r.size());
    for (int i = 0; i <= sp.n(); ++i) d.a.emplace_back(counts[i], m);
    return d;
}

MacWilliamsResult macwilliams(const DistanceDistribution& d) {
    MacWilliamsResult out;
    out.dual.n = d.n;
    out.dual.q = d.q;
    Rat size = 0;
    for (const auto& v : d.a) size += v;
    if (size <= 0) throw std::invalid_argument("macwilliams: empty distribution");
    for (int k = 0; k <= d.n; ++k) {
        Rat s = 0;
        for (int i = 0; i <= d.n; ++i)
            s += d.a[i] * Rat(krawtchouk(d.n, d.q, k, i));
        s /= size;
        if (s < 0) out.negative_at.push_back(k);
        out.dual.a.push_back(s);
    }
    return out;
}

}  // namespace crcodes
