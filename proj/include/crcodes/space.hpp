#pragma once

// Hamming space H(n,q): words of length n over {0,..,q-1}, adjacency = differ
// in exactly one coordinate.  Vertices are addressed by rank in little-endian
// mixed radix: coordinate 0 is the least significant digit, so the rank of a
// word x is sum_i x_i * q^i.  For q=2 the rank is the usual bitmask.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace crcodes {

class Space {
public:
    Space() : n_(0), q_(0) {}
    Space(int n, int q) : n_(n), q_(q) {
        if (n < 1 || n > 64)
            throw std::invalid_argument("Space: n must be in 1..64");
        if (q < 2 || q > 16)
            throw std::invalid_argument("Space: q must be in 2..16");
        pow_.resize(n + 1);
        pow_[0] = 1;
        for (int i = 1; i <= n; ++i) {
            if (pow_[i - 1] > std::numeric_limits<std::uint64_t>::max() / q)
                throw std::invalid_argument("Space: q^n does not fit in 64 bits");
            pow_[i] = pow_[i - 1] * q;
        }
    }

    int n() const { return n_; }
    int q() const { return q_; }
    std::uint64_t size() const { return pow_[n_]; }
    int degree() const { return n_ * (q_ - 1); }
    std::uint64_t pow(int i) const { return pow_[i]; }

    bool operator==(const Space& o) const { return n_ == o.n_ && q_ == o.q_; }
    bool operator!=(const Space& o) const { return !(*this == o); }

    std::uint64_t rank(const std::vector<std::uint8_t>& symbols) const {
        check_symbols(symbols);
        std::uint64_t r = 0;
        for (int i = n_ - 1; i >= 0; --i) r = r * q_ + symbols[i];
        return r;
    }

    std::vector<std::uint8_t> unrank(std::uint64_t r) const {
        if (r >= size()) throw std::out_of_range("Space::unrank: rank out of range");
        std::vector<std::uint8_t> s(n_);
        for (int i = 0; i < n_; ++i) {
            s[i] = static_cast<std::uint8_t>(r % q_);
            r /= q_;
        }
        return s;
    }

    int weight(std::uint64_t r) const {
        int w = 0;
        for (int i = 0; i < n_; ++i) {
            if (r % q_) ++w;
            r /= q_;
        }
        return w;
    }

    int distance(std::uint64_t a, std::uint64_t b) const {
        int d = 0;
        for (int i = 0; i < n_; ++i) {
            if (a % q_ != b % q_) ++d;
            a /= q_;
            b /= q_;
        }
        return d;
    }

    // Visits the n(q-1) neighbors of r in deterministic order
    // (coordinate 0..n-1, replacement symbols ascending).
    template <typename F>
    void for_neighbors(std::uint64_t r, F&& f) const {
        std::uint64_t rest = r;
        for (int i = 0; i < n_; ++i) {
            int d = static_cast<int>(rest % q_);
            rest /= q_;
            std::uint64_t base = r - std::uint64_t(d) * pow_[i];
            for (int s = 0; s < q_; ++s)
                if (s != d) f(base + std::uint64_t(s) * pow_[i]);
        }
    }

    void check_symbols(const std::vector<std::uint8_t>& s) const {
        if (static_cast<int>(s.size()) != n_)
            throw std::invalid_argument("Space: word length mismatch");
        for (auto v : s)
            if (v >= q_) throw std::invalid_argument("Space: symbol out of range");
    }

private:
    int n_, q_;
    std::vector<std::uint64_t> pow_;
};

class Word {
public:
    Word() = default;
    Word(const Space& sp, std::vector<std::uint8_t> symbols)
        : space_(sp), symbols_(std::move(symbols)) {
        space_.check_symbols(symbols_);
    }
    static Word from_rank(const Space& sp, std::uint64_t r) {
        return Word(sp, sp.unrank(r));
    }

    const Space& space() const { return space_; }
    const std::vector<std::uint8_t>& symbols() const { return symbols_; }
    std::uint8_t operator[](int i) const { return symbols_[i]; }
    int n() const { return space_.n(); }

    std::uint64_t rank() const { return space_.rank(symbols_); }
    int weight() const {
        int w = 0;
        for (auto s : symbols_)
            if (s) ++w;
        return w;
    }

    bool operator==(const Word& o) const {
        return space_ == o.space_ && symbols_ == o.symbols_;
    }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < n(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(int(symbols_[i]));
        }
        return out;
    }

private:
    Space space_;
    std::vector<std::uint8_t> symbols_;
};

inline int distance(const Word& a, const Word& b) {
    if (a.space() != b.space())
        throw std::invalid_argument("distance: words from different spaces");
    int d = 0;
    for (int i = 0; i < a.n(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

}  // namespace crcodes
