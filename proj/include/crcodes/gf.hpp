#pragma once

// Finite-field arithmetic tables for q in {2,3,4,5,7,8,9}.  Elements are
// encoded as 0..q-1; for prime powers the encoding is little-endian base-p
// digits of the polynomial representation.  Fixed irreducible polynomials:
// GF(4): x^2+x+1,  GF(8): x^3+x+1,  GF(9): x^2+1 over GF(3).

#include <array>
#include <cstdint>
#include <stdexcept>

namespace crcodes {

class FieldTable {
public:
    explicit FieldTable(int q);

    int q() const { return q_; }
    std::uint8_t add(int a, int b) const { return add_[a][b]; }
    std::uint8_t sub(int a, int b) const { return add_[a][neg_[b]]; }
    std::uint8_t mul(int a, int b) const { return mul_[a][b]; }
    std::uint8_t neg(int a) const { return neg_[a]; }
    std::uint8_t inv(int a) const {
        if (a == 0) throw std::domain_error("FieldTable: inverse of zero");
        return inv_[a];
    }
    // A fixed primitive element (smallest generator of the unit group).
    std::uint8_t primitive() const { return gen_; }

    // Exhaustive verification of the field axioms; throws on failure.
    void verify() const;

private:
    int q_;
    std::array<std::array<std::uint8_t, 16>, 16> add_{}, mul_{};
    std::array<std::uint8_t, 16> neg_{}, inv_{};
    std::uint8_t gen_ = 0;
};

}  // namespace crcodes
