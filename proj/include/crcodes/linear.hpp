#pragma once

// Linear codes over small finite fields: generator-matrix representation,
// codeword enumeration, Hamming codes, parity extension, and the
// maximum-weight retraction into H(n, q-1).

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "crcodes/codeset.hpp"
#include "crcodes/gf.hpp"
#include "crcodes/space.hpp"

namespace crcodes {

using GFMatrix = std::vector<std::vector<std::uint8_t>>;

// Reduced row echelon form in place; returns the rank.
int gf_rref(const FieldTable& f, GFMatrix& m);
// Basis of the right nullspace {x : m x^T = 0}.
GFMatrix gf_nullspace(const FieldTable& f, const GFMatrix& m);

class LinearCode {
public:
    LinearCode(FieldTable field, int n, GFMatrix generator);

    const FieldTable& field() const { return field_; }
    int n() const { return n_; }
    int k() const { return static_cast<int>(gen_.size()); }
    const GFMatrix& generator() const { return gen_; }
    std::uint64_t size() const;  // q^k

    // Visits every codeword once (message vectors in odometer order).
    void for_codewords(const std::function<void(const std::vector<std::uint8_t>&)>& f) const;

    // Codewords as a CodeSet in H(n, q).
    CodeSet codewords() const;
    // Weight enumerator A_0..A_n by full enumeration.
    std::vector<std::uint64_t> weight_distribution() const;
    int min_weight() const;

private:
    FieldTable field_;
    int n_;
    GFMatrix gen_;  // k x n, rows linearly independent
};

// The q-ary Hamming code of redundancy m: parity-check columns are the
// lexicographically minimal representatives of the projective points of
// PG(m-1, q), sorted lexicographically.  Parameters [(q^m-1)/(q-1), n-m, 3].
LinearCode hamming_code(int m, const FieldTable& field);

// Appends an overall parity coordinate (field-sum of each row negated so
// that every codeword sums to zero).
LinearCode extend_parity(const LinearCode& c);

// The set of maximum-weight (weight n) codewords, re-read as words of
// H(n, q-1) via symbol map s -> s-1.  Throws std::domain_error if the code
// has no full-weight codewords.
CodeSet max_weight_retraction(const LinearCode& c);

// --- plain-text linear code files ------------------------------------------
// Line 1: "n k q"; then k generator rows of n digits.
LinearCode read_linear_code(std::istream& in);
LinearCode read_linear_code_file(const std::string& path);
void write_linear_code(std::ostream& out, const LinearCode& c);

}  // namespace crcodes
