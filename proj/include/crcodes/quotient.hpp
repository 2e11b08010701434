#pragma once

// Quotient matrices of equitable partitions, intersection arrays, cell-size
// balance equations, and the sphere-spectrum recurrence.  All arithmetic is
// exact (64-bit integers / rationals); failures of integrality or
// nonnegativity are returned as certificates, not clamped.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crcodes/space.hpp"

namespace crcodes {

using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct QuotientMatrix {
    IMat s;

    int k() const { return static_cast<int>(s.rows()); }
    bool tridiagonal() const;
    // Every row must sum to the degree of the ambient space.
    bool row_sums_ok(const Space& sp) const;
    std::string to_string() const;
};

// Intersection array {b_0,..,b_{rho-1}; c_1,..,c_rho}.
struct IntersectionArray {
    std::vector<std::int64_t> b, c;

    int rho() const { return static_cast<int>(c.size()); }
    std::string to_string() const;
    // Accepts "{13,6,1;1,6,9}" or "13,6,1;1,6,9".  Radius 0 is "{;}".
    static IntersectionArray parse(const std::string& text);
    bool operator==(const IntersectionArray& o) const { return b == o.b && c == o.c; }
};

// Tridiagonal quotient from an array: S[i][i+1] = b_i, S[i][i-1] = c_i,
// diagonal fills each row up to n(q-1).  Throws std::domain_error when a
// diagonal entry would be negative (array infeasible for this space).
QuotientMatrix array_to_quotient(const IntersectionArray& a, const Space& sp);

// Inverse direction; nullopt when the matrix is not tridiagonal or an
// off-diagonal entry vanishes where the chain should continue.
std::optional<IntersectionArray> quotient_to_array(const QuotientMatrix& q);

struct CellSizesResult {
    bool feasible = false;
    std::vector<std::int64_t> sizes;
    std::string reason;  // set when infeasible
};

// Solves the balance equations s_i S_ij = s_j S_ji together with
// sum s_i = q^n; infeasible when the system is inconsistent, disconnected,
// non-integral, or non-positive.
CellSizesResult cell_sizes(const QuotientMatrix& q, const Space& sp);

struct SpectrumResult {
    bool feasible = false;
    // P[d] has entry (i,j) = vertices of cell j at distance d from a cell-i
    // vertex; d = 0..n.
    std::vector<IMat> p;
    std::string certificate;  // set when infeasible: where integrality or
                              // nonnegativity first failed
};

// Sphere-spectrum recurrence: P_0 = I, P_1 = S,
//   (d+1) P_{d+1} = P_d S - d(q-2) P_d - (n-d+1)(q-1) P_{d-1}.
// Every entry must stay a nonnegative integer; the first violation is
// reported as a nonexistence certificate.
SpectrumResult sphere_spectrum(const QuotientMatrix& q, const Space& sp);

// Convenience: the anchored table, rows d = 0..n, columns = cells, taken
// from row `anchor_cell` of each P_d.
struct SpectrumTable {
    bool feasible = false;
    IMat rows;
    std::string certificate;
};
SpectrumTable sphere_spectrum_table(const QuotientMatrix& q, const Space& sp, int anchor_cell);

}  // namespace crcodes
