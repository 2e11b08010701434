#pragma once

// Vertex partitions of a Hamming space: distance partitions, equitability
// verification with witnesses, the equitable hull, Cartesian products, and
// the face-component decomposition of a last-layer cell.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crcodes/codeset.hpp"
#include "crcodes/quotient.hpp"
#include "crcodes/space.hpp"

namespace crcodes {

struct VertexPartition {
    Space space;
    int k = 0;
    std::vector<std::uint16_t> cell;  // cell index per rank
    std::vector<std::uint64_t> sizes;

    static VertexPartition from_cells(const Space& sp,
                                      const std::vector<std::vector<std::uint64_t>>& cells);
    std::vector<std::uint64_t> members(int c) const;
    CodeSet cell_set(int c) const;
};

// Cells = distance to the code, 0..rho.
VertexPartition distance_partition(const CodeSet& c);

// A vertex whose neighbor-count vector differs from its cell's reference row.
struct EquitabilityWitness {
    std::uint64_t vertex = 0;
    int cell = 0;
    std::vector<std::int64_t> counts;     // its neighbor counts per cell
    std::vector<std::int64_t> reference;  // the row established by the cell's
                                          // first vertex
};

struct QuotientOfResult {
    bool equitable = false;
    QuotientMatrix quotient;  // valid when equitable
    std::optional<EquitabilityWitness> witness;
};

QuotientOfResult quotient_of(const VertexPartition& p);

struct CrResult {
    bool completely_regular = false;
    int rho = 0;
    VertexPartition partition;
    QuotientMatrix quotient;          // valid when completely regular
    IntersectionArray array;          // valid when completely regular
    std::optional<EquitabilityWitness> witness;
};

// A code is completely regular iff its distance partition is equitable
// (the quotient is then automatically tridiagonal).
CrResult verify_cr(const CodeSet& c);

// Coarsest equitable partition refining the seed.  Deterministic cell order:
// by first-vertex rank, both during refinement and in the result.
VertexPartition equitable_hull(const VertexPartition& seed);

// Cartesian product partition on H(n1+n2, q): coordinates of the first
// factor are the low-significance block; cell((x,y)) = cell1(x)*k2 + cell2(y),
// so an equitable product has quotient S1 (+) S2 (Kronecker sum).
VertexPartition product_partition(const VertexPartition& a, const VertexPartition& b);

struct FaceComponentsResult {
    bool ok = false;
    std::vector<Face> faces;   // one per connected component
    std::string violation;     // which hypothesis failed, if any
};

// Checks the structure of a candidate last-layer cell D:
//  (a) every vertex outside D has at most one neighbor in D,
//  (b) each connected component of D is a face,
//  (c) distinct components are at distance >= 3.
FaceComponentsResult check_face_components(const CodeSet& d_set);

}  // namespace crcodes
