#include "crcodes/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace crcodes {

namespace {
constexpr std::uint16_t kUnset = 0xffff;
}

VertexPartition VertexPartition::from_cells(
    const Space& sp, const std::vector<std::vector<std::uint64_t>>& cells) {
    VertexPartition p;
    p.space = sp;
    p.k = static_cast<int>(cells.size());
    if (p.k < 1 || p.k > 0xfffe) throw std::invalid_argument("VertexPartition: bad cell count");
    p.cell.assign(sp.size(), kUnset);
    p.sizes.assign(p.k, 0);
    for (int c = 0; c < p.k; ++c) {
        for (auto r : cells[c]) {
            if (r >= sp.size()) throw std::invalid_argument("VertexPartition: rank out of range");
            if (p.cell[r] != kUnset) throw std::invalid_argument("VertexPartition: cells overlap");
            p.cell[r] = static_cast<std::uint16_t>(c);
        }
        p.sizes[c] = cells[c].size();
        if (p.sizes[c] == 0) throw std::invalid_argument("VertexPartition: empty cell");
    }
    for (auto c : p.cell)
        if (c == kUnset) throw std::invalid_argument("VertexPartition: cells do not cover the space");
    return p;
}

std::vector<std::uint64_t> VertexPartition::members(int c) const {
    std::vector<std::uint64_t> out;
    out.reserve(sizes[c]);
    for (std::uint64_t r = 0; r < cell.size(); ++r)
        if (cell[r] == c) out.push_back(r);
    return out;
}

CodeSet VertexPartition::cell_set(int c) const { return CodeSet(space, members(c)); }

VertexPartition distance_partition(const CodeSet& c) {
    if (c.empty()) throw std::invalid_argument("distance_partition: empty code");
    const Space& sp = c.space();
    VertexPartition p;
    p.space = sp;
    p.cell.assign(sp.size(), kUnset);
    std::vector<std::uint64_t> frontier = c.ranks(), next;
    for (auto r : frontier) p.cell[r] = 0;
    int d = 0;
    std::uint64_t placed = frontier.size();
    p.sizes.push_back(frontier.size());
    while (placed < sp.size()) {
        ++d;
        next.clear();
        for (auto r : frontier)
            sp.for_neighbors(r, [&](std::uint64_t nb) {
                if (p.cell[nb] == kUnset) {
                    p.cell[nb] = static_cast<std::uint16_t>(d);
                    next.push_back(nb);
                }
            });
        if (next.empty()) throw std::logic_error("distance_partition: space not connected");
        p.sizes.push_back(next.size());
        placed += next.size();
        frontier.swap(next);
    }
    p.k = d + 1;
    return p;
}

QuotientOfResult quotient_of(const VertexPartition& p) {
    const Space& sp = p.space;
    const int k = p.k;
    QuotientOfResult res;
    IMat s = IMat::Constant(k, k, -1);
    std::vector<std::int64_t> counts(k);
    for (std::uint64_t r = 0; r < sp.size(); ++r) {
        std::fill(counts.begin(), counts.end(), 0);
        sp.for_neighbors(r, [&](std::uint64_t nb) { ++counts[p.cell[nb]]; });
        const int ci = p.cell[r];
        if (s(ci, 0) == -1 && std::none_of(counts.begin(), counts.end(),
                                           [&](std::int64_t) { return false; })) {
            // first vertex of this cell seen: establish its reference row
            bool fresh = true;
            for (int j = 0; j < k; ++j)
                if (s(ci, j) != -1) fresh = false;
            if (fresh) {
                for (int j = 0; j < k; ++j) s(ci, j) = counts[j];
                continue;
            }
        }
        for (int j = 0; j < k; ++j) {
            if (s(ci, j) != counts[j]) {
                EquitabilityWitness w;
                w.vertex = r;
                w.cell = ci;
                w.counts = counts;
                w.reference.assign(k, 0);
                for (int t = 0; t < k; ++t) w.reference[t] = s(ci, t);
                res.witness = std::move(w);
                return res;
            }
        }
    }
    res.equitable = true;
    res.quotient = QuotientMatrix{std::move(s)};
    return res;
}

CrResult verify_cr(const CodeSet& c) {
    CrResult res;
    res.partition = distance_partition(c);
    res.rho = res.partition.k - 1;
    QuotientOfResult q = quotient_of(res.partition);
    if (!q.equitable) {
        res.witness = q.witness;
        return res;
    }
    res.quotient = q.quotient;
    auto arr = quotient_to_array(res.quotient);
    if (!arr) throw std::logic_error("verify_cr: equitable distance partition not tridiagonal");
    res.array = *arr;
    res.completely_regular = true;
    return res;
}

VertexPartition equitable_hull(const VertexPartition& seed) {
    const Space& sp = seed.space;
    if (sp.size() > (std::uint64_t(1) << 24))
        throw std::invalid_argument("equitable_hull: space too large");
    std::vector<std::uint16_t> color(seed.cell.begin(), seed.cell.end());
    int k = seed.k;
    for (;;) {
        // signature: (current color, neighbor counts per color)
        std::map<std::vector<std::int64_t>, std::uint16_t> next_id;
        std::vector<std::uint16_t> next(sp.size());
        std::vector<std::int64_t> sig(k + 1);
        for (std::uint64_t r = 0; r < sp.size(); ++r) {
            std::fill(sig.begin(), sig.end(), 0);
            sig[0] = color[r];
            sp.for_neighbors(r, [&](std::uint64_t nb) { ++sig[1 + color[nb]]; });
            auto it = next_id.find(sig);
            if (it == next_id.end())
                it = next_id.emplace(sig, static_cast<std::uint16_t>(next_id.size())).first;
            next[r] = it->second;
        }
        int nk = static_cast<int>(next_id.size());
        // map ids to first-vertex-rank order
        std::vector<std::uint16_t> order(nk, 0xffff);
        std::uint16_t assigned = 0;
        for (std::uint64_t r = 0; r < sp.size() && assigned < nk; ++r)
            if (order[next[r]] == 0xffff) order[next[r]] = assigned++;
        for (auto& c : next) c = order[c];
        bool same = (nk == k);
        color.swap(next);
        k = nk;
        if (same) break;
    }
    VertexPartition out;
    out.space = sp;
    out.k = k;
    out.cell = std::move(color);
    out.sizes.assign(k, 0);
    for (auto c : out.cell) ++out.sizes[c];
    return out;
}

VertexPartition product_partition(const VertexPartition& a, const VertexPartition& b) {
    if (a.space.q() != b.space.q())
        throw std::invalid_argument("product_partition: alphabet sizes differ");
    Space sp(a.space.n() + b.space.n(), a.space.q());
    VertexPartition out;
    out.space = sp;
    out.k = a.k * b.k;
    out.cell.resize(sp.size());
    out.sizes.assign(out.k, 0);
    const std::uint64_t block = a.space.size();
    for (std::uint64_t y = 0; y < b.space.size(); ++y) {
        const std::uint32_t cy = b.cell[y];
        for (std::uint64_t x = 0; x < block; ++x) {
            std::uint16_t c = static_cast<std::uint16_t>(a.cell[x] * b.k + cy);
            out.cell[y * block + x] = c;
            ++out.sizes[c];
        }
    }
    return out;
}

FaceComponentsResult check_face_components(const CodeSet& d_set) {
    FaceComponentsResult res;
    const Space& sp = d_set.space();
    const auto& mem = d_set.ranks();
    const int m = static_cast<int>(mem.size());
    if (m == 0) {
        res.ok = true;
        return res;
    }
    d_set.build_bitset();

    // (a) outside vertices with two inside neighbors arise exactly from
    // member pairs at distance 1 (shared row) or 2 (two middle vertices)
    for (int i = 0; i < m; ++i) {
        auto wi = sp.unrank(mem[i]);
        for (int j = i + 1; j < m; ++j) {
            auto wj = sp.unrank(mem[j]);
            std::vector<int> diff;
            for (int t = 0; t < sp.n() && static_cast<int>(diff.size()) <= 2; ++t)
                if (wi[t] != wj[t]) diff.push_back(t);
            if (diff.size() == 1) {
                int t = diff[0];
                for (int s = 0; s < sp.q(); ++s) {
                    if (s == wi[t] || s == wj[t]) continue;
                    std::uint64_t v = mem[i] + (std::int64_t(s) - wi[t]) * sp.pow(t);
                    if (!d_set.contains(v)) {
                        res.violation = "outside vertex " + std::to_string(v) +
                                        " has two neighbors inside";
                        return res;
                    }
                }
            } else if (diff.size() == 2) {
                for (int pick = 0; pick < 2; ++pick) {
                    int t = diff[pick];
                    std::uint64_t v = mem[i] + (std::int64_t(wj[t]) - wi[t]) * sp.pow(t);
                    if (!d_set.contains(v)) {
                        res.violation = "outside vertex " + std::to_string(v) +
                                        " has two neighbors inside";
                        return res;
                    }
                }
            }
        }
    }

    // connected components via union-find over distance-1 pairs
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (sp.distance(mem[i], mem[j]) == 1) parent[find(i)] = find(j);

    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < m; ++i) comps[find(i)].push_back(i);

    // (b) each component must be a face
    for (const auto& [root, idx] : comps) {
        auto w0 = sp.unrank(mem[idx[0]]);
        std::vector<bool> varies(sp.n(), false);
        for (int i : idx) {
            auto w = sp.unrank(mem[i]);
            for (int t = 0; t < sp.n(); ++t)
                if (w[t] != w0[t]) varies[t] = true;
        }
        Face f;
        f.space = sp;
        auto anchor = w0;
        for (int t = 0; t < sp.n(); ++t)
            if (varies[t]) {
                f.free_coords.push_back(t);
                anchor[t] = 0;
            }
        f.anchor = sp.rank(anchor);
        CodeSet expanded = f.expand();
        std::vector<std::uint64_t> got;
        got.reserve(idx.size());
        for (int i : idx) got.push_back(mem[i]);
        std::sort(got.begin(), got.end());
        if (!(expanded.ranks() == got)) {
            res.violation = "component containing vertex " + std::to_string(mem[idx[0]]) +
                            " is not a face";
            return res;
        }
        res.faces.push_back(std::move(f));
    }

    // (c) distinct faces at distance >= 3
    for (std::size_t i = 0; i < res.faces.size(); ++i)
        for (std::size_t j = i + 1; j < res.faces.size(); ++j)
            if (face_distance(res.faces[i], res.faces[j]) < 3) {
                res.violation = "faces " + std::to_string(i) + " and " + std::to_string(j) +
                                " are at distance < 3";
                res.faces.clear();
                return res;
            }

    res.ok = true;
    return res;
}

}  // namespace crcodes
