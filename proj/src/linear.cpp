#include "crcodes/linear.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crcodes {

int gf_rref(const FieldTable& f, GFMatrix& m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        std::uint8_t iv = f.inv(m[r][c]);
        for (int j = 0; j < cols; ++j) m[r][j] = f.mul(m[r][j], iv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !m[i][c]) continue;
            std::uint8_t t = m[i][c];
            for (int j = 0; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(t, m[r][j]));
        }
        ++r;
    }
    return r;
}

GFMatrix gf_nullspace(const FieldTable& f, const GFMatrix& m) {
    if (m.empty()) return {};
    GFMatrix red = m;
    int rank = gf_rref(f, red);
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < rank; ++i) {
        int c = 0;
        while (c < cols && !red[i][c]) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    GFMatrix basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint8_t> v(cols, 0);
        v[c] = 1;
        for (int i = 0; i < rank; ++i)
            v[pivot_col[i]] = f.neg(f.mul(red[i][c], 1));
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearCode::LinearCode(FieldTable field, int n, GFMatrix generator)
    : field_(std::move(field)), n_(n), gen_(std::move(generator)) {
    for (const auto& row : gen_) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("LinearCode: row length mismatch");
        for (auto v : row)
            if (v >= field_.q()) throw std::invalid_argument("LinearCode: symbol out of range");
    }
    GFMatrix copy = gen_;
    if (gf_rref(field_, copy) != static_cast<int>(gen_.size()))
        throw std::invalid_argument("LinearCode: generator rows are dependent");
}

std::uint64_t LinearCode::size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < k(); ++i) s *= field_.q();
    return s;
}

void LinearCode::for_codewords(
    const std::function<void(const std::vector<std::uint8_t>&)>& f) const {
    std::vector<std::uint8_t> msg(k(), 0), cw(n_, 0);
    for (;;) {
        f(cw);
        // odometer increment; codeword updated incrementally per digit change
        int i = 0;
        for (; i < k(); ++i) {
            std::uint8_t old = msg[i];
            msg[i] = (old + 1 == field_.q()) ? 0 : old + 1;
            // cw += (msg[i]-old) * row_i
            std::uint8_t d = field_.sub(msg[i], old);
            for (int j = 0; j < n_; ++j)
                cw[j] = field_.add(cw[j], field_.mul(d, gen_[i][j]));
            if (msg[i] != 0) break;
        }
        if (i == k()) break;
    }
}

CodeSet LinearCode::codewords() const {
    Space sp(n_, field_.q());
    std::vector<std::uint64_t> ranks;
    ranks.reserve(size());
    for_codewords([&](const std::vector<std::uint8_t>& cw) { ranks.push_back(sp.rank(cw)); });
    return CodeSet(sp, std::move(ranks));
}

std::vector<std::uint64_t> LinearCode::weight_distribution() const {
    std::vector<std::uint64_t> a(n_ + 1, 0);
    for_codewords([&](const std::vector<std::uint8_t>& cw) {
        int w = 0;
        for (auto s : cw)
            if (s) ++w;
        ++a[w];
    });
    return a;
}

int LinearCode::min_weight() const {
    auto a = weight_distribution();
    for (int w = 1; w <= n_; ++w)
        if (a[w]) return w;
    return 0;
}

LinearCode hamming_code(int m, const FieldTable& field) {
    if (m < 2) throw std::invalid_argument("hamming_code: m must be >= 2");
    const int q = field.q();
    // lexicographically minimal projective representatives: first nonzero
    // coordinate equals 1
    std::vector<std::vector<std::uint8_t>> cols;
    std::vector<std::uint8_t> v(m, 0);
    for (;;) {
        int i = 0;
        while (i < m && v[i] == q - 1) v[i++] = 0;
        if (i == m) break;
        ++v[i];
        int fn = 0;
        while (fn < m && !v[fn]) ++fn;
        if (v[fn] == 1) cols.push_back(v);
    }
    std::sort(cols.begin(), cols.end());
    const int n = static_cast<int>(cols.size());
    GFMatrix h(m, std::vector<std::uint8_t>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = cols[j][i];
    GFMatrix gen = gf_nullspace(field, h);
    return LinearCode(field, n, std::move(gen));
}

LinearCode extend_parity(const LinearCode& c) {
    const FieldTable& f = c.field();
    GFMatrix gen = c.generator();
    for (auto& row : gen) {
        std::uint8_t s = 0;
        for (auto v : row) s = f.add(s, v);
        row.push_back(f.neg(s));
    }
    return LinearCode(f, c.n() + 1, std::move(gen));
}

CodeSet max_weight_retraction(const LinearCode& c) {
    const int n = c.n();
    Space target(n, c.field().q() - 1);
    std::vector<std::uint64_t> ranks;
    std::vector<std::uint8_t> shifted(n);
    c.for_codewords([&](const std::vector<std::uint8_t>& cw) {
        for (int i = 0; i < n; ++i) {
            if (!cw[i]) return;
            shifted[i] = cw[i] - 1;
        }
        ranks.push_back(target.rank(shifted));
    });
    if (ranks.empty())
        throw std::domain_error("max_weight_retraction: no full-weight codewords");
    return CodeSet(target, std::move(ranks));
}

LinearCode read_linear_code(std::istream& in) {
    std::string line;
    int lineno = 0, n = -1, k = -1, q = -1;
    GFMatrix gen;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> k >> q)) throw ParseError(lineno, "expected header 'n k q'");
            continue;
        }
        std::vector<std::uint8_t> row(n);
        for (int i = 0; i < n; ++i) {
            int v;
            if (!(ss >> v)) throw ParseError(lineno, "short generator row");
            if (v < 0 || v >= q) throw ParseError(lineno, "symbol out of range");
            row[i] = static_cast<std::uint8_t>(v);
        }
        gen.push_back(std::move(row));
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (static_cast<int>(gen.size()) != k)
        throw ParseError(lineno, "expected " + std::to_string(k) + " generator rows");
    return LinearCode(FieldTable(q), n, std::move(gen));
}

LinearCode read_linear_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_linear_code(in);
}

void write_linear_code(std::ostream& out, const LinearCode& c) {
    out << c.n() << ' ' << c.k() << ' ' << c.field().q() << '\n';
    for (const auto& row : c.generator()) {
        for (int i = 0; i < c.n(); ++i) {
            if (i) out << ' ';
            out << int(row[i]);
        }
        out << '\n';
    }
}

}  // namespace crcodes
