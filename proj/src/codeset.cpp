#include "crcodes/codeset.hpp"

#include <fstream>
#include <sstream>

namespace crcodes {

namespace {

// Visits all words obtained from `base` by changing the symbols at the d
// coordinate positions chosen from [start, n) to any non-current value.
void sphere_rec(const Space& sp, const std::vector<std::uint8_t>& center,
                std::vector<std::uint8_t>& cur, int start, int d,
                std::vector<std::uint64_t>& out) {
    if (d == 0) {
        out.push_back(sp.rank(cur));
        return;
    }
    for (int i = start; i <= sp.n() - d; ++i) {
        for (int s = 0; s < sp.q(); ++s) {
            if (s == center[i]) continue;
            cur[i] = static_cast<std::uint8_t>(s);
            sphere_rec(sp, center, cur, i + 1, d - 1, out);
        }
        cur[i] = center[i];
    }
}

}  // namespace

CodeSet sphere(const Word& center, int d) {
    const Space& sp = center.space();
    if (d < 0 || d > sp.n())
        throw std::invalid_argument("sphere: radius out of range");
    std::vector<std::uint64_t> out;
    std::vector<std::uint8_t> cur = center.symbols();
    sphere_rec(sp, center.symbols(), cur, 0, d, out);
    return CodeSet(sp, std::move(out));
}

std::optional<int> min_distance(const CodeSet& c) {
    if (c.size() < 2) return std::nullopt;
    const Space& sp = c.space();
    int best = sp.n() + 1;
    const auto& r = c.ranks();
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            int d = sp.distance(r[i], r[j]);
            if (d < best) best = d;
            if (best == 1) return best;
        }
    return best;
}

CodeSet Face::expand() const {
    std::vector<std::uint64_t> out;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free_coords.size(); ++i) count *= space.q();
    out.reserve(count);
    std::vector<int> digit(free_coords.size(), 0);
    for (;;) {
        std::uint64_t r = anchor;
        for (std::size_t i = 0; i < free_coords.size(); ++i)
            r += std::uint64_t(digit[i]) * space.pow(free_coords[i]);
        out.push_back(r);
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == space.q()) digit[i++] = 0;
        if (i == digit.size()) break;
    }
    return CodeSet(space, std::move(out));
}

bool Face::contains(std::uint64_t r) const { return distance_to(r) == 0; }

int Face::distance_to(std::uint64_t r) const {
    auto w = space.unrank(r);
    auto a = space.unrank(anchor);
    int d = 0;
    std::size_t fi = 0;
    for (int i = 0; i < space.n(); ++i) {
        if (fi < free_coords.size() && free_coords[fi] == i) {
            ++fi;
            continue;  // free coordinate matches anything
        }
        if (w[i] != a[i]) ++d;
    }
    return d;
}

int face_distance(const Face& a, const Face& b) {
    if (a.space != b.space)
        throw std::invalid_argument("face_distance: spaces differ");
    auto wa = a.space.unrank(a.anchor);
    auto wb = b.space.unrank(b.anchor);
    std::vector<bool> fr(a.space.n(), false);
    for (int i : a.free_coords) fr[i] = true;
    for (int i : b.free_coords) fr[i] = true;
    int d = 0;
    for (int i = 0; i < a.space.n(); ++i)
        if (!fr[i] && wa[i] != wb[i]) ++d;
    return d;
}

std::vector<Face> enumerate_rows(const Space& sp) {
    std::vector<Face> rows;
    rows.reserve(std::size_t(sp.n()) * (sp.size() / sp.q()));
    for (int j = 0; j < sp.n(); ++j) {
        // anchors: all words with coordinate j equal to 0
        std::uint64_t lo = sp.pow(j);          // span of coordinates < j
        std::uint64_t hi = sp.size() / (lo * sp.q());
        for (std::uint64_t h = 0; h < hi; ++h)
            for (std::uint64_t l = 0; l < lo; ++l)
                rows.push_back(Face{sp, {j}, h * lo * sp.q() + l});
    }
    return rows;
}

CodeSet read_code(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, q = -1;
    std::vector<std::uint64_t> ranks;
    Space sp;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> q)) throw ParseError(lineno, "expected header 'n q'");
            try {
                sp = Space(n, q);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            continue;
        }
        std::vector<std::uint8_t> sym(n);
        for (int i = 0; i < n; ++i) {
            int v;
            if (!(ss >> v)) throw ParseError(lineno, "expected " + std::to_string(n) + " symbols");
            if (v < 0 || v >= q) throw ParseError(lineno, "symbol out of range");
            sym[i] = static_cast<std::uint8_t>(v);
        }
        int extra;
        if (ss >> extra) throw ParseError(lineno, "trailing symbols");
        ranks.push_back(sp.rank(sym));
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    return CodeSet(sp, std::move(ranks));
}

CodeSet read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_code(in);
}

void write_code(std::ostream& out, const CodeSet& c) {
    out << c.space().n() << ' ' << c.space().q() << '\n';
    for (auto r : c.ranks()) {
        auto s = c.space().unrank(r);
        for (int i = 0; i < c.space().n(); ++i) {
            if (i) out << ' ';
            out << int(s[i]);
        }
        out << '\n';
    }
}

void write_code_file(const std::string& path, const CodeSet& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_code(out, c);
}

}  // namespace crcodes
