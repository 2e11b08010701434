#include "crcodes/quotient.hpp"

#include <boost/rational.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crcodes {

bool QuotientMatrix::tridiagonal() const {
    for (int i = 0; i < k(); ++i)
        for (int j = 0; j < k(); ++j)
            if (std::abs(i - j) > 1 && s(i, j) != 0) return false;
    return true;
}

bool QuotientMatrix::row_sums_ok(const Space& sp) const {
    for (int i = 0; i < k(); ++i)
        if (s.row(i).sum() != sp.degree()) return false;
    return true;
}

std::string QuotientMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < k(); ++i) {
        out << (i ? "\n" : "");
        for (int j = 0; j < k(); ++j) out << (j ? " " : "") << s(i, j);
    }
    return out.str();
}

std::string IntersectionArray::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
    out << ';';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << '}';
    return out.str();
}

IntersectionArray IntersectionArray::parse(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') t.push_back(ch);
    auto semi = t.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("IntersectionArray: missing ';' in " + text);
    auto parse_list = [&](const std::string& part) {
        std::vector<std::int64_t> out;
        std::string cur;
        std::istringstream ss(part);
        while (std::getline(ss, cur, ','))
            if (!cur.empty()) out.push_back(std::stoll(cur));
        return out;
    };
    IntersectionArray a;
    a.b = parse_list(t.substr(0, semi));
    a.c = parse_list(t.substr(semi + 1));
    if (a.b.size() != a.c.size())
        throw std::invalid_argument("IntersectionArray: need as many b as c entries");
    for (std::size_t i = 0; i + 1 < a.c.size(); ++i)
        if (a.c[i] <= 0) throw std::invalid_argument("IntersectionArray: c entries must be positive");
    if (!a.c.empty() && a.c.back() <= 0)
        throw std::invalid_argument("IntersectionArray: c entries must be positive");
    for (auto v : a.b)
        if (v <= 0) throw std::invalid_argument("IntersectionArray: b entries must be positive");
    return a;
}

QuotientMatrix array_to_quotient(const IntersectionArray& a, const Space& sp) {
    const int rho = a.rho();
    const std::int64_t deg = sp.degree();
    IMat s = IMat::Zero(rho + 1, rho + 1);
    for (int i = 0; i <= rho; ++i) {
        std::int64_t bi = (i < rho) ? a.b[i] : 0;
        std::int64_t ci = (i > 0) ? a.c[i - 1] : 0;
        std::int64_t diag = deg - bi - ci;
        if (diag < 0)
            throw std::domain_error("array " + a.to_string() + " infeasible in H(" +
                                    std::to_string(sp.n()) + "," + std::to_string(sp.q()) +
                                    "): negative diagonal at cell " + std::to_string(i));
        if (i < rho) s(i, i + 1) = bi;
        if (i > 0) s(i, i - 1) = ci;
        s(i, i) = diag;
    }
    return QuotientMatrix{std::move(s)};
}

std::optional<IntersectionArray> quotient_to_array(const QuotientMatrix& q) {
    if (!q.tridiagonal()) return std::nullopt;
    IntersectionArray a;
    for (int i = 0; i + 1 < q.k(); ++i) {
        if (q.s(i, i + 1) <= 0 || q.s(i + 1, i) <= 0) return std::nullopt;
        a.b.push_back(q.s(i, i + 1));
        a.c.push_back(q.s(i + 1, i));
    }
    return a;
}

CellSizesResult cell_sizes(const QuotientMatrix& q, const Space& sp) {
    using R = boost::rational<long long>;
    const int k = q.k();
    CellSizesResult res;
    // ratios relative to cell 0 along a spanning tree of the support graph
    std::vector<R> ratio(k, R(0));
    std::vector<bool> seen(k, false);
    ratio[0] = 1;
    seen[0] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < k; ++j) {
            if (i == j || seen[j]) continue;
            if (q.s(i, j) > 0 || q.s(j, i) > 0) {
                if (q.s(i, j) <= 0 || q.s(j, i) <= 0) {
                    res.reason = "one-sided edge between cells " + std::to_string(i) + " and " +
                                 std::to_string(j);
                    return res;
                }
                ratio[j] = ratio[i] * R(q.s(i, j), q.s(j, i));
                seen[j] = true;
                stack.push_back(j);
            }
        }
    }
    for (int j = 0; j < k; ++j)
        if (!seen[j]) {
            res.reason = "cell " + std::to_string(j) + " unreachable in the quotient";
            return res;
        }
    // consistency of every balance pair, not only the spanning tree
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if ((q.s(i, j) > 0) != (q.s(j, i) > 0)) {
                res.reason = "one-sided edge between cells " + std::to_string(i) + " and " +
                             std::to_string(j);
                return res;
            }
            if (q.s(i, j) > 0 && ratio[i] * q.s(i, j) != ratio[j] * q.s(j, i)) {
                res.reason = "balance equation fails between cells " + std::to_string(i) +
                             " and " + std::to_string(j);
                return res;
            }
        }
    R total = 0;
    for (int j = 0; j < k; ++j) total += ratio[j];
    R s0 = R(static_cast<long long>(sp.size())) / total;
    for (int j = 0; j < k; ++j) {
        R sj = s0 * ratio[j];
        if (sj.denominator() != 1) {
            res.reason = "cell " + std::to_string(j) + " size is not an integer (" +
                         std::to_string(sj.numerator()) + "/" + std::to_string(sj.denominator()) +
                         ")";
            return res;
        }
        if (sj <= 0) {
            res.reason = "cell " + std::to_string(j) + " size is not positive";
            return res;
        }
        res.sizes.push_back(sj.numerator());
    }
    res.feasible = true;
    return res;
}

SpectrumResult sphere_spectrum(const QuotientMatrix& q, const Space& sp) {
    const int k = q.k();
    const int n = sp.n();
    const std::int64_t qm2 = sp.q() - 2, qm1 = sp.q() - 1;
    SpectrumResult res;
    res.p.reserve(n + 1);
    res.p.push_back(IMat::Identity(k, k));
    if (n >= 1) res.p.push_back(q.s);
    for (int d = 1; d < n; ++d) {
        IMat num = res.p[d] * q.s - std::int64_t(d) * qm2 * res.p[d] -
                   std::int64_t(n - d + 1) * qm1 * res.p[d - 1];
        IMat next(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                std::int64_t v = num(i, j);
                if (v % (d + 1) != 0) {
                    res.certificate = "P_" + std::to_string(d + 1) + " entry (" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      ") is not an integer";
                    return res;
                }
                v /= (d + 1);
                if (v < 0) {
                    res.certificate = "P_" + std::to_string(d + 1) + " entry (" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      ") is negative";
                    return res;
                }
                next(i, j) = v;
            }
        res.p.push_back(std::move(next));
    }
    res.feasible = true;
    return res;
}

SpectrumTable sphere_spectrum_table(const QuotientMatrix& q, const Space& sp, int anchor_cell) {
    if (anchor_cell < 0 || anchor_cell >= q.k())
        throw std::invalid_argument("sphere_spectrum_table: anchor cell out of range");
    SpectrumResult r = sphere_spectrum(q, sp);
    SpectrumTable t;
    t.certificate = r.certificate;
    t.feasible = r.feasible;
    if (!r.feasible) return t;
    t.rows = IMat::Zero(sp.n() + 1, q.k());
    for (int d = 0; d <= sp.n(); ++d) t.rows.row(d) = r.p[d].row(anchor_cell);
    return t;
}

}  // namespace crcodes
