#include "crcodes/gf.hpp"

namespace crcodes {

namespace {

bool is_prime(int p) {
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return p > 1;
}

}  // namespace

FieldTable::FieldTable(int q) : q_(q) {
    int p, m;
    switch (q) {
        case 2: case 3: case 5: case 7: p = q; m = 1; break;
        case 4: p = 2; m = 2; break;
        case 8: p = 2; m = 3; break;
        case 9: p = 3; m = 2; break;
        default:
            throw std::invalid_argument("FieldTable: unsupported order " + std::to_string(q));
    }
    (void)is_prime;

    // Modulus coefficients for x^m, little-endian in base p.
    // GF(4): x^2 = x+1; GF(8): x^3 = x+1; GF(9): x^2 = -1 = 2.
    int red[3] = {0, 0, 0};
    if (q == 4) { red[0] = 1; red[1] = 1; }
    if (q == 8) { red[0] = 1; red[1] = 1; }
    if (q == 9) { red[0] = 2; }

    auto digits = [&](int a, int* d) {
        for (int i = 0; i < m; ++i) { d[i] = a % p; a /= p; }
    };
    auto undigits = [&](const int* d) {
        int a = 0;
        for (int i = m - 1; i >= 0; --i) a = a * p + d[i];
        return a;
    };

    for (int a = 0; a < q; ++a) {
        int da[3], dn[3];
        digits(a, da);
        for (int i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = static_cast<std::uint8_t>(undigits(dn));
        for (int b = 0; b < q; ++b) {
            int db[3], ds[3];
            digits(b, db);
            for (int i = 0; i < m; ++i) ds[i] = (da[i] + db[i]) % p;
            add_[a][b] = static_cast<std::uint8_t>(undigits(ds));
            // polynomial product, reduced degree by degree from the top
            int prod[5] = {0, 0, 0, 0, 0};
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int d = 2 * m - 2; d >= m; --d) {
                int c = prod[d];
                if (!c) continue;
                prod[d] = 0;
                for (int i = 0; i < m; ++i)
                    prod[d - m + i] = (prod[d - m + i] + c * red[i]) % p;
            }
            mul_[a][b] = static_cast<std::uint8_t>(undigits(prod));
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a][b] == 1) inv_[a] = static_cast<std::uint8_t>(b);

    for (int g = 2; g < q; ++g) {
        int order = 1, x = g;
        while (x != 1) { x = mul_[x][g]; ++order; }
        if (order == q - 1) { gen_ = static_cast<std::uint8_t>(g); break; }
    }
    if (q == 2) gen_ = 1;
    verify();
}

void FieldTable::verify() const {
    const int q = q_;
    for (int a = 0; a < q; ++a) {
        if (add_[a][0] != a || mul_[a][1] != a || mul_[a][0] != 0)
            throw std::logic_error("FieldTable: identity axiom failed");
        if (add_[a][neg_[a]] != 0)
            throw std::logic_error("FieldTable: additive inverse failed");
        if (a && mul_[a][inv_[a]] != 1)
            throw std::logic_error("FieldTable: multiplicative inverse failed");
        for (int b = 0; b < q; ++b) {
            if (add_[a][b] != add_[b][a] || mul_[a][b] != mul_[b][a])
                throw std::logic_error("FieldTable: commutativity failed");
            for (int c = 0; c < q; ++c) {
                if (add_[add_[a][b]][c] != add_[a][add_[b][c]])
                    throw std::logic_error("FieldTable: additive associativity failed");
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw std::logic_error("FieldTable: multiplicative associativity failed");
                if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]])
                    throw std::logic_error("FieldTable: distributivity failed");
            }
        }
    }
    if (q > 2) {
        int order = 1, x = gen_;
        while (x != 1) { x = mul_[x][gen_]; ++order; }
        if (order != q - 1) throw std::logic_error("FieldTable: primitive element wrong");
    }
}

}  // namespace crcodes
