#include "lgh/gf.hpp"

namespace lgh {

namespace {

int poly_degree(unsigned p) {
    int d = -1;
    while (p) { ++d; p >>= 1; }
    return d;
}

// Carry-less product of two GF(2) polynomials.
unsigned poly_mul(unsigned a, unsigned b) {
    unsigned r = 0;
    for (int i = 0; b >> i; ++i)
        if ((b >> i) & 1) r ^= a << i;
    return r;
}

// Remainder of a modulo m (m != 0).
unsigned poly_mod(unsigned a, unsigned m) {
    int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; --da)
        if ((a >> da) & 1) a ^= m << (da - dm);
    return a;
}

} // namespace

unsigned default_modulus(int k) {
    switch (k) {
        case 1: return 0b10;    // x
        case 2: return 0b111;   // x^2 + x + 1
        case 3: return 0b1011;  // x^3 + x + 1
        case 4: return 0b10011; // x^4 + x + 1
        default: throw std::invalid_argument("GF: unsupported extension degree");
    }
}

bool gf2_poly_irreducible(unsigned poly) {
    int d = poly_degree(poly);
    if (d < 1) return false;
    for (unsigned f = 2; poly_degree(f) < d; ++f)
        if (poly_mod(poly, f) == 0) return false;
    return true;
}

GF::GF(int k, unsigned modulus) : k_(k), modulus_(modulus) {
    if (k < 1 || k > 4) throw std::invalid_argument("GF: k must be in 1..4");
    if (poly_degree(modulus) != k || !gf2_poly_irreducible(modulus))
        throw std::invalid_argument("GF: modulus is not an irreducible polynomial of degree k");
    const int q = 1 << k;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            mul_[(a << 4) | b] = static_cast<gf_t>(poly_mod(poly_mul(a, b), modulus));
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[(a << 4) | b] == 1) inv_[a] = static_cast<gf_t>(b);
}

GF GF::of_order(int q) {
    switch (q) {
        case 2: return GF(1);
        case 4: return GF(2);
        case 8: return GF(3);
        case 16: return GF(4);
        default: throw std::invalid_argument("GF: order must be one of 2,4,8,16");
    }
}

gf_t GF::pow(gf_t a, unsigned e) const {
    gf_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int GF::element_order(gf_t a) const {
    if (a == 0) throw std::domain_error("GF: zero has no multiplicative order");
    gf_t x = a;
    int n = 1;
    while (x != 1) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

gf_t embed_gf4_gf16(gf_t a) {
    // 0->0, 1->1, omega -> zeta^5 = y^2+y (code 6), omega^2 -> zeta^10 (code 7).
    static constexpr gf_t image[4] = {0, 1, 6, 7};
    if (a >= 4) throw std::invalid_argument("embed_gf4_gf16: not a GF(4) code");
    return image[a];
}

} // namespace lgh
