// Exact arithmetic in GF(2^k), k <= 4. Elements are bit-coded polynomials:
// bit i of the code is the coefficient of x^i. Addition is XOR; multiplication
// is carry-less polynomial product reduced modulo a fixed irreducible modulus.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lgh {

using gf_t = uint8_t;

// Fixed moduli: k=1 -> x, k=2 -> x^2+x+1, k=3 -> x^3+x+1, k=4 -> x^4+x+1.
// With x^4+x+1 the element x itself is primitive in GF(16).
unsigned default_modulus(int k);

// Irreducibility over GF(2) by trial division against every lower-degree
// polynomial of degree >= 1.
bool gf2_poly_irreducible(unsigned poly);

class GF {
public:
    explicit GF(int k) : GF(k, default_modulus(k)) {}
    GF(int k, unsigned modulus);

    static GF of_order(int q); // q in {2,4,8,16}

    int k() const { return k_; }
    int order() const { return 1 << k_; } // field size q = 2^k
    unsigned modulus() const { return modulus_; }

    gf_t add(gf_t a, gf_t b) const { return a ^ b; }
    gf_t mul(gf_t a, gf_t b) const { return mul_[(a << 4) | b]; }
    gf_t inv(gf_t a) const {
        if (a == 0) throw std::domain_error("GF: division by zero");
        return inv_[a];
    }
    gf_t div(gf_t a, gf_t b) const { return mul(a, inv(b)); }
    gf_t pow(gf_t a, unsigned e) const;
    gf_t frobenius(gf_t a) const { return mul(a, a); } // a -> a^2

    // Smallest n >= 1 with a^n = 1; divides 2^k - 1.
    int element_order(gf_t a) const;

    bool valid(gf_t a) const { return a < (1 << k_); }

private:
    int k_;
    unsigned modulus_;
    std::array<gf_t, 256> mul_{}; // (a<<4)|b, codes < 16
    std::array<gf_t, 16> inv_{};
};

// The fixed ring embedding GF(4) -> GF(16) sending omega (code 2) to
// zeta^5 (code 6), the order-3 power of the GF(16) generator.
gf_t embed_gf4_gf16(gf_t a);

} // namespace lgh
