// Small dense linear algebra over GF(2^k) on length-4 row vectors.
// Convention used throughout: vectors are rows, linear maps act on the right
// (v -> v*M), planes are dual row vectors with incidence <v, pi> = 0.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lgh/gf.hpp"

namespace lgh {

using Vec4 = std::array<gf_t, 4>;
using Mat2x4 = std::array<Vec4, 2>;
using Mat4 = std::array<Vec4, 4>;

inline gf_t dot4(const GF& f, const Vec4& a, const Vec4& b) {
    gf_t s = 0;
    for (int i = 0; i < 4; ++i) s ^= f.mul(a[i], b[i]);
    return s;
}

inline Vec4 add4(const Vec4& a, const Vec4& b) {
    return {gf_t(a[0] ^ b[0]), gf_t(a[1] ^ b[1]), gf_t(a[2] ^ b[2]), gf_t(a[3] ^ b[3])};
}

inline Vec4 scale4(const GF& f, gf_t c, const Vec4& a) {
    return {f.mul(c, a[0]), f.mul(c, a[1]), f.mul(c, a[2]), f.mul(c, a[3])};
}

inline bool is_zero4(const Vec4& a) { return !(a[0] | a[1] | a[2] | a[3]); }

// Scale so the first nonzero coordinate becomes 1. Zero vector stays zero.
Vec4 normalize4(const GF& f, Vec4 v);

// In-place reduced row echelon form; returns the rank. Rows beyond the rank
// are zeroed. The RREF of a subspace's spanning set is its unique canonical
// basis, which is what makes line encodings comparable.
int rref(const GF& f, std::vector<Vec4>& rows);

// Basis of the right null space {v : M v^T = 0} of the span of `rows`.
std::vector<Vec4> nullspace4(const GF& f, const std::vector<Vec4>& rows);

// v * M (row vector times matrix).
Vec4 apply_row(const GF& f, const Vec4& v, const Mat4& m);

Mat4 mat_mul(const GF& f, const Mat4& a, const Mat4& b);
std::optional<Mat4> mat_inverse(const GF& f, const Mat4& m);
Mat4 mat_transpose(const Mat4& m);
Mat4 mat_identity();

// Projective canonicalization: scale the whole matrix so the first nonzero
// entry in row-major order is 1.
Mat4 mat_normalize(const GF& f, Mat4 m);

} // namespace lgh
