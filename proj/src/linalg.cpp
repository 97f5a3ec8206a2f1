#include "lgh/linalg.hpp"

namespace lgh {

Vec4 normalize4(const GF& f, Vec4 v) {
    for (int i = 0; i < 4; ++i) {
        if (v[i]) {
            if (v[i] != 1) v = scale4(f, f.inv(v[i]), v);
            break;
        }
    }
    return v;
}

int rref(const GF& f, std::vector<Vec4>& rows) {
    int rank = 0;
    for (int col = 0; col < 4 && rank < (int)rows.size(); ++col) {
        int pivot = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r][col]) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        if (rows[rank][col] != 1) rows[rank] = scale4(f, f.inv(rows[rank][col]), rows[rank]);
        for (int r = 0; r < (int)rows.size(); ++r)
            if (r != rank && rows[r][col])
                rows[r] = add4(rows[r], scale4(f, rows[r][col], rows[rank]));
        ++rank;
    }
    for (int r = rank; r < (int)rows.size(); ++r) rows[r] = Vec4{0, 0, 0, 0};
    return rank;
}

std::vector<Vec4> nullspace4(const GF& f, const std::vector<Vec4>& rows) {
    std::vector<Vec4> m = rows;
    int rank = rref(f, m);
    // Pivot columns of the RREF.
    std::array<int, 4> pivot_row{-1, -1, -1, -1};
    int r = 0;
    for (int col = 0; col < 4 && r < rank; ++col) {
        if (m[r][col] == 1) {
            bool is_pivot = true;
            for (int rr = 0; rr < rank; ++rr)
                if (rr != r && m[rr][col]) { is_pivot = false; break; }
            // In RREF the first nonzero entry of row r is its pivot.
            int lead = 0;
            while (lead < 4 && m[r][lead] == 0) ++lead;
            if (is_pivot && lead == col) {
                pivot_row[col] = r;
                ++r;
            }
        }
    }
    std::vector<Vec4> basis;
    for (int free_col = 0; free_col < 4; ++free_col) {
        if (pivot_row[free_col] >= 0) continue;
        Vec4 v{0, 0, 0, 0};
        v[free_col] = 1;
        for (int col = 0; col < 4; ++col)
            if (pivot_row[col] >= 0) v[col] = m[pivot_row[col]][free_col];
        basis.push_back(v);
    }
    return basis;
}

Vec4 apply_row(const GF& f, const Vec4& v, const Mat4& m) {
    Vec4 r{0, 0, 0, 0};
    for (int j = 0; j < 4; ++j) {
        gf_t s = 0;
        for (int i = 0; i < 4; ++i) s ^= f.mul(v[i], m[i][j]);
        r[j] = s;
    }
    return r;
}

Mat4 mat_mul(const GF& f, const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i) r[i] = apply_row(f, a[i], b);
    return r;
}

std::optional<Mat4> mat_inverse(const GF& f, const Mat4& m) {
    // Gauss-Jordan on [m | I].
    std::array<std::array<gf_t, 8>, 4> a{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
        a[i][4 + i] = 1;
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (a[r][col]) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        std::swap(a[col], a[pivot]);
        if (a[col][col] != 1) {
            gf_t s = f.inv(a[col][col]);
            for (int j = 0; j < 8; ++j) a[col][j] = f.mul(s, a[col][j]);
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || !a[r][col]) continue;
            gf_t s = a[r][col];
            for (int j = 0; j < 8; ++j) a[r][j] ^= f.mul(s, a[col][j]);
        }
    }
    Mat4 inv{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[i][j] = a[i][4 + j];
    return inv;
}

Mat4 mat_transpose(const Mat4& m) {
    Mat4 t{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = m[j][i];
    return t;
}

Mat4 mat_identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

Mat4 mat_normalize(const GF& f, Mat4 m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m[i][j]) {
                if (m[i][j] != 1) {
                    gf_t s = f.inv(m[i][j]);
                    for (int r = 0; r < 4; ++r) m[r] = scale4(f, s, m[r]);
                }
                return m;
            }
    return m;
}

} // namespace lgh
